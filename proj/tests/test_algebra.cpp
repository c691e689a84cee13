#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/matrix_oracle.hpp"

using namespace rhoform;

namespace {

// Test-local construction of the clock and phased-shift matrices, kept
// independent of ClockShiftOracle: p = diag(1,eps,...,eps^{n-1}) and
// q[0][n-1] = 1, q[i][i-1] = eps^i.
ScalarMatrix local_clock(int n) {
    ScalarMatrix m(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        m.at(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar::eps_power(n, i);
    return m;
}

ScalarMatrix local_shift(int n) {
    ScalarMatrix m(static_cast<size_t>(n), static_cast<size_t>(n));
    m.at(0, static_cast<size_t>(n - 1)) = Scalar::one();
    for (int i = 1; i < n; ++i)
        m.at(static_cast<size_t>(i), static_cast<size_t>(i - 1)) = Scalar::eps_power(n, i);
    return m;
}

ScalarMatrix local_model(int n, const Monomial& mono) {
    ScalarMatrix r = ScalarMatrix::identity(static_cast<size_t>(n));
    for (long i = 0; i < mono[0]; ++i) r = r * local_clock(n);
    for (long i = 0; i < mono[1]; ++i) r = r * local_shift(n);
    return r;
}

} // namespace

TEST_CASE("monomial structure constants") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto [c, m] = s2->monomial_mul({0, 1}, {1, 0}); // x2 * x1
    CHECK(c == Scalar::q_power(-1));
    CHECK(m == Monomial{1, 1});

    auto cs = AlgebraPresentation::clock_shift(3);
    auto [cc, cm] = cs->monomial_mul({0, 1}, {1, 0}); // g2 * p = eps^-1 p g2
    CHECK(cc == Scalar::eps_power(3, -1));
    CHECK(cm == Monomial{1, 1});

    auto [cu, mu] = s2->monomial_mul({0, 0}, {2, 3});
    CHECK(cu == Scalar::one());
    CHECK(mu == Monomial{2, 3});
}

TEST_CASE("element products") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto x1 = AlgebraElement::generator(s2, 0);
    auto x2 = AlgebraElement::generator(s2, 1);
    AlgebraElement sum = x1 + x2;
    CHECK(sum * sum ==
          x1 * x1 + (Scalar::one() + Scalar::q_power(-1)) * (x1 * x2) + x2 * x2);
    CHECK(AlgebraElement::unit(s2) * sum == sum);

    // clock-shift n=2: p g2 p = -p^2 g2 = -g2, matching the literal matrices
    auto cs2 = AlgebraPresentation::clock_shift(2);
    auto p = AlgebraElement::generator(cs2, 0);
    auto g2 = AlgebraElement::generator(cs2, 1);
    CHECK(p * g2 * p == -g2);
    ScalarMatrix lhs = local_model(2, {1, 0}) * local_model(2, {0, 1}) * local_model(2, {1, 0});
    ScalarMatrix rhs = local_model(2, {0, 1}).scaled(-Scalar::one());
    CHECK(lhs == rhs);
}

TEST_CASE("rho-commutator") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto x1 = AlgebraElement::generator(s2, 0);
    auto x2 = AlgebraElement::generator(s2, 1);
    CHECK(rho_commutator(x1, x2).is_zero());
    CHECK(rho_commutator(x1 * x2, x1 * x2).is_zero());
    CHECK_THROWS_AS(rho_commutator(x1 + x2, x1), Error); // NonHomogeneous

    auto cs2 = AlgebraPresentation::clock_shift(2);
    CHECK(rho_commutator(AlgebraElement::generator(cs2, 0),
                         AlgebraElement::generator(cs2, 1))
              .is_zero());
}

TEST_CASE("grade_of") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto x1 = AlgebraElement::generator(s2, 0);
    auto x2 = AlgebraElement::generator(s2, 1);
    CHECK((x1 * x2 * x2).grade() == Grade(s2->group(), {1, 2}));
    CHECK_THROWS_AS((x1 + x2).grade(), Error);
    CHECK_THROWS_AS(AlgebraElement::zero(s2).grade(), Error);

    auto cs3 = AlgebraPresentation::clock_shift(3);
    auto p = AlgebraElement::generator(cs3, 0);
    auto g2 = AlgebraElement::generator(cs3, 1);
    CHECK((p * p * g2).grade() == Grade(cs3->group(), {2, 1}));
    // torsion reduction: p^2 * p^2 has grade (1,0)
    CHECK((p * p * p * p).grade() == Grade(cs3->group(), {1, 0}));
}

TEST_CASE("matrix oracle agrees with the independent construction") {
    for (int n : {2, 3}) {
        auto cs = AlgebraPresentation::clock_shift(n);
        ClockShiftOracle oracle(n);
        CHECK(oracle.clock() == local_clock(n));
        CHECK(oracle.shift() == local_shift(n));
        // p q = eps q p on the literal matrices
        CHECK(local_clock(n) * local_shift(n) ==
              (local_shift(n) * local_clock(n)).scaled(Scalar::eps_power(n, 1)));
        // abstract product = matrix product on all basis pairs
        for (const auto& a : cs->all_monomials()) {
            for (const auto& b : cs->all_monomials()) {
                auto ua = AlgebraElement::monomial(cs, a);
                auto ub = AlgebraElement::monomial(cs, b);
                CHECK(local_model(n, a) * local_model(n, b) == oracle.model(ua * ub));
            }
        }
        CHECK(oracle.basis_rank() == static_cast<size_t>(n * n));
    }
}

TEST_CASE("shift wraparound carries the scalar q^n") {
    // the phased shift matrix satisfies q^n = eps^{n(n-1)/2}; for n=2 that is
    // -1, so g2*g2 = -1 abstractly as well
    auto cs2 = AlgebraPresentation::clock_shift(2);
    auto g2 = AlgebraElement::generator(cs2, 1);
    CHECK(g2 * g2 == -AlgebraElement::unit(cs2));
    ScalarMatrix sq = local_shift(2) * local_shift(2);
    CHECK(sq == ScalarMatrix::identity(2).scaled(-Scalar::one()));
    // for odd n the wrap is trivial
    auto cs3 = AlgebraPresentation::clock_shift(3);
    auto h = AlgebraElement::generator(cs3, 1);
    CHECK(h * h * h == AlgebraElement::unit(cs3));
}

TEST_CASE("presentation mismatch is rejected") {
    auto a = AlgebraPresentation::quantum_plane(2);
    auto b = AlgebraPresentation::quantum_plane(3);
    CHECK_THROWS_AS(AlgebraElement::generator(a, 0) * AlgebraElement::generator(b, 0), Error);
}

TEST_CASE("product law suites") {
    CheckConfig cfg;
    cfg.scale_percent = 25;
    for (auto fn : {check_algebra_product, check_rho_commutativity, check_matrix_oracle}) {
        CheckResult r = fn(cfg);
        std::string detail = r.name + (r.failures.empty() ? std::string() : ": " + r.failures.front());
        INFO(detail);
        CHECK(r.passed);
    }
}
