#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/derivation.hpp"
#include "rhoform/errors.hpp"

using namespace rhoform;

TEST_CASE("twisted Leibniz application") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    auto x1 = AlgebraElement::generator(s2, 0);
    auto x2 = AlgebraElement::generator(s2, 1);

    // one Leibniz step with rho(-e2, e1) = q
    CHECK(d2.apply(x1 * x2) == Scalar::q_power(1) * x1);
    CHECK(d1.apply(x1 * x1) == Scalar(2) * x1);
    CHECK(d1.apply(AlgebraElement::unit(s2)).is_zero());
}

TEST_CASE("module structure") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    auto x1 = AlgebraElement::generator(s2, 0);
    auto x2 = AlgebraElement::generator(s2, 1);

    CHECK(d1.left_scaled(x1).apply(x1) == x1);
    CHECK(d1.left_scaled(AlgebraElement::unit(s2)) == d1);
    CHECK(d1.right_scaled(AlgebraElement::unit(s2)) == d1);
    // (d1) x1 = rho(-e1,e1) x1 d1 = x1 d1
    CHECK(d1.right_scaled(x1) == d1.left_scaled(x1));
    // (d2) x1 = rho(-e2,e1) x1 d2 = q x1 d2
    CHECK(d2.right_scaled(x1) == d2.left_scaled(x1).scaled(Scalar::q_power(1)));

    // both evaluation orders of the twisted Leibniz rule for x1 d1
    Derivation xd1 = d1.left_scaled(x1);
    Grade gx1 = x1.grade();
    Scalar tw = s2->rho().eval(gx1 + d1.degree(), gx1);
    CHECK(xd1.apply(x1 * x2) == xd1.apply(x1) * x2 + tw * (x1 * xd1.apply(x2)));
}

TEST_CASE("bracket") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    auto x1 = AlgebraElement::generator(s2, 0);

    CHECK(derivation_bracket(d1, d2).is_zero());
    CHECK(derivation_bracket(d1, d1).is_zero()); // rho(-e1,-e1) = 1

    // operator-composition oracle for [x1 d1, d1] on x1
    Derivation xd1 = d1.left_scaled(x1);
    Derivation br = derivation_bracket(xd1, d1);
    Scalar tw = s2->rho().eval(xd1.degree(), d1.degree());
    CHECK(br.apply(x1) == xd1.apply(d1.apply(x1)) - tw * d1.apply(xd1.apply(x1)));
    CHECK(br.apply(x1) == -x1.presentation()->rho().eval(xd1.degree(), d1.degree()) *
                              AlgebraElement::unit(s2));
}

TEST_CASE("construction validates eagerly") {
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto x2 = AlgebraElement::generator(s2, 1);
    // X(x1) = x2 with degree -e1 has the wrong grade
    std::vector<AlgebraElement> bad = {x2, AlgebraElement::zero(s2)};
    CHECK_THROWS_AS(Derivation(s2, -Grade::generator(s2->group(), 0), bad), Error);

    // torsion power relations kill coordinate-style values on clock-shift
    auto cs2 = AlgebraPresentation::clock_shift(2);
    std::vector<AlgebraElement> vals = {AlgebraElement::unit(cs2), AlgebraElement::zero(cs2)};
    CHECK_THROWS_AS(Derivation(cs2, -Grade::generator(cs2->group(), 0), vals), Error);
}

TEST_CASE("derivation law suite") {
    CheckConfig cfg;
    cfg.scale_percent = 30;
    CheckResult r = check_derivations(cfg);
    std::string detail = r.failures.empty() ? std::string() : r.failures.front();
    INFO(detail);
    CHECK(r.passed);
}
