#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/scalar.hpp"

using namespace rhoform;

TEST_CASE("rational arithmetic") {
    CHECK(Scalar::from_rational(rat(1, 2)) + Scalar::from_rational(rat(1, 3)) ==
          Scalar::from_rational(rat(5, 6)));
    CHECK(Scalar(2) - Scalar(2) == Scalar::zero());
    CHECK(Scalar::from_rational(rat(5, 6)).to_string() == "5/6");
}

TEST_CASE("roots of unity reduce mod the cyclotomic polynomial") {
    // n = 4: eps^2 * eps^3 = eps since eps^4 = 1; Phi_4 = x^2+1 makes eps^2 = -1
    CHECK(Scalar::eps_power(4, 2) * Scalar::eps_power(4, 3) == Scalar::eps_power(4, 1));
    CHECK(Scalar::eps_power(4, 2) == -Scalar::one());
    CHECK(Scalar::eps_power(4, 2).to_string() == "-1");
    // primitivity for small orders
    for (int n : {2, 3, 4, 5, 6}) {
        CHECK(Scalar::eps_power(n, 1).pow(n) == Scalar::one());
        for (int k = 1; k < n; ++k) CHECK(Scalar::eps_power(n, 1).pow(k) != Scalar::one());
    }
}

TEST_CASE("Laurent arithmetic in q") {
    CHECK(Scalar::q_power(2) / Scalar::q_power(3) == Scalar::q_power(-1));
    CHECK(Scalar::q_power(-1).to_string() == "q^-1");
    Scalar f = (Scalar::one() + Scalar::q_power(1)) / (Scalar::one() - Scalar::q_power(1));
    CHECK(f.to_string() == "(1+q)/(1-q)");
    CHECK(f * (Scalar::one() - Scalar::q_power(1)) == Scalar::one() + Scalar::q_power(1));
}

TEST_CASE("is_unit") {
    CHECK_FALSE(Scalar::zero().is_unit());
    CHECK(Scalar::q_power(-3).is_unit());
    CHECK_FALSE((Scalar::eps_power(4, 1) - Scalar::eps_power(4, 1)).is_unit());
}

TEST_CASE("canonical representations") {
    // same value along different routes has an identical representation
    Scalar a = Scalar::q_power(1) + Scalar::one();
    Scalar b = (Scalar::q_power(2) - Scalar::one()) / (Scalar::q_power(1) - Scalar::one());
    CHECK(a == b);
    CHECK((a - b).is_zero());
    // eps-free cyclotomics demote to plain rationals
    Scalar c = Scalar::eps_power(4, 1) * Scalar::eps_power(4, 3); // = 1
    CHECK(c == Scalar::one());
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), Error);
    CHECK_THROWS_AS(Scalar::zero().pow(-1), Error);
    try {
        Scalar::eps_power(3, 1) * Scalar::eps_power(4, 1);
        FAIL("expected IncompatibleRootOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IncompatibleRootOrder);
    }
    // trivial order mixes freely
    CHECK(Scalar(2) * Scalar::eps_power(4, 1) == Scalar::eps_power(4, 1) + Scalar::eps_power(4, 1));
}

TEST_CASE("specializing q to a root of unity") {
    // q := eps_4 turns (1+q)/q into (1+eps)/eps = eps^-1 + 1 = 1 - eps ... computed exactly
    Scalar f = (Scalar::one() + Scalar::q_power(1)) / Scalar::q_power(1);
    Scalar eps = Scalar::eps_power(4, 1);
    CHECK(f.substitute_q(eps) == (Scalar::one() + eps) / eps);
    CHECK(Scalar::q_power(4).substitute_q(eps) == Scalar::one());
    CHECK_THROWS_AS(f.substitute_q(Scalar::zero()), Error);
    // a denominator can vanish at the specialization point
    Scalar g = Scalar::one() / (Scalar::one() - Scalar::q_power(1));
    CHECK_THROWS_AS(g.substitute_q(Scalar::one()), Error);
}

TEST_CASE("field axiom suite") {
    CheckConfig cfg;
    cfg.scale_percent = 25;
    CheckResult r = check_scalars(cfg);
    std::string detail = r.failures.empty() ? std::string() : r.failures.front();
    INFO(detail);
    CHECK(r.passed);
}
