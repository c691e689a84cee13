#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/grading.hpp"
#include "rhoform/parser.hpp"

using namespace rhoform;

TEST_CASE("grade addition") {
    GradeGroup z2 = GradeGroup::free(2);
    CHECK(Grade(z2, {1, 0}) + Grade(z2, {0, 1}) == Grade(z2, {1, 1}));

    GradeGroup z3z3(0, {3, 3});
    CHECK(Grade(z3z3, {2, 1}) + Grade(z3z3, {2, 2}) == Grade(z3z3, {1, 0}));

    Grade a(z2, {4, -7});
    CHECK(a + Grade::zero(z2) == a);

    GradeGroup other = GradeGroup::free(3);
    CHECK_THROWS_AS(Grade(z2, {1, 0}) + Grade(other, {1, 0, 0}), Error);
}

TEST_CASE("quantum plane cocycle values") {
    Cocycle rho = Cocycle::quantum_plane(2);
    Grade e1 = Grade::generator(rho.group(), 0);
    Grade e2 = Grade::generator(rho.group(), 1);
    CHECK(rho.eval(e1, e2) == Scalar::q_power(1));
    CHECK(rho.eval(e2, e1) == Scalar::q_power(-1));
    Grade n(rho.group(), {3, -2});
    CHECK(rho.eval(n, n) == Scalar::one());
}

TEST_CASE("clock-shift cocycle sign matches the matrix relation") {
    // p q = eps q p forces rho((1,0),(0,1)) = eps, not the inverse
    for (int n : {2, 3, 4}) {
        Cocycle rho = Cocycle::clock_shift(n);
        Grade e1 = Grade::generator(rho.group(), 0);
        Grade e2 = Grade::generator(rho.group(), 1);
        CHECK(rho.eval(e1, e2) == Scalar::eps_power(n, 1));
        CHECK(rho.eval(e2, e1) == Scalar::eps_power(n, -1));
    }
}

TEST_CASE("cocycle validation rejects bad pairing data") {
    GradeGroup z1 = GradeGroup::free(1);
    // rho(e,e) must be +-1
    CHECK_THROWS_AS(Cocycle(z1, {{Scalar::q_power(1)}}), Error);
    // torsion well-definedness: s^n must be 1
    GradeGroup z2(0, {2});
    CHECK_THROWS_AS(Cocycle(z2, {{Scalar::eps_power(4, 1)}}), Error);
}

TEST_CASE("extended cocycle on Zbar") {
    Cocycle rho = Cocycle::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(rho.group());
    ExtendedCocycle rb(rho, phi);
    Grade zero = Grade::zero(rho.group());
    Grade alpha(rho.group(), {2, -1});

    // rhobar((1,0),(n,alpha)) = (-1)^n with phi trivial
    for (long n = -2; n <= 3; ++n) {
        Scalar expect = (n % 2 == 0) ? Scalar::one() : -Scalar::one();
        CHECK(rb.eval(Bidegree{1, zero}, Bidegree{n, alpha}) == expect);
    }
    // restriction to G x G is rho
    Grade beta(rho.group(), {1, 1});
    CHECK(rb.eval(Bidegree{0, alpha}, Bidegree{0, beta}) == rho.eval(alpha, beta));
    // rhobar((1,0),(1,0)) = -1
    CHECK(rb.eval(Bidegree{1, zero}, Bidegree{1, zero}) == -Scalar::one());
    // alternating sign rule
    CHECK(rb.eval(Bidegree{1, zero}, Bidegree{3, alpha}) +
              rb.eval(Bidegree{1, zero}, Bidegree{2, alpha}) ==
          Scalar::zero());
}

TEST_CASE("phi validation") {
    GradeGroup z4(0, {4});
    CHECK_NOTHROW(GradedUnitHom(z4, {Scalar::eps_power(4, 1)}));
    CHECK_THROWS_AS(GradedUnitHom(z4, {Scalar::q_power(1)}), Error); // q^4 != 1
    CHECK_THROWS_AS(GradedUnitHom(z4, {Scalar::zero()}), Error);
}

TEST_CASE("group spec strings round trip") {
    CHECK(parse_grade_group("Z^2") == GradeGroup::free(2));
    CHECK(parse_grade_group("Z3+Z3") == GradeGroup(0, {3, 3}));
    CHECK(parse_grade_group("Z^2+Z4") == GradeGroup(2, {4}));
    CHECK(GradeGroup::free(2).to_string() == "Z^2");
    CHECK(GradeGroup(0, {3, 3}).to_string() == "Z3+Z3");
    for (const std::string& s : {"Z^2", "Z3+Z3", "Z+Z2+Z5"})
        CHECK(parse_grade_group(s).to_string() == s);
    CHECK_THROWS_AS(parse_grade_group("Q^2"), Error);
}

TEST_CASE("cocycle law suite") {
    CheckConfig cfg;
    cfg.scale_percent = 10;
    CheckResult r = check_cocycle_laws(cfg);
    std::string detail = r.failures.empty() ? std::string() : r.failures.front();
    INFO(detail);
    CHECK(r.passed);
}
