#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/form.hpp"

using namespace rhoform;

namespace {

struct Fixture {
    PresentationPtr s2 = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(s2->group());
    AlgebraElement x1 = AlgebraElement::generator(s2, 0);
    AlgebraElement x2 = AlgebraElement::generator(s2, 1);
    Form fx1 = Form::from_element(x1, phi);
    Form fx2 = Form::from_element(x2, phi);
    Form dx1 = Form::generator_differential(s2, phi, 0);
    Form dx2 = Form::generator_differential(s2, phi, 1);
};

} // namespace

TEST_CASE("differential basics") {
    Fixture f;
    CHECK(Form::from_element(AlgebraElement::unit(f.s2), f.phi).differential().is_zero());
    CHECK(f.dx1.differential().is_zero());
    CHECK((f.fx1 * f.dx2).differential() == f.dx1 * f.dx2);
}

TEST_CASE("product rewrites from the rightmost slot") {
    Fixture f;
    Form dx1x2 = Form::from_element(f.x1 * f.x2, f.phi).differential();
    CHECK(f.dx1 * f.fx2 == dx1x2 - f.fx1 * f.dx2);
    CHECK(f.fx1 * (f.fx2 * f.dx1) == Form::from_element(f.x1 * f.x2, f.phi) * f.dx1);
    // concatenation when the right factor has unit head
    Form expected = Form::tensor(
        f.s2, f.phi,
        FormTensor{f.s2->generator_monomial(0),
                   {f.s2->generator_monomial(1), f.s2->generator_monomial(0)}});
    CHECK((f.fx1 * f.dx2) * f.dx1 == expected);
}

TEST_CASE("graded Leibniz rule") {
    Fixture f;
    CHECK(leibniz_check(f.fx1, f.dx2));
    CHECK(leibniz_check(f.dx1, f.dx2));
    CHECK(leibniz_check(f.dx1, f.fx2));
    CHECK_THROWS_AS(leibniz_check(f.fx1 + f.dx2, f.fx1), Error); // NonHomogeneous
}

TEST_CASE("bidegrees") {
    Fixture f;
    CHECK((f.fx1 * f.dx2).bidegree() ==
          Bidegree{1, Grade(f.s2->group(), {1, 1})});
    CHECK((f.dx1 * f.dx2).bidegree() == Bidegree{2, Grade(f.s2->group(), {1, 1})});
    CHECK_THROWS_AS((f.fx1 + f.dx2).bidegree(), Error);
    CHECK_THROWS_AS(Form::zero(f.s2, f.phi).bidegree(), Error);
}

TEST_CASE("phi mismatch is rejected") {
    Fixture f;
    GradedUnitHom phi2(f.s2->group(), {Scalar(-1), Scalar::one()});
    Form other = Form::generator_differential(f.s2, phi2, 0);
    CHECK_THROWS_AS(f.dx1 + other, Error);
    CHECK_THROWS_AS(f.dx1 * other, Error);
}

TEST_CASE("nontrivial phi twists the rewriting") {
    // on k[Z_4] with phi(g1) = eps_4: (d g1) g1 = d(g1^2) - eps g1 d(g1)
    auto cyc = AlgebraPresentation::cyclic_group(4);
    GradedUnitHom phi(cyc->group(), {Scalar::eps_power(4, 1)});
    AlgebraElement g = AlgebraElement::generator(cyc, 0);
    Form fg = Form::from_element(g, phi);
    Form dg = Form::from_element(g, phi).differential();
    Form dg2 = Form::from_element(g * g, phi).differential();
    CHECK(dg * fg == dg2 - Scalar::eps_power(4, 1) * (fg * dg));
    CHECK(leibniz_check(fg, dg));
    CHECK(leibniz_check(dg, fg));
}

TEST_CASE("torsion wraps reduce into scalars under d and products") {
    // clock-shift n=2: g2^2 = -1, so (d g2) g2 = -g2 d(g2): the d(g2^2) term
    // is d of a scalar and vanishes
    auto cs2 = AlgebraPresentation::clock_shift(2);
    GradedUnitHom phi = GradedUnitHom::trivial(cs2->group());
    AlgebraElement g2 = AlgebraElement::generator(cs2, 1);
    Form fg = Form::from_element(g2, phi);
    Form dg = fg.differential();
    CHECK(dg * fg == -(fg * dg));
    CHECK(leibniz_check(fg, fg * dg));
    // associativity across wraps
    Form a = dg * fg, b = fg * dg, c = dg;
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("component enumeration") {
    Fixture f;
    auto basis = component_basis_tensors(f.s2, 1, Grade(f.s2->group(), {1, 1}));
    REQUIRE(basis.size() == 3);
    // {1 (x1x2)bar, x1 x2bar, x2 x1bar} in canonical order
    CHECK(basis[0] == FormTensor{f.s2->unit_monomial(), {Monomial{1, 1}}});
    CHECK(basis[1] == FormTensor{Monomial{0, 1}, {Monomial{1, 0}}});
    CHECK(basis[2] == FormTensor{Monomial{1, 0}, {Monomial{0, 1}}});
    // negative grades have empty components
    CHECK(component_basis_tensors(f.s2, 1, Grade(f.s2->group(), {-1, 0})).empty());
}

TEST_CASE("universal calculus suite") {
    CheckConfig cfg;
    cfg.scale_percent = 20;
    CheckResult r = check_universal_calculus(cfg);
    std::string detail = r.failures.empty() ? std::string() : r.failures.front();
    INFO(detail);
    CHECK(r.passed);
}
