#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/omega_derivation.hpp"
#include "rhoform/random_gen.hpp"

using namespace rhoform;

namespace {

struct Fixture {
    PresentationPtr s2 = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(s2->group());
    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    FieldValuedForm kx = FieldValuedForm::from_derivation(d1, phi);
    FieldValuedForm id = FieldValuedForm::identity(s2, phi);
    Form fx1 = Form::from_element(AlgebraElement::generator(s2, 0), phi);
    Form fx2 = Form::from_element(AlgebraElement::generator(s2, 1), phi);
    Form dx1 = Form::generator_differential(s2, phi, 0);
    Form dx2 = Form::generator_differential(s2, phi, 1);
};

} // namespace

TEST_CASE("field / hom correspondence") {
    Fixture f;
    CHECK(f.kx.apply(f.dx1) == Form::from_element(AlgebraElement::unit(f.s2), f.phi));
    CHECK(f.kx.apply(f.dx2).is_zero());
    CHECK(f.kx.apply(f.fx1 * f.dx2).is_zero());
    CHECK(f.kx.to_derivation() == f.d1);
    CHECK(FieldValuedForm::from_derivation(Derivation::zero(f.s2, Grade::zero(f.s2->group())),
                                           f.phi)
              .is_zero());
    // f . d = X on a product
    AlgebraElement u = AlgebraElement::generator(f.s2, 0) * AlgebraElement::generator(f.s2, 1);
    CHECK(f.kx.apply(Form::from_element(u, f.phi).differential()) ==
          Form::from_element(f.d1.apply(u), f.phi));
}

TEST_CASE("contraction") {
    Fixture f;
    CHECK(contract(f.kx, f.fx2 * f.dx1) == Scalar::q_power(-1) * f.fx2);
    CHECK(contract(f.kx, f.dx1 * f.dx2) == f.dx2);
    CHECK(contract(f.kx, f.fx1).is_zero());
    // j_id scales degree-n forms by n
    Form deg2 = f.dx1 * f.dx2;
    CHECK(contract(f.id, deg2) == Scalar(2) * deg2);
    CHECK(contract(f.id, f.fx1 * f.dx2) == f.fx1 * f.dx2);
}

TEST_CASE("Lie derivative") {
    Fixture f;
    for (const Form& w : {f.fx1, f.fx1 * f.dx2, f.dx1 * f.dx2})
        CHECK(lie_derivative(f.id, w) == w.differential());
    AlgebraElement u = AlgebraElement::generator(f.s2, 0) * AlgebraElement::generator(f.s2, 1);
    Form fu = Form::from_element(u, f.phi);
    CHECK(lie_derivative(f.kx, fu) == f.kx.apply(fu.differential()));
}

TEST_CASE("omega derivation bracket") {
    Fixture f;
    OmegaDerivation d = OmegaDerivation::exterior_d(f.s2, f.phi);
    CHECK(omega_derivation_bracket(d, d).is_zero());
    OmegaDerivation jx = OmegaDerivation::from_contraction(f.kx);
    OmegaDerivation lx = omega_derivation_bracket(jx, d);
    CHECK(lx.degree() == Bidegree{0, f.kx.grade()});
    for (const Form& w : {f.fx1, f.fx1 * f.dx2, f.dx2 * f.dx1})
        CHECK(lx.apply(w) == lie_derivative(f.kx, w));
    // degree additivity
    CHECK(omega_derivation_bracket(jx, jx).degree() ==
          Bidegree{-2, f.kx.grade() + f.kx.grade()});
}

TEST_CASE("derivation decomposition") {
    Fixture f;
    auto [kd, ld] = decompose_derivation(OmegaDerivation::exterior_d(f.s2, f.phi));
    CHECK(kd == f.id);
    CHECK(ld.is_zero());
    auto [ka, la] = decompose_derivation(OmegaDerivation::from_contraction(f.id));
    CHECK(ka.is_zero());
    CHECK(la == f.id);
    auto [kl, ll] = decompose_derivation(OmegaDerivation::from_lie(f.kx));
    CHECK(kl == f.kx);
    CHECK(ll.is_zero());
}

TEST_CASE("Nijenhuis bracket") {
    Fixture f;
    CHECK(nijenhuis_bracket(f.id, f.id).is_zero());
    FieldValuedForm ky = FieldValuedForm::from_derivation(f.d2, f.phi);
    CHECK(nijenhuis_bracket(f.kx, ky).is_zero()); // fields contract to Omega^0
    CHECK(nijenhuis_bracket(f.kx, f.id) == f.kx);
}

TEST_CASE("FN bracket") {
    Fixture f;
    CHECK(fn_bracket(f.id, f.id).is_zero());
    FieldValuedForm ky = FieldValuedForm::from_derivation(f.d2, f.phi);
    CHECK(fn_bracket(f.kx, ky).is_zero());
    Derivation xd1 = f.d1.left_scaled(AlgebraElement::generator(f.s2, 0));
    FieldValuedForm kxd1 = FieldValuedForm::from_derivation(xd1, f.phi);
    CHECK(fn_bracket(kxd1, f.kx) ==
          FieldValuedForm::from_derivation(derivation_bracket(xd1, f.d1), f.phi));
}

TEST_CASE("bimodule-hom laws of field-valued forms") {
    Fixture f;
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        long k = trial % 2;
        std::uniform_int_distribution<long> gd(-1, 1);
        Grade alpha(f.s2->group(), {gd(rng), gd(rng)});
        FieldValuedForm K = random_field_valued_form(f.s2, f.phi, k, alpha, rng);
        if (K.is_zero()) continue;
        Monomial am = random_monomial(f.s2, rng, 2);
        AlgebraElement a = AlgebraElement::monomial(f.s2, am);
        Form fa = Form::from_element(a, f.phi);
        // left law (phi trivial): K(a db) = rho(alpha,|a|) a K(db)
        for (int g = 0; g < 2; ++g) {
            Form adb = fa * Form::generator_differential(f.s2, f.phi, g);
            Form expected = f.s2->rho().eval(alpha, a.grade()) * (fa * K.value(g));
            CHECK(K.apply(adb) == expected);
        }
        // right law: K(w a) = K(w) a on one-forms
        Form w = Form::from_element(random_element(f.s2, rng, 2, 2), f.phi) *
                 Form::generator_differential(f.s2, f.phi, trial % 2);
        CHECK(K.apply(w * fa) == K.apply(w) * fa);
    }
}

TEST_CASE("kernel sampling produces honest field-valued forms") {
    Fixture f;
    Rng rng(11);
    // fields over S_2^q form a free module on the coordinate fields, so the
    // solution space per grade counts the nonempty components alpha + e_i
    CHECK(field_valued_form_space_dim(f.s2, f.phi, 0, Grade(f.s2->group(), {1, 0})) == 2);
    CHECK(field_valued_form_space_dim(f.s2, f.phi, 0, Grade(f.s2->group(), {1, -1})) == 1);
    for (int i = 0; i < 5; ++i) {
        FieldValuedForm k =
            random_field_valued_form(f.s2, f.phi, 1, Grade(f.s2->group(), {0, 0}), rng);
        // construction validated; j restricted to Omega^1 must reproduce it
        for (int g = 0; g < 2; ++g)
            CHECK(contract(k, Form::generator_differential(f.s2, f.phi, g)) == k.value(g));
    }
}

TEST_CASE("ill-defined field-valued data is rejected") {
    Fixture f;
    // K(dx1) = x2 (wrong grade for alpha = -e1, k = 0)
    std::vector<Form> vals = {f.fx2, Form::zero(f.s2, f.phi)};
    CHECK_THROWS_AS(
        FieldValuedForm(f.s2, f.phi, 0, -Grade::generator(f.s2->group(), 0), vals), Error);
    // negative target degree
    std::vector<Form> zeros(2, Form::zero(f.s2, f.phi));
    CHECK_THROWS_AS(FieldValuedForm(f.s2, f.phi, -1, Grade::zero(f.s2->group()), zeros), Error);
}

TEST_CASE("contraction on a torsion presentation") {
    auto cs2 = AlgebraPresentation::clock_shift(2);
    GradedUnitHom phi = GradedUnitHom::trivial(cs2->group());
    ExtendedCocycle rhobar(cs2->rho(), phi);
    FieldValuedForm id = FieldValuedForm::identity(cs2, phi);
    Form dp = Form::generator_differential(cs2, phi, 0);
    Form dg = Form::generator_differential(cs2, phi, 1);
    CHECK(contract(id, dp * dg) == Scalar(2) * (dp * dg));
    for (const Form& w : {dp, dp * dg, Form::from_element(AlgebraElement::generator(cs2, 0), phi) * dg})
        CHECK(lie_derivative(id, w) == w.differential());
    // decomposition on the torsion side
    auto [k, l] = decompose_derivation(OmegaDerivation::exterior_d(cs2, phi));
    CHECK(k == id);
    CHECK(l.is_zero());
    // kernel-sampled forms restrict correctly under j
    Rng rng(5);
    for (int i = 0; i < 4; ++i) {
        FieldValuedForm s =
            random_field_valued_form(cs2, phi, 1, Grade(cs2->group(), {i % 2, i / 2}), rng);
        for (int g = 0; g < 2; ++g)
            CHECK(contract(s, Form::generator_differential(cs2, phi, g)) == s.value(g));
        Form w = random_homogeneous_form(cs2, phi, rng, 2, 1);
        Form t = random_form(cs2, phi, rng, 2, 2, 1);
        Scalar tw = rhobar.eval(s.contraction_degree(), w.bidegree());
        CHECK(contract(s, w * t) == contract(s, w) * t + tw * (w * contract(s, t)));
    }
}

TEST_CASE("nontrivial phi calculus on k[Z_4]") {
    auto cyc = AlgebraPresentation::cyclic_group(4);
    GradedUnitHom phi(cyc->group(), {Scalar::eps_power(4, 1)});
    ExtendedCocycle rhobar(cyc->rho(), phi);
    FieldValuedForm id = FieldValuedForm::identity(cyc, phi);
    AlgebraElement g = AlgebraElement::generator(cyc, 0);
    Form fg = Form::from_element(g, phi);
    Form dg = fg.differential();

    // j restricted to Omega^1 reproduces K for every phi
    CHECK(contract(id, dg) == dg);
    CHECK(contract(id, fg * dg) == fg * dg);
    // graded Leibniz for j_id with the phi-twisted rhobar factor
    Rng rng(9);
    for (int i = 0; i < 8; ++i) {
        Form w = random_homogeneous_form(cyc, phi, rng, 2, 3);
        Form t = random_form(cyc, phi, rng, 2, 2, 3);
        Scalar tw = rhobar.eval(id.contraction_degree(), w.bidegree());
        CHECK(contract(id, w * t) == contract(id, w) * t + tw * (w * contract(id, t)));
    }
    // L_id = d survives the twist
    for (int i = 0; i < 6; ++i) {
        Form w = random_form(cyc, phi, rng, 2, 2, 3);
        CHECK(lie_derivative(id, w) == w.differential());
        CHECK(w.differential().differential().is_zero());
    }
    // kernel-sampled K on the twisted calculus still satisfies j_K|_1 = K
    for (long a = 0; a < 4; ++a) {
        FieldValuedForm k = random_field_valued_form(cyc, phi, 1, Grade(cyc->group(), {a}), rng);
        CHECK(contract(k, dg) == k.value(0));
    }
}

TEST_CASE("nontrivial phi on the quantum plane twists contraction consistently") {
    // phi(e1) = q, phi(e2) = 1: the k = 0 module law picks up phi^{-1}
    auto s2 = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi(s2->group(), {Scalar::q_power(1), Scalar::one()});
    ExtendedCocycle rhobar(s2->rho(), phi);
    Rng rng(21);
    for (long k = 0; k <= 1; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<long> gd(-1, 1);
            Grade alpha(s2->group(), {gd(rng), gd(rng)});
            FieldValuedForm K = random_field_valued_form(s2, phi, k, alpha, rng);
            if (K.is_zero()) continue;
            // restriction j_K|_1 = K on generator differentials and a twisted
            // one-form
            for (int g = 0; g < 2; ++g)
                CHECK(contract(K, Form::generator_differential(s2, phi, g)) == K.value(g));
            Form one_form = Form::from_element(AlgebraElement::generator(s2, 0), phi) *
                            Form::generator_differential(s2, phi, 1);
            CHECK(contract(K, one_form) == K.apply(one_form));
            // graded Leibniz with the twisted rhobar prefactor
            Form w = random_homogeneous_form(s2, phi, rng, 2, 2);
            Form t = random_form(s2, phi, rng, 2, 2, 2);
            Scalar tw = rhobar.eval(K.contraction_degree(), w.bidegree());
            CHECK(contract(K, w * t) == contract(K, w) * t + tw * (w * contract(K, t)));
        }
    }
    // d_phi graded Leibniz holds on this twisted calculus too
    for (int i = 0; i < 12; ++i) {
        Form w = random_homogeneous_form(s2, phi, rng, 2, 2);
        Form t = random_form(s2, phi, rng, 2, 2, 2);
        CHECK(leibniz_check(w, t));
        CHECK((w * t).differential().differential().is_zero());
    }
}

TEST_CASE("calculus suites") {
    CheckConfig cfg;
    cfg.scale_percent = 10;
    for (auto fn : {check_universality, check_contraction, check_decompose, check_fn_bracket}) {
        CheckResult r = fn(cfg);
        std::string detail = r.name + (r.failures.empty() ? std::string() : ": " + r.failures.front());
        INFO(detail);
        CHECK(r.passed);
    }
}
