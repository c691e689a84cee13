#include "rhoform/checks.hpp"

#include "rhoform/cohomology.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/hom.hpp"
#include "rhoform/matrix_oracle.hpp"
#include "rhoform/omega_derivation.hpp"
#include "rhoform/parser.hpp"
#include "rhoform/printer.hpp"
#include "rhoform/random_gen.hpp"

namespace rhoform {

void CheckResult::require(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
        passed = false;
        if (failures.size() < 8) failures.push_back(what);
    }
}

void CheckResult::merge(const CheckResult& other) {
    cases += other.cases;
    if (!other.passed) {
        passed = false;
        for (const auto& f : other.failures)
            if (failures.size() < 8) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
    }
}

namespace {

const Scalar kOne = Scalar::one();

Grade zero_grade(const PresentationPtr& p) { return Grade::zero(p->group()); }

} // namespace

CheckResult check_scalars(const CheckConfig& cfg) {
    CheckResult r{"scalars"};
    Rng rng(cfg.seed);
    for (long i = 0; i < cfg.n(200); ++i) {
        Scalar a = random_scalar(rng, 4), b = random_scalar(rng, 4), c = random_scalar(rng, 4);
        r.require((a + b) + c == a + (b + c), "additive associativity");
        r.require(a * (b + c) == a * b + a * c, "distributivity");
        r.require((a * b) * c == a * (b * c), "multiplicative associativity");
        r.require(a * a.inverse() == kOne, "multiplicative inverse");
        r.require(a - b == -(b - a), "subtraction antisymmetry");
        // canonical equality: two routes to the same value, identical representation
        Scalar via1 = (a + b) * c;
        Scalar via2 = c * b + a * c; // uses commutativity of the field
        r.require(via1 == via2 && (via1 - via2).is_zero(), "canonical representation");
    }
    for (int n : {2, 3, 4, 5, 6}) {
        Scalar e = Scalar::eps_power(n, 1);
        r.require(e.pow(n) == kOne, "eps^n = 1 for n=" + std::to_string(n));
        for (int k = 1; k < n; ++k)
            r.require(e.pow(k) != kOne, "eps primitive at n=" + std::to_string(n));
    }
    r.require(Scalar::zero().is_unit() == false, "0 is not a unit");
    r.require(Scalar::q_power(-3).is_unit(), "q^-3 is a unit");
    r.require((Scalar::eps_power(4, 1) - Scalar::eps_power(4, 1)).is_unit() == false,
              "eps - eps = 0");
    bool threw = false;
    try {
        Scalar::one() / Scalar::zero();
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::DivisionByZero;
    }
    r.require(threw, "division by zero raises DivisionByZero");
    threw = false;
    try {
        Scalar::eps_power(3, 1) + Scalar::eps_power(4, 1);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::IncompatibleRootOrder;
    }
    r.require(threw, "mixing eps_3 and eps_4 raises IncompatibleRootOrder");
    return r;
}

CheckResult check_cocycle_laws(const CheckConfig& cfg) {
    CheckResult r{"cocycle-laws"};
    Rng rng(cfg.seed);

    // quantum-plane cocycle on Z^4, random pairs and triples
    Cocycle rho4 = Cocycle::quantum_plane(4);
    for (long i = 0; i < cfg.n(1000); ++i) {
        Grade a = random_grade(rho4.group(), rng, 6);
        Grade b = random_grade(rho4.group(), rng, 6);
        Grade c = random_grade(rho4.group(), rng, 6);
        r.require(rho4.eval(a, b) * rho4.eval(b, a) == kOne, "inverse symmetry on Z^4");
        r.require(rho4.eval(a + b, c) == rho4.eval(a, c) * rho4.eval(b, c), "biadditivity on Z^4");
        r.require(rho4.eval(a, b + c) == rho4.eval(a, b) * rho4.eval(a, c),
                  "biadditivity, second slot");
        r.require(rho4.eval(a, a) == kOne || rho4.eval(a, a) == -kOne, "rho(c,c) = +-1");
    }
    r.require(rho4.eval(Grade::zero(rho4.group()), random_grade(rho4.group(), rng, 6)) == kOne,
              "rho(0,b) = 1");

    // clock-shift cocycle, exhaustive on (Z_3)^2
    Cocycle rho3 = Cocycle::clock_shift(3);
    std::vector<Grade> all3;
    for (long a1 = 0; a1 < 3; ++a1)
        for (long a2 = 0; a2 < 3; ++a2) all3.push_back(Grade(rho3.group(), {a1, a2}));
    for (const auto& a : all3)
        for (const auto& b : all3) {
            r.require(rho3.eval(a, b) * rho3.eval(b, a) == kOne, "inverse symmetry exhaustive on (Z_3)^2");
            for (const auto& c : all3)
                r.require(rho3.eval(a + b, c) == rho3.eval(a, c) * rho3.eval(b, c),
                          "biadditivity exhaustive on (Z_3)^2");
        }
    // characteristic values, with the oracle-validated clock-shift sign
    Cocycle rho2 = Cocycle::quantum_plane(2);
    r.require(rho2.eval(Grade(rho2.group(), {1, 0}), Grade(rho2.group(), {0, 1})) ==
                  Scalar::q_power(1),
              "quantum plane rho(e1,e2) = q");
    r.require(rho3.eval(Grade(rho3.group(), {1, 0}), Grade(rho3.group(), {0, 1})) ==
                  Scalar::eps_power(3, 1),
              "clock-shift rho(e1,e2) = eps");

    // extended cocycle: same laws on Zbar = Z x G plus the sign rule
    for (GradedUnitHom phi :
         {GradedUnitHom::trivial(rho3.group()),
          GradedUnitHom(rho3.group(), {Scalar::eps_power(3, 1), Scalar::eps_power(3, 2)})}) {
        ExtendedCocycle rb(rho3, phi);
        std::uniform_int_distribution<long> nd(-3, 3);
        for (long i = 0; i < cfg.n(300); ++i) {
            Bidegree x{nd(rng), random_grade(rho3.group(), rng, 3)};
            Bidegree y{nd(rng), random_grade(rho3.group(), rng, 3)};
            Bidegree z{nd(rng), random_grade(rho3.group(), rng, 3)};
            r.require(rb.eval(x, y) * rb.eval(y, x) == kOne, "inverse symmetry for rhobar");
            r.require(rb.eval(x + y, z) == rb.eval(x, z) * rb.eval(y, z), "biadditivity for rhobar");
            r.require(rb.eval(x, y + z) == rb.eval(x, y) * rb.eval(x, z),
                      "biadditivity for rhobar, second slot");
            // restriction and the closed form
            Bidegree a0{0, x.grade}, b0{0, y.grade};
            r.require(rb.eval(a0, b0) == rho3.eval(x.grade, y.grade), "rhobar restricts to rho");
            Bidegree one{1, Grade::zero(rho3.group())};
            Scalar expected = phi.eval(y.grade);
            if (((y.form_degree % 2) + 2) % 2 == 1) expected = -expected;
            r.require(rb.eval(one, y) == expected, "rhobar((1,0),(n,a)) = (-1)^n phi(a)");
            // alternating sign rule
            Bidegree yp{y.form_degree + 1, y.grade};
            r.require(rb.eval(one, yp) + rb.eval(one, y) == Scalar::zero(),
                      "rhobar((1,0),(n+1,a)) + rhobar((1,0),(n,a)) = 0");
        }
        // rhobar((1,0),(1,0)) = -1
        Bidegree one{1, Grade::zero(rho3.group())};
        r.require(rb.eval(one, one) == -kOne, "rhobar((1,0),(1,0)) = -1");
    }
    return r;
}

CheckResult check_algebra_product(const CheckConfig& cfg) {
    CheckResult r{"algebra-product"};
    Rng rng(cfg.seed);
    std::vector<PresentationPtr> algebras = {
        AlgebraPresentation::quantum_plane(2), AlgebraPresentation::quantum_plane(4),
        AlgebraPresentation::clock_shift(3), AlgebraPresentation::cyclic_group(4)};
    for (const auto& pres : algebras) {
        for (long i = 0; i < cfg.n(40); ++i) {
            AlgebraElement u = random_element(pres, rng, 2, 3);
            AlgebraElement v = random_element(pres, rng, 2, 3);
            AlgebraElement w = random_element(pres, rng, 2, 3);
            r.require((u * v) * w == u * (v * w), "associativity in " + pres->name());
            r.require((u + v) * w == u * w + v * w, "distributivity in " + pres->name());
            AlgebraElement unit = AlgebraElement::unit(pres);
            r.require(unit * u == u && u * unit == u, "unit law in " + pres->name());

            // factor-set associativity on monomials
            Monomial a = random_monomial(pres, rng, 3);
            Monomial b = random_monomial(pres, rng, 3);
            Monomial e = random_monomial(pres, rng, 3);
            auto [cab, ab] = pres->monomial_mul(a, b);
            auto [cab_e, abe] = pres->monomial_mul(ab, e);
            auto [cbe, be] = pres->monomial_mul(b, e);
            auto [ca_be, abe2] = pres->monomial_mul(a, be);
            r.require(abe == abe2 && cab * cab_e == cbe * ca_be,
                      "factor-set associativity in " + pres->name());
            // unit of the factor set
            r.require(pres->monomial_mul(pres->unit_monomial(), b).first == kOne &&
                          pres->monomial_mul(b, pres->unit_monomial()).first == kOne,
                      "c(0,b) = c(a,0) = 1");

            // grade additivity on homogeneous monomials
            Grade ga = pres->monomial_grade(a), gb = pres->monomial_grade(b);
            AlgebraElement prod = AlgebraElement::monomial(pres, a) * AlgebraElement::monomial(pres, b);
            if (!prod.is_zero())
                r.require(prod.grade() == ga + gb, "grade additivity in " + pres->name());
        }
    }
    // documented error paths
    auto qp = AlgebraPresentation::quantum_plane(2);
    bool threw = false;
    try {
        (AlgebraElement::generator(qp, 0) + AlgebraElement::generator(qp, 1)).grade();
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::NonHomogeneous;
    }
    r.require(threw, "x1 + x2 has no grade");
    threw = false;
    try {
        AlgebraElement::zero(qp).grade();
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::ZeroElement;
    }
    r.require(threw, "zero element has indeterminate grade");
    return r;
}

CheckResult check_rho_commutativity(const CheckConfig& cfg) {
    CheckResult r{"rho-commutativity"};
    Rng rng(cfg.seed);
    auto s4 = AlgebraPresentation::quantum_plane(4);
    for (long i = 0; i < cfg.n(500); ++i) {
        AlgebraElement m1 = AlgebraElement::monomial(s4, random_monomial(s4, rng, 6));
        AlgebraElement m2 = AlgebraElement::monomial(s4, random_monomial(s4, rng, 6));
        r.require(rho_commutator(m1, m2).is_zero(), "rho-commutator vanishes on S_4^q");
    }
    for (int n : {2, 3}) {
        auto cs = AlgebraPresentation::clock_shift(n);
        for (const auto& a : cs->all_monomials())
            for (const auto& b : cs->all_monomials())
                r.require(rho_commutator(AlgebraElement::monomial(cs, a),
                                         AlgebraElement::monomial(cs, b))
                              .is_zero(),
                          "rho-commutator vanishes on clock-shift n=" + std::to_string(n));
    }
    // [u,u] = 0 whenever rho(|u|,|u|) = 1
    auto s2 = AlgebraPresentation::quantum_plane(2);
    for (long i = 0; i < cfg.n(50); ++i) {
        AlgebraElement u = AlgebraElement::monomial(s2, random_monomial(s2, rng, 4));
        if (u.is_zero()) continue;
        if (s2->rho().eval(u.grade(), u.grade()) == kOne)
            r.require(rho_commutator(u, u).is_zero(), "[u,u] = 0");
    }
    return r;
}

CheckResult check_matrix_oracle(const CheckConfig& cfg) {
    CheckResult r{"matrix-oracle"};
    (void)cfg;
    for (int n : {2, 3}) {
        auto cs = AlgebraPresentation::clock_shift(n);
        ClockShiftOracle oracle(n);
        r.require(oracle.basis_rank() == static_cast<size_t>(n) * static_cast<size_t>(n),
                  "basis monomials span M_n for n=" + std::to_string(n));
        for (const auto& a : cs->all_monomials())
            for (const auto& b : cs->all_monomials()) {
                AlgebraElement ua = AlgebraElement::monomial(cs, a);
                AlgebraElement ub = AlgebraElement::monomial(cs, b);
                r.require(oracle.model(ua * ub) == oracle.model(ua) * oracle.model(ub),
                          "abstract product equals matrix product at n=" + std::to_string(n));
            }
    }
    // n=2 explicit values: p = diag(1,-1), p g2 = - g2 p
    ClockShiftOracle o2(2);
    r.require(o2.clock().at(0, 0) == kOne && o2.clock().at(1, 1) == -kOne, "p = diag(1,-1)");
    r.require(o2.clock() * o2.shift() == (o2.shift() * o2.clock()).scaled(-kOne),
              "p g2 = eps g2 p at n=2");
    auto cs2 = AlgebraPresentation::clock_shift(2);
    AlgebraElement p = AlgebraElement::generator(cs2, 0);
    AlgebraElement g2 = AlgebraElement::generator(cs2, 1);
    r.require(p * g2 * p == -g2, "p g2 p = -p^2 g2");
    return r;
}

CheckResult check_derivations(const CheckConfig& cfg) {
    CheckResult r{"derivations"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    const auto& rho = s2->rho();

    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    AlgebraElement x1 = AlgebraElement::generator(s2, 0);
    AlgebraElement x2 = AlgebraElement::generator(s2, 1);
    r.require(d2.apply(x1 * x2) == Scalar::q_power(1) * x1, "d2(x1 x2) = q x1");
    r.require(d1.apply(x1 * x1) == Scalar(2) * x1, "d1(x1^2) = 2 x1");
    r.require(d1.apply(AlgebraElement::unit(s2)).is_zero(), "X(1) = 0");
    r.require(d1.left_scaled(x1).apply(x1) == x1, "(x1 d1)(x1) = x1");
    r.require(d1.right_scaled(AlgebraElement::unit(s2)) == d1, "X * 1 = X");
    r.require(d1.right_scaled(x1) == d1.left_scaled(x1), "(d1) x1 = x1 d1");
    r.require(d2.right_scaled(x1) == d2.left_scaled(x1).scaled(Scalar::q_power(1)),
              "(d2) x1 = q x1 d2");
    r.require(derivation_bracket(d1, d2).is_zero(), "[d1,d2] = 0");

    for (long i = 0; i < cfg.n(60); ++i) {
        Derivation x = random_derivation(s2, rng, 2);
        Derivation y = random_derivation(s2, rng, 2);
        Derivation z = random_derivation(s2, rng, 2);
        Derivation br = derivation_bracket(x, y);
        Scalar rho_xy = rho.eval(x.degree(), y.degree());
        AlgebraElement u = random_element(s2, rng, 2, 3);
        // operator equality of the bracket
        r.require(br.apply(u) == x.apply(y.apply(u)) - rho_xy * y.apply(x.apply(u)),
                  "bracket = X Y - rho Y X as operators");
        // rho-antisymmetry
        r.require(derivation_bracket(y, x).apply(u) ==
                      (-rho.eval(y.degree(), x.degree())) * br.apply(u),
                  "[X,Y] = -rho(|X|,|Y|)[Y,X]");
        // rho-Jacobi
        AlgebraElement lhs = derivation_bracket(br, z).apply(u);
        AlgebraElement rhs = derivation_bracket(x, derivation_bracket(y, z)).apply(u) -
                             rho_xy * derivation_bracket(y, derivation_bracket(x, z)).apply(u);
        r.require(lhs == rhs, "rho-Jacobi identity");
        // module laws
        AlgebraElement f = AlgebraElement::monomial(s2, random_monomial(s2, rng, 2));
        AlgebraElement h = random_element(s2, rng, 2, 2);
        if (!f.is_zero()) {
            AlgebraElement g = AlgebraElement::monomial(s2, random_monomial(s2, rng, 2));
            if (!g.is_zero())
                r.require(x.left_scaled(f * g).apply(h) == f * (x.left_scaled(g).apply(h)),
                          "((f g) X)(h) = f ((g X)(h))");
            r.require(x.left_scaled(f).apply(h) == f * x.apply(h), "(f X)(h) = f (X h)");
            // twisted Leibniz of f X
            if (!h.is_zero() && h.is_homogeneous()) {
                AlgebraElement k = random_element(s2, rng, 2, 2);
                Derivation fx = x.left_scaled(f);
                r.require(fx.apply(h * k) ==
                              fx.apply(h) * k +
                                  rho.eval(f.grade() + x.degree(), h.grade()) * (h * fx.apply(k)),
                          "Leibniz for f X");
            }
        }
    }
    // well-definedness rejection: X(x1) = x2 is not a derivation of S_2^q
    // unless grades match; a grade-violating value must throw
    bool threw = false;
    try {
        std::vector<AlgebraElement> vals = {x2, AlgebraElement::zero(s2)};
        Derivation bad(s2, -Grade::generator(s2->group(), 0), std::move(vals));
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::IllDefined;
    }
    r.require(threw, "grade-violating derivation data is rejected");
    return r;
}

CheckResult check_universal_calculus(const CheckConfig& cfg) {
    CheckResult r{"universal-calculus"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto cs2 = AlgebraPresentation::clock_shift(2);
    auto phi_s2 = GradedUnitHom::trivial(s2->group());
    auto phi_cs2 = GradedUnitHom::trivial(cs2->group());

    // pinned point values
    Form one = Form::from_element(AlgebraElement::unit(s2), phi_s2);
    r.require(one.differential().is_zero(), "d1 = 0");
    Form dx1 = Form::generator_differential(s2, phi_s2, 0);
    Form dx2 = Form::generator_differential(s2, phi_s2, 1);
    Form fx1 = Form::from_element(AlgebraElement::generator(s2, 0), phi_s2);
    Form fx2 = Form::from_element(AlgebraElement::generator(s2, 1), phi_s2);
    r.require(dx1.differential().is_zero(), "d(dx1) = 0");
    r.require((fx1 * dx2).differential() == dx1 * dx2, "d(x1 dx2) = dx1 /\\ dx2");
    Form dx1x2 = Form::from_element(AlgebraElement::generator(s2, 0) *
                                        AlgebraElement::generator(s2, 1),
                                    phi_s2)
                     .differential();
    r.require(dx1 * fx2 == dx1x2 - fx1 * dx2, "(dx1) x2 = d(x1 x2) - x1 dx2");
    r.require(fx1 * (fx2 * dx1) == Form::from_element(AlgebraElement::generator(s2, 0) *
                                                          AlgebraElement::generator(s2, 1),
                                                      phi_s2) *
                                       dx1,
              "a (b dc) = (ab) dc");
    r.require((fx1 * dx2) * dx1 ==
                  Form::tensor(s2, phi_s2,
                               FormTensor{s2->generator_monomial(0),
                                          {s2->generator_monomial(1), s2->generator_monomial(0)}}),
              "(x1 dx2) /\\ dx1 concatenates");

    // d^2 = 0 on random forms of degree <= 3
    for (long i = 0; i < cfg.n(200); ++i) {
        Form w = random_form(s2, phi_s2, rng, 3, 3, 3);
        r.require(w.differential().differential().is_zero(), "d^2 = 0 on S_2^q");
        Form v = random_form(cs2, phi_cs2, rng, 3, 3, 3);
        r.require(v.differential().differential().is_zero(), "d^2 = 0 on clock-shift n=2");
    }

    // graded Leibniz, phi trivial and a nontrivial phi on G = Z_4
    auto cyc4 = AlgebraPresentation::cyclic_group(4);
    GradedUnitHom phi4(cyc4->group(), {Scalar::eps_power(4, 1)});
    for (long i = 0; i < cfg.n(200); ++i) {
        Form w = random_homogeneous_form(s2, phi_s2, rng, 2, 3);
        Form t = random_form(s2, phi_s2, rng, 2, 2, 3);
        r.require(leibniz_check(w, t), "graded Leibniz on S_2^q (phi trivial)");
        Form w4 = random_homogeneous_form(cyc4, phi4, rng, 2, 3);
        Form t4 = random_form(cyc4, phi4, rng, 2, 2, 3);
        r.require(leibniz_check(w4, t4), "graded Leibniz on k[Z_4] with phi = eps_4");
    }

    // associativity and bidegree additivity
    for (long i = 0; i < cfg.n(60); ++i) {
        Form a = random_form(s2, phi_s2, rng, 2, 2, 2);
        Form b = random_form(s2, phi_s2, rng, 2, 2, 2);
        Form c = random_form(s2, phi_s2, rng, 2, 2, 2);
        r.require((a * b) * c == a * (b * c), "form product associativity");
        Form ha = random_homogeneous_form(s2, phi_s2, rng, 2, 2);
        Form hb = random_homogeneous_form(s2, phi_s2, rng, 2, 2);
        Form prod = ha * hb;
        if (!prod.is_zero())
            r.require(prod.bidegree() == ha.bidegree() + hb.bidegree(), "bidegree additivity");
    }

    // error paths
    bool threw = false;
    try {
        (fx1 + dx2).bidegree();
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::NonHomogeneous;
    }
    r.require(threw, "x1 + dx2 has no bidegree");
    return r;
}

CheckResult check_universality(const CheckConfig& cfg) {
    CheckResult r{"universality"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phi = GradedUnitHom::trivial(s2->group());

    // pinned values
    Derivation d1 = Derivation::coordinate(s2, 0);
    FieldValuedForm k1 = FieldValuedForm::from_derivation(d1, phi);
    r.require(k1.apply(Form::generator_differential(s2, phi, 0)) ==
                  Form::from_element(AlgebraElement::unit(s2), phi),
              "K(dx1) = 1 for X = d1");
    r.require(k1.apply(Form::generator_differential(s2, phi, 1)).is_zero(), "K(dx2) = 0");
    r.require(k1.apply(Form::from_element(AlgebraElement::generator(s2, 0), phi) *
                       Form::generator_differential(s2, phi, 1))
                  .is_zero(),
              "K(x1 dx2) = 0");

    for (long i = 0; i < cfg.n(20); ++i) {
        Derivation x = random_derivation(s2, rng, 2);
        FieldValuedForm k = FieldValuedForm::from_derivation(x, phi);
        for (long j = 0; j < cfg.n(50); ++j) {
            AlgebraElement u = random_element(s2, rng, 3, 3);
            r.require(k.apply(Form::from_element(u, phi).differential()) ==
                          Form::from_element(x.apply(u), phi),
                      "f . d = X on random elements");
        }
        // hom twist: f(a db) = rho(|X|,|a|) a X(b)
        Monomial am = random_monomial(s2, rng, 3);
        Monomial bm = random_monomial(s2, rng, 3);
        if (!s2->is_unit(bm)) {
            Form adb = Form::tensor(s2, phi, FormTensor{am, {bm}});
            Form expected = s2->rho().eval(x.degree(), s2->monomial_grade(am)) *
                            (Form::from_element(AlgebraElement::monomial(s2, am), phi) *
                             Form::from_element(x.apply(AlgebraElement::monomial(s2, bm)), phi));
            r.require(k.apply(adb) == expected, "f(a db) = rho(|X|,|a|) a X(b)");
        }
        // round trip both ways
        r.require(k.to_derivation() == x, "hom -> derivation round trip");
        r.require(FieldValuedForm::from_derivation(k.to_derivation(), phi) == k,
                  "derivation -> hom round trip");
    }
    // zero derivation <-> zero hom
    Derivation z = Derivation::zero(s2, zero_grade(s2));
    r.require(FieldValuedForm::from_derivation(z, phi).is_zero(), "zero derivation -> zero hom");
    return r;
}

namespace {

// Random valid field-valued forms over S_2^q with small bidegrees; target
// degree <= max_k. Falls back to derivation-induced fields when the sampled
// component is empty.
FieldValuedForm sample_fvform(const PresentationPtr& pres, const GradedUnitHom& phi, Rng& rng,
                              long max_k) {
    std::uniform_int_distribution<long> kd(0, max_k);
    std::uniform_int_distribution<long> gd(-1, 2);
    for (int attempt = 0; attempt < 24; ++attempt) {
        long k = kd(rng);
        std::vector<long> comps(static_cast<size_t>(pres->group().generators()));
        for (auto& c : comps) c = gd(rng);
        Grade alpha(pres->group(), comps);
        FieldValuedForm K = random_field_valued_form(pres, phi, k, alpha, rng);
        if (!K.is_zero()) return K;
    }
    return FieldValuedForm::identity(pres, phi);
}

} // namespace

CheckResult check_contraction(const CheckConfig& cfg) {
    CheckResult r{"contraction"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phi = GradedUnitHom::trivial(s2->group());
    ExtendedCocycle rhobar(s2->rho(), phi);

    // pinned point values
    Derivation d1 = Derivation::coordinate(s2, 0);
    FieldValuedForm kx = FieldValuedForm::from_derivation(d1, phi);
    Form fx2 = Form::from_element(AlgebraElement::generator(s2, 1), phi);
    Form dx1 = Form::generator_differential(s2, phi, 0);
    Form dx2 = Form::generator_differential(s2, phi, 1);
    r.require(contract(kx, fx2 * dx1) == Scalar::q_power(-1) * fx2,
              "j_X(x2 dx1) = q^-1 x2");
    r.require(contract(kx, dx1 * dx2) == dx2, "j_X(dx1 /\\ dx2) = dx2");
    FieldValuedForm id = FieldValuedForm::identity(s2, phi);
    for (int n = 1; n <= 3; ++n) {
        Form w = dx1;
        for (int i = 1; i < n; ++i) w = w * (i % 2 ? dx2 : dx1);
        if (w.is_zero()) continue;
        r.require(contract(id, w) == Scalar(n) * w, "j_id = n on degree n");
    }

    // j_K is a rhobar-derivation (graded Leibniz)
    for (long i = 0; i < cfg.n(100); ++i) {
        FieldValuedForm k = sample_fvform(s2, phi, rng, 2);
        Form w = random_homogeneous_form(s2, phi, rng, 2, 2);
        Form t = random_form(s2, phi, rng, 2, 2, 2);
        Scalar tw = rhobar.eval(k.contraction_degree(), w.bidegree());
        r.require(contract(k, w * t) == contract(k, w) * t + tw * (w * contract(k, t)),
                  "j_K graded Leibniz");
        r.require(contract(k, Form::from_element(random_element(s2, rng, 2, 2), phi)).is_zero(),
                  "j_K vanishes on Omega^0");
    }

    // j restricted to Omega^1 reproduces K; distinct K's stay distinct
    for (long i = 0; i < cfg.n(40); ++i) {
        FieldValuedForm k = sample_fvform(s2, phi, rng, 2);
        for (int g = 0; g < s2->generator_count(); ++g) {
            Form dxg = Form::generator_differential(s2, phi, g);
            r.require(contract(k, dxg) == k.value(g), "j_K(dx_i) = K(dx_i)");
        }
        Form one_form = Form::from_element(random_element(s2, rng, 2, 2), phi) *
                        Form::generator_differential(s2, phi, i % 2 ? 0 : 1);
        r.require(contract(k, one_form) == k.apply(one_form), "j_K = K on Omega^1");
    }
    {
        FieldValuedForm ka = FieldValuedForm::from_derivation(Derivation::coordinate(s2, 0), phi);
        FieldValuedForm kb = FieldValuedForm::from_derivation(Derivation::coordinate(s2, 1), phi);
        bool distinct = false;
        for (int g = 0; g < s2->generator_count(); ++g)
            if (contract(ka, Form::generator_differential(s2, phi, g)) !=
                contract(kb, Form::generator_differential(s2, phi, g)))
                distinct = true;
        r.require(distinct, "distinct K give distinct j_K on Omega^1");
    }

    // rhobar-Jacobi for the derivation bracket, evaluated on x_i and dx_i
    for (long i = 0; i < cfg.n(20); ++i) {
        auto pick = [&](int which) -> OmegaDerivation {
            FieldValuedForm k = sample_fvform(s2, phi, rng, 2);
            switch (which % 3) {
                case 0: return OmegaDerivation::from_contraction(k);
                case 1: return OmegaDerivation::from_lie(k);
                default: return OmegaDerivation::exterior_d(s2, phi);
            }
        };
        std::uniform_int_distribution<int> which(0, 2);
        OmegaDerivation a = pick(which(rng));
        OmegaDerivation b = pick(which(rng));
        OmegaDerivation c = pick(which(rng));
        Scalar tw = rhobar.eval(a.degree(), b.degree());
        OmegaDerivation lhs = omega_derivation_bracket(omega_derivation_bracket(a, b), c);
        OmegaDerivation rhs1 = omega_derivation_bracket(a, omega_derivation_bracket(b, c));
        OmegaDerivation rhs2 = omega_derivation_bracket(b, omega_derivation_bracket(a, c));
        OmegaDerivation rhs = rhs1 + rhs2.scaled(-tw);
        r.require(lhs == rhs, "rhobar-Jacobi for the derivation bracket");
    }

    // [d,d] = 0 and [j_X,d] = L_X
    OmegaDerivation d = OmegaDerivation::exterior_d(s2, phi);
    r.require(omega_derivation_bracket(d, d).is_zero(), "[d,d] = 0");
    OmegaDerivation jx = OmegaDerivation::from_contraction(kx);
    OmegaDerivation lx = omega_derivation_bracket(jx, d);
    for (long i = 0; i < cfg.n(10); ++i) {
        Form w = random_form(s2, phi, rng, 2, 2, 2);
        r.require(lx.apply(w) == lie_derivative(kx, w), "[j_X,d] = L_X");
        // [L_K, d] = 0
        Form via = lie_derivative(kx, w.differential());
        Scalar tw = rhobar.eval(Bidegree{0, kx.grade()}, Bidegree{1, zero_grade(s2)});
        r.require(via == tw * lie_derivative(kx, w).differential(), "[L_K, d] = 0");
    }
    return r;
}

CheckResult check_decompose(const CheckConfig& cfg) {
    CheckResult r{"decompose"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phi = GradedUnitHom::trivial(s2->group());

    // D = d decomposes as (id, 0)
    auto d = OmegaDerivation::exterior_d(s2, phi);
    auto [kd, ld] = decompose_derivation(d);
    r.require(kd == FieldValuedForm::identity(s2, phi) && ld.is_zero(),
              "decompose(d) = (id, 0)");

    // algebraic D = j_M decomposes as (0, M)
    FieldValuedForm id = FieldValuedForm::identity(s2, phi);
    auto [ka, la] = decompose_derivation(OmegaDerivation::from_contraction(id));
    r.require(ka.is_zero() && la == id, "decompose(j_M) = (0, M)");

    // D = L_K decomposes as (K, 0)
    Derivation d1 = Derivation::coordinate(s2, 0);
    FieldValuedForm kx = FieldValuedForm::from_derivation(d1, phi);
    auto [kl, ll] = decompose_derivation(OmegaDerivation::from_lie(kx));
    r.require(kl == kx && ll.is_zero(), "decompose(L_K) = (K, 0)");

    for (long i = 0; i < cfg.n(50); ++i) {
        FieldValuedForm k = sample_fvform(s2, phi, rng, 2);
        // L must live one degree above K with the same grade
        FieldValuedForm l = random_field_valued_form(s2, phi, k.target_degree() + 1, k.grade(), rng);
        OmegaDerivation dk = OmegaDerivation::from_lie(k);
        OmegaDerivation dl = OmegaDerivation::from_contraction(l);
        OmegaDerivation sum = dk + dl;
        auto [k2, l2] = decompose_derivation(sum);
        r.require(k2 == k, "decompose recovers K exactly");
        r.require(l2 == l, "decompose recovers L exactly");
    }
    return r;
}

CheckResult check_fn_bracket(const CheckConfig& cfg) {
    CheckResult r{"fn-bracket"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phi = GradedUnitHom::trivial(s2->group());
    ExtendedCocycle rhobar(s2->rho(), phi);

    FieldValuedForm id = FieldValuedForm::identity(s2, phi);
    r.require(fn_bracket(id, id).is_zero(), "[id,id] = 0");
    r.require(nijenhuis_bracket(id, id).is_zero(), "[id,id]^D = 0");

    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    FieldValuedForm kx = FieldValuedForm::from_derivation(d1, phi);
    FieldValuedForm ky = FieldValuedForm::from_derivation(d2, phi);
    r.require(fn_bracket(kx, ky).is_zero(), "[d1,d2]_FN = 0");
    r.require(nijenhuis_bracket(kx, ky).is_zero(), "fields have zero Nijenhuis bracket");
    r.require(nijenhuis_bracket(kx, id) == kx, "[X,id]^D = X");

    // fields: FN bracket = the induced field bracket via derivation_bracket
    for (long i = 0; i < cfg.n(50); ++i) {
        Derivation x = random_derivation(s2, rng, 2);
        Derivation y = random_derivation(s2, rng, 2);
        FieldValuedForm fx = FieldValuedForm::from_derivation(x, phi);
        FieldValuedForm fy = FieldValuedForm::from_derivation(y, phi);
        FieldValuedForm fn = fn_bracket(fx, fy);
        FieldValuedForm expected = FieldValuedForm::from_derivation(derivation_bracket(x, y), phi);
        r.require(fn == expected, "FN bracket of fields matches the rho-Lie bracket");
    }

    // L_{[K,L]} = [L_K, L_L] on generators, differentials and random forms
    for (long i = 0; i < cfg.n(20); ++i) {
        FieldValuedForm k = sample_fvform(s2, phi, rng, 1);
        FieldValuedForm l = sample_fvform(s2, phi, rng, 1);
        FieldValuedForm m = fn_bracket(k, l);
        Scalar tw = rhobar.eval(Bidegree{k.target_degree(), k.grade()},
                                Bidegree{l.target_degree(), l.grade()});
        auto bracket_apply = [&](const Form& w) {
            return lie_derivative(k, lie_derivative(l, w)) -
                   tw * lie_derivative(l, lie_derivative(k, w));
        };
        for (int g = 0; g < s2->generator_count(); ++g) {
            Form xg = Form::from_element(AlgebraElement::generator(s2, g), phi);
            Form dxg = Form::generator_differential(s2, phi, g);
            r.require(lie_derivative(m, xg) == bracket_apply(xg), "L_[K,L] = [L_K,L_L] on x_i");
            r.require(lie_derivative(m, dxg) == bracket_apply(dxg),
                      "L_[K,L] = [L_K,L_L] on dx_i");
        }
        for (long j = 0; j < cfg.n(20); ++j) {
            Form w = random_form(s2, phi, rng, 2, 2, 2);
            r.require(lie_derivative(m, w) == bracket_apply(w),
                      "L_[K,L] = [L_K,L_L] on random forms");
        }
        // graded antisymmetry of the FN bracket in the (target degree, grade) grading
        FieldValuedForm ml = fn_bracket(l, k);
        FieldValuedForm neg = ml.scaled(-tw);
        r.require(m == neg || (m.is_zero() && neg.is_zero()),
                  "[K,L] = -rhobar(|K|,|L|)[L,K]");
    }
    return r;
}

CheckResult check_naturality(const CheckConfig& cfg) {
    CheckResult r{"naturality"};
    Rng rng(cfg.seed);
    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phi = GradedUnitHom::trivial(s2->group());

    AlgebraHom fid = AlgebraHom::identity(s2);
    std::vector<AlgebraElement> images = {AlgebraElement::generator(s2, 0),
                                          AlgebraElement::zero(s2)};
    AlgebraHom fkill(s2, s2, zero_grade(s2), std::move(images));

    // Omega(f) point values
    Form dx2 = Form::generator_differential(s2, phi, 1);
    r.require(fkill.apply_form(dx2).is_zero(), "Omega(f)(dx2) = 0 when f(x2) = 0");
    Form dx1x2 = Form::from_element(AlgebraElement::generator(s2, 0) *
                                        AlgebraElement::generator(s2, 1),
                                    phi)
                     .differential();
    r.require(fkill.apply_form(dx1x2).is_zero(), "Omega(f)(d(x1 x2)) = 0");
    r.require(fid.apply_form(dx1x2) == dx1x2, "Omega(id) = id");

    // related pairs under f(x2 -> 0): seeds plus bracket/sum closures
    Derivation d1 = Derivation::coordinate(s2, 0);
    Derivation d2 = Derivation::coordinate(s2, 1);
    FieldValuedForm id = FieldValuedForm::identity(s2, phi);
    FieldValuedForm k_d1 = FieldValuedForm::from_derivation(d1, phi);
    FieldValuedForm k_x2d2 = FieldValuedForm::from_derivation(
        d2.left_scaled(AlgebraElement::generator(s2, 1)), phi);
    FieldValuedForm k_x1d1 = FieldValuedForm::from_derivation(
        d1.left_scaled(AlgebraElement::generator(s2, 0)), phi);
    FieldValuedForm k_x2d1 = FieldValuedForm::from_derivation(
        d1.left_scaled(AlgebraElement::generator(s2, 1)), phi);

    using Pair = std::pair<FieldValuedForm, FieldValuedForm>;
    std::vector<Pair> family = {
        {id, id},
        {k_d1, k_d1},
        {k_x1d1, k_x1d1},
        {k_x2d2, FieldValuedForm::zero(s2, phi, 0, k_x2d2.grade())},
        {k_x2d1, FieldValuedForm::zero(s2, phi, 0, k_x2d1.grade())},
    };
    // closures: Nijenhuis and FN brackets of related pairs stay related
    size_t base = family.size();
    for (size_t a = 0; a < base && family.size() < 14; ++a) {
        for (size_t b = 0; b < base && family.size() < 14; ++b) {
            family.emplace_back(nijenhuis_bracket(family[a].first, family[b].first),
                                nijenhuis_bracket(family[a].second, family[b].second));
            family.emplace_back(fn_bracket(family[a].first, family[b].first),
                                fn_bracket(family[a].second, family[b].second));
        }
    }
    // scalar multiples round the family out to 20
    while (family.size() < 20) {
        const Pair& p = family[family.size() % base];
        Scalar c = random_scalar(rng, 1);
        family.emplace_back(p.first.scaled(c), p.second.scaled(c));
    }

    long item_checked = 0;
    for (const auto& [k, kp] : family) {
        r.require(check_f_related(fkill, k, kp), "constructed pair is f-related");
        NaturalityReport rep = naturality_report(fkill, k, kp, k, kp, 2, cfg.seed);
        r.require(rep.preconditions_ok, "report preconditions hold");
        for (const auto& item : rep.items)
            r.require(item.passed,
                      "naturality item " + std::to_string(item.item) + " under x2 -> 0");
        ++item_checked;
        // identity hom: everything is related to itself
        NaturalityReport rep_id = naturality_report(fid, k, k, k, k, 2, cfg.seed);
        r.require(rep_id.all_passed(), "naturality battery under f = id");
    }
    r.require(item_checked >= 20, "family has 20 constructed pairs");

    // deliberately unrelated pair: K = d2-field vs K' = 0
    FieldValuedForm k_d2 = FieldValuedForm::from_derivation(d2, phi);
    FieldValuedForm kp0 = FieldValuedForm::zero(s2, phi, 0, k_d2.grade());
    r.require(!check_f_related(fkill, k_d2, kp0), "negative pair is not f-related");
    NaturalityReport neg = naturality_report(fkill, k_d2, kp0, k_d2, kp0, 2, cfg.seed);
    r.require(!neg.preconditions_ok, "negative report records the failing precondition");
    bool item1_failed = false;
    std::string witness;
    for (const auto& item : neg.items)
        if (item.item == 1 && !item.passed) {
            item1_failed = true;
            witness = item.witness;
        }
    r.require(item1_failed && !witness.empty(), "item (1) fails with a witness");
    return r;
}

CheckResult check_cohomology(const CheckConfig& cfg) {
    CheckResult r{"cohomology"};
    (void)cfg;

    // independent counting oracle: d maps the head monomial into the first
    // slot, so ker d_i is spanned by unit-head tensors and the rank of d_i is
    // the number of non-unit-head tensors; this mirrors the contracting
    // homotopy of the universal calculus.
    auto expected_betti = [](const PresentationPtr& pres, const Grade& alpha, int imax) {
        std::vector<long> out;
        long prev_nonunit = 0;
        for (int i = 0; i <= imax; ++i) {
            auto basis = component_basis_tensors(pres, i, alpha);
            long unit_head = 0;
            for (const auto& t : basis)
                if (pres->is_unit(t.m0)) ++unit_head;
            out.push_back(unit_head - prev_nonunit);
            prev_nonunit = static_cast<long>(basis.size()) - unit_head;
        }
        return out;
    };

    auto cs2 = AlgebraPresentation::clock_shift(2);
    auto phi2 = GradedUnitHom::trivial(cs2->group());
    {
        BettiResult b = betti_numbers(cs2, phi2, Grade(cs2->group(), {0, 0}), 2);
        r.require(b.betti == std::vector<long>({1, 0, 0}),
                  "clock-shift n=2, alpha=0: betti [1,0,0]");
        r.require(b.dims == std::vector<long>({1, 3, 9}), "component dims [1,3,9]");
    }
    for (long a1 = 0; a1 < 2; ++a1)
        for (long a2 = 0; a2 < 2; ++a2) {
            Grade alpha(cs2->group(), {a1, a2});
            BettiResult b = betti_numbers(cs2, phi2, alpha, 2);
            r.require(b.betti[0] == (alpha.is_zero() ? 1 : 0),
                      "b0 = [alpha = 0] on clock-shift n=2");
            r.require(b.betti[1] == 0 && b.betti[2] == 0, "b1 = b2 = 0 on clock-shift n=2");
            r.require(b.betti == expected_betti(cs2, alpha, 2),
                      "rank computation matches the counting oracle");
        }
    // the 15 nonzero grades of Z_4 + Z_4 (clock-shift n=4)
    {
        auto cs4 = AlgebraPresentation::clock_shift(4);
        auto phi4 = GradedUnitHom::trivial(cs4->group());
        for (long a1 = 0; a1 < 4; ++a1)
            for (long a2 = 0; a2 < 4; ++a2) {
                Grade alpha(cs4->group(), {a1, a2});
                BettiResult b = betti_numbers(cs4, phi4, alpha, 1);
                r.require(b.betti[0] == (alpha.is_zero() ? 1 : 0),
                          "b0 = [alpha = 0] on clock-shift n=4");
                r.require(b.betti == expected_betti(cs4, alpha, 1), "counting oracle at n=4");
            }
    }

    auto cs3 = AlgebraPresentation::clock_shift(3);
    auto phi3 = GradedUnitHom::trivial(cs3->group());
    for (long a1 = 0; a1 < 3; ++a1)
        for (long a2 = 0; a2 < 3; ++a2) {
            Grade alpha(cs3->group(), {a1, a2});
            BettiResult b = betti_numbers(cs3, phi3, alpha, 2);
            r.require(b.betti[0] == (alpha.is_zero() ? 1 : 0), "b0 pattern on clock-shift n=3");
            r.require(b.betti[1] == 0 && b.betti[2] == 0, "b1 = b2 = 0 on clock-shift n=3");
            r.require(b.betti == expected_betti(cs3, alpha, 2), "counting oracle at n=3");
        }

    auto s2 = AlgebraPresentation::quantum_plane(2);
    auto phis2 = GradedUnitHom::trivial(s2->group());
    for (long a1 = 0; a1 <= 4; ++a1)
        for (long a2 = 0; a2 + a1 <= 4; ++a2) {
            Grade alpha(s2->group(), {a1, a2});
            BettiResult b = betti_numbers(s2, phis2, alpha, 2);
            r.require(b.betti[0] == (alpha.is_zero() ? 1 : 0), "b0 pattern on S_2^q");
            r.require(b.betti[1] == 0 && b.betti[2] == 0, "b1 = b2 = 0 on S_2^q");
            r.require(b.betti == expected_betti(s2, alpha, 2), "counting oracle on S_2^q");
        }
    {
        auto s1 = AlgebraPresentation::quantum_plane(1);
        BettiResult b = betti_numbers(s1, GradedUnitHom::trivial(s1->group()),
                                      Grade(s1->group(), {0}), 1);
        r.require(b.betti[0] == 1, "S_1^q, alpha=0: b0 = 1");
    }
    // pinned component bases
    {
        auto basis = component_basis_tensors(s2, 1, Grade(s2->group(), {1, 1}));
        r.require(basis.size() == 3, "dim Omega^1_{(1,(1,1))}(S_2^q) = 3");
    }
    {
        long total = 0;
        for (long a1 = 0; a1 < 2; ++a1)
            for (long a2 = 0; a2 < 2; ++a2)
                total += static_cast<long>(
                    component_basis_tensors(cs2, 1, Grade(cs2->group(), {a1, a2})).size());
        r.require(total == 12, "dim Omega^1(clock-shift n=2) = n^2(n^2-1) = 12");
    }
    return r;
}

CheckResult check_parser_roundtrip(const CheckConfig& cfg) {
    CheckResult r{"parser-roundtrip"};
    Rng rng(cfg.seed);
    struct Ctx {
        PresentationPtr pres;
        int eps;
    };
    std::vector<Ctx> ctxs = {{AlgebraPresentation::quantum_plane(2), 1},
                             {AlgebraPresentation::quantum_plane(4), 1},
                             {AlgebraPresentation::clock_shift(2), 2},
                             {AlgebraPresentation::clock_shift(4), 4},
                             {AlgebraPresentation::cyclic_group(4), 4}};
    long total = cfg.n(500);
    for (long i = 0; i < total; ++i) {
        const Ctx& c = ctxs[static_cast<size_t>(i) % ctxs.size()];
        GradedUnitHom phi = GradedUnitHom::trivial(c.pres->group());
        EvalContext ctx{c.pres, phi, std::max(c.eps, c.pres->root_order())};
        if (i % 3 == 0) {
            Form w = random_form(c.pres, phi, rng, 2, 3, 3);
            std::string text = form_to_string(w);
            Form back = parse_and_eval(text, ctx);
            r.require(back == w, "form round trip: " + text);
        } else {
            AlgebraElement u = random_element(c.pres, rng, 3, 3);
            std::string text = element_to_string(u);
            AlgebraElement back = parse_and_eval(text, ctx).to_element();
            r.require(back == u, "element round trip: " + text);
        }
    }
    // pinned parser examples
    auto qp2 = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(qp2->group());
    EvalContext ctx{qp2, phi, 1};
    r.require(parse_and_eval("x2*x1", ctx).to_element() ==
                  Scalar::q_power(-1) * (AlgebraElement::generator(qp2, 0) *
                                         AlgebraElement::generator(qp2, 1)),
              "x2*x1 normalizes");
    {
        Form w = parse_and_eval("x1*d(x2) /\\ d(x1)", ctx);
        Form expected = Form::tensor(
            qp2, phi,
            FormTensor{qp2->generator_monomial(0),
                       {qp2->generator_monomial(1), qp2->generator_monomial(0)}});
        r.require(w == expected, "wedge expression parses to the tensor");
    }
    bool threw = false;
    try {
        parse_and_eval("x3", ctx);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::UnknownGenerator;
    }
    r.require(threw, "x3 under qplane:N=2 raises UnknownGenerator");
    threw = false;
    try {
        parse_expr("x1 + * x2");
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::SyntaxError && e.line() == 1 && e.col() == 6;
    }
    r.require(threw, "syntax errors carry positions");
    return r;
}

std::vector<std::pair<std::string, std::function<CheckResult(const CheckConfig&)>>>
all_check_suites() {
    return {
        {"scalars", check_scalars},
        {"cocycle-laws", check_cocycle_laws},
        {"algebra-product", check_algebra_product},
        {"rho-commutativity", check_rho_commutativity},
        {"matrix-oracle", check_matrix_oracle},
        {"derivations", check_derivations},
        {"universal-calculus", check_universal_calculus},
        {"universality", check_universality},
        {"contraction", check_contraction},
        {"decompose", check_decompose},
        {"fn-bracket", check_fn_bracket},
        {"naturality", check_naturality},
        {"cohomology", check_cohomology},
        {"parser-roundtrip", check_parser_roundtrip},
    };
}

} // namespace rhoform
