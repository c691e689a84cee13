#include "rhoform/omega_derivation.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

OmegaDerivation::OmegaDerivation(PresentationPtr pres, GradedUnitHom phi, Bidegree degree,
                                 std::vector<Form> on_generators,
                                 std::vector<Form> on_differentials)
    : pres_(std::move(pres)), phi_(std::move(phi)), degree_(std::move(degree)),
      on_gen_(std::move(on_generators)), on_dgen_(std::move(on_differentials)) {
    if (degree_.grade.group != pres_->group())
        fail(ErrorKind::GroupMismatch, "derivation grade not in the presentation's group");
    size_t g = static_cast<size_t>(pres_->generator_count());
    if (on_gen_.size() != g || on_dgen_.size() != g)
        fail(ErrorKind::IllDefined, "need values on every generator and differential");
    validate();
}

OmegaDerivation OmegaDerivation::zero(PresentationPtr pres, GradedUnitHom phi, Bidegree degree) {
    size_t g = static_cast<size_t>(pres->generator_count());
    std::vector<Form> zg(g, Form::zero(pres, phi));
    return OmegaDerivation(std::move(pres), std::move(phi), std::move(degree), zg, zg);
}

OmegaDerivation OmegaDerivation::exterior_d(PresentationPtr pres, GradedUnitHom phi) {
    std::vector<Form> on_gen, on_dgen;
    for (int i = 0; i < pres->generator_count(); ++i) {
        on_gen.push_back(Form::generator_differential(pres, phi, i));
        on_dgen.push_back(Form::zero(pres, phi));
    }
    Bidegree deg{1, Grade::zero(pres->group())};
    return OmegaDerivation(std::move(pres), std::move(phi), std::move(deg), std::move(on_gen),
                           std::move(on_dgen));
}

OmegaDerivation OmegaDerivation::from_contraction(const FieldValuedForm& k) {
    const auto& pres = k.presentation();
    std::vector<Form> on_gen(static_cast<size_t>(pres->generator_count()),
                             Form::zero(pres, k.phi_twist()));
    std::vector<Form> on_dgen;
    for (int i = 0; i < pres->generator_count(); ++i) on_dgen.push_back(k.value(i));
    return OmegaDerivation(pres, k.phi_twist(), k.contraction_degree(), std::move(on_gen),
                           std::move(on_dgen));
}

OmegaDerivation OmegaDerivation::from_lie(const FieldValuedForm& k) {
    return omega_derivation_bracket(from_contraction(k),
                                    exterior_d(k.presentation(), k.phi_twist()));
}

bool OmegaDerivation::is_zero() const {
    for (const auto& v : on_gen_)
        if (!v.is_zero()) return false;
    for (const auto& v : on_dgen_)
        if (!v.is_zero()) return false;
    return true;
}

void OmegaDerivation::validate() const {
    for (int i = 0; i < pres_->generator_count(); ++i) {
        const Form& a = on_gen_[static_cast<size_t>(i)];
        const Form& b = on_dgen_[static_cast<size_t>(i)];
        require_same_presentation(pres_, a.presentation());
        require_same_presentation(pres_, b.presentation());
        if (a.phi() != phi_ || b.phi() != phi_) fail(ErrorKind::PhiMismatch, "phi mismatch");
        Grade target = degree_.grade + pres_->generator(i).grade;
        if (!a.is_zero()) {
            Bidegree d = a.bidegree();
            if (d.form_degree != degree_.form_degree || d.grade != target)
                fail(ErrorKind::IllDefined,
                     "value on " + pres_->generator(i).name + " has wrong bidegree");
        }
        if (!b.is_zero()) {
            Bidegree d = b.bidegree();
            if (d.form_degree != degree_.form_degree + 1 || d.grade != target)
                fail(ErrorKind::IllDefined,
                     "value on d" + pres_->generator(i).name + " has wrong bidegree");
        }
    }
    // relations of A and their differentials, compared on both word orders
    for (int i = 0; i < pres_->generator_count(); ++i) {
        for (int j = 0; j < i; ++j) {
            Scalar t = pres_->rho().eval(pres_->generator(i).grade, pres_->generator(j).grade);
            if (apply_word({i, j}) != t * apply_word({j, i}))
                fail(ErrorKind::IllDefined, "derivation violates a defining relation of A");
            if (apply_d_word({i, j}) != t * apply_d_word({j, i}))
                fail(ErrorKind::IllDefined,
                     "derivation violates the differential of a defining relation");
        }
        int n = pres_->generator(i).exponent_order;
        if (n > 0) {
            std::vector<int> word(static_cast<size_t>(n), i);
            if (!apply_word(word).is_zero())
                fail(ErrorKind::IllDefined, "derivation violates a power relation");
            if (!apply_d_word(word).is_zero())
                fail(ErrorKind::IllDefined,
                     "derivation violates the differential of a power relation");
        }
    }
}

Form OmegaDerivation::apply_monomial(const Monomial& m) const {
    size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size()) return Form::zero(pres_, phi_); // D(1) = 0
    Monomial rest = m;
    rest[i] -= 1;
    const Grade& gi = pres_->generator(static_cast<int>(i)).grade;
    Form rest_form = Form::from_element(AlgebraElement::monomial(pres_, rest), phi_);
    Form out = on_gen_[i] * rest_form;
    Form tail = apply_monomial(rest);
    if (!tail.is_zero()) {
        ExtendedCocycle rhobar(pres_->rho(), phi_);
        Scalar tw = rhobar.eval(degree_, Bidegree{0, gi});
        Form xi = Form::from_element(AlgebraElement::generator(pres_, static_cast<int>(i)), phi_);
        out = out + tw * (xi * tail);
    }
    return out;
}

Form OmegaDerivation::apply_d_monomial(const Monomial& m) const {
    // d(x_i m') = dx_i m' + phi(|x_i|) x_i dm'
    size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size()) return Form::zero(pres_, phi_); // D(d1) = 0
    Monomial rest = m;
    rest[i] -= 1;
    const Grade& gi = pres_->generator(static_cast<int>(i)).grade;
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    AlgebraElement rest_elem = AlgebraElement::monomial(pres_, rest);
    Form rest_form = Form::from_element(rest_elem, phi_);
    Form xi = Form::from_element(AlgebraElement::generator(pres_, static_cast<int>(i)), phi_);

    Form out = on_dgen_[i] * rest_form;
    Form d_rest_applied = apply_monomial(rest);
    if (!d_rest_applied.is_zero())
        out = out + rhobar.eval(degree_, Bidegree{1, gi}) *
                        (Form::generator_differential(pres_, phi_, static_cast<int>(i)) *
                         d_rest_applied);
    Scalar phi_i = phi_.eval(gi);
    Form d_rest = rest_form.differential();
    if (!d_rest.is_zero() && !on_gen_[i].is_zero())
        out = out + phi_i * (on_gen_[i] * d_rest);
    Form tail = apply_d_monomial(rest);
    if (!tail.is_zero())
        out = out + (phi_i * rhobar.eval(degree_, Bidegree{0, gi})) * (xi * tail);
    return out;
}

Form OmegaDerivation::apply_word(const std::vector<int>& letters) const {
    if (letters.empty()) return Form::zero(pres_, phi_);
    int x = letters.front();
    std::vector<int> rest(letters.begin() + 1, letters.end());
    AlgebraElement rest_elem = AlgebraElement::unit(pres_);
    for (int g : rest) rest_elem = rest_elem * AlgebraElement::generator(pres_, g);
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    const Grade& gx = pres_->generator(x).grade;
    Form out = on_gen_[static_cast<size_t>(x)] * Form::from_element(rest_elem, phi_);
    Form tail = apply_word(rest);
    if (!tail.is_zero()) {
        Form xf = Form::from_element(AlgebraElement::generator(pres_, x), phi_);
        out = out + rhobar.eval(degree_, Bidegree{0, gx}) * (xf * tail);
    }
    return out;
}

Form OmegaDerivation::apply_d_word(const std::vector<int>& letters) const {
    if (letters.empty()) return Form::zero(pres_, phi_);
    int x = letters.front();
    std::vector<int> rest(letters.begin() + 1, letters.end());
    AlgebraElement rest_elem = AlgebraElement::unit(pres_);
    for (int g : rest) rest_elem = rest_elem * AlgebraElement::generator(pres_, g);
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    const Grade& gx = pres_->generator(x).grade;
    Form xf = Form::from_element(AlgebraElement::generator(pres_, x), phi_);
    Form rest_form = Form::from_element(rest_elem, phi_);

    // D(d(x rest)) = D(dx) rest + rhobar(deg,(1,|x|)) dx D(rest)
    //              + phi(|x|) [ D(x) d(rest) + rhobar(deg,(0,|x|)) x D(d rest) ]
    Form out = on_dgen_[static_cast<size_t>(x)] * rest_form;
    Form d_rest_applied = apply_word(rest);
    if (!d_rest_applied.is_zero())
        out = out + rhobar.eval(degree_, Bidegree{1, gx}) *
                        (Form::generator_differential(pres_, phi_, x) * d_rest_applied);
    Scalar phi_x = phi_.eval(gx);
    Form d_rest = rest_form.differential();
    if (!d_rest.is_zero() && !on_gen_[static_cast<size_t>(x)].is_zero())
        out = out + phi_x * (on_gen_[static_cast<size_t>(x)] * d_rest);
    Form tail = apply_d_word(rest);
    if (!tail.is_zero())
        out = out + (phi_x * rhobar.eval(degree_, Bidegree{0, gx})) * (xf * tail);
    return out;
}

Form OmegaDerivation::apply_element(const AlgebraElement& u) const {
    require_same_presentation(pres_, u.presentation());
    Form out = Form::zero(pres_, phi_);
    for (const auto& [m, c] : u.terms()) out = out + c * apply_monomial(m);
    return out;
}

Form OmegaDerivation::apply(const Form& w) const {
    require_same_presentation(pres_, w.presentation());
    if (w.phi() != phi_) fail(ErrorKind::PhiMismatch, "phi mismatch");
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    Form out = Form::zero(pres_, phi_);
    for (const auto& [t, c] : w.terms()) {
        // D(m0) with the remaining slots attached
        Form head = apply_monomial(t.m0);
        if (!head.is_zero()) out = out + c * head.with_appended_bars(t.bars);
        // insertion into each differential slot
        Bidegree passed{0, pres_->monomial_grade(t.m0)};
        for (size_t i = 0; i < t.bars.size(); ++i) {
            Form inner = apply_d_monomial(t.bars[i]);
            if (!inner.is_zero()) {
                Scalar tw = rhobar.eval(degree_, passed);
                Form prefix = Form::tensor(
                    pres_, phi_,
                    FormTensor{t.m0, {t.bars.begin(), t.bars.begin() + static_cast<long>(i)}});
                Form whole = (prefix * inner).with_appended_bars(
                    {t.bars.begin() + static_cast<long>(i) + 1, t.bars.end()});
                out = out + (c * tw) * whole;
            }
            passed = passed + Bidegree{1, pres_->monomial_grade(t.bars[i])};
        }
    }
    return out;
}

OmegaDerivation OmegaDerivation::operator+(const OmegaDerivation& o) const {
    require_same_presentation(pres_, o.pres_);
    if (phi_ != o.phi_) fail(ErrorKind::PhiMismatch, "phi mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_)
        fail(ErrorKind::DegreeMismatch, "cannot add derivations of different degrees");
    std::vector<Form> g, dg;
    for (size_t i = 0; i < on_gen_.size(); ++i) {
        g.push_back(on_gen_[i] + o.on_gen_[i]);
        dg.push_back(on_dgen_[i] + o.on_dgen_[i]);
    }
    return OmegaDerivation(pres_, phi_, degree_, std::move(g), std::move(dg));
}

OmegaDerivation OmegaDerivation::operator-() const { return scaled(-Scalar::one()); }

OmegaDerivation OmegaDerivation::scaled(const Scalar& c) const {
    std::vector<Form> g, dg;
    for (size_t i = 0; i < on_gen_.size(); ++i) {
        g.push_back(c * on_gen_[i]);
        dg.push_back(c * on_dgen_[i]);
    }
    return OmegaDerivation(pres_, phi_, degree_, std::move(g), std::move(dg));
}

bool OmegaDerivation::operator==(const OmegaDerivation& o) const {
    if ((pres_ != o.pres_ && *pres_ != *o.pres_) || phi_ != o.phi_) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && on_gen_ == o.on_gen_ && on_dgen_ == o.on_dgen_;
}

OmegaDerivation omega_derivation_bracket(const OmegaDerivation& a, const OmegaDerivation& b) {
    require_same_presentation(a.presentation(), b.presentation());
    if (a.phi_twist() != b.phi_twist()) fail(ErrorKind::PhiMismatch, "phi mismatch");
    const auto& pres = a.presentation();
    ExtendedCocycle rhobar(pres->rho(), a.phi_twist());
    Scalar tw = rhobar.eval(a.degree(), b.degree());
    std::vector<Form> on_gen, on_dgen;
    for (int i = 0; i < pres->generator_count(); ++i) {
        Form xi = Form::from_element(AlgebraElement::generator(pres, i), a.phi_twist());
        Form dxi = Form::generator_differential(pres, a.phi_twist(), i);
        on_gen.push_back(a.apply(b.apply(xi)) - tw * b.apply(a.apply(xi)));
        on_dgen.push_back(a.apply(b.apply(dxi)) - tw * b.apply(a.apply(dxi)));
    }
    return OmegaDerivation(pres, a.phi_twist(), a.degree() + b.degree(), std::move(on_gen),
                           std::move(on_dgen));
}

std::pair<FieldValuedForm, FieldValuedForm> decompose_derivation(const OmegaDerivation& d) {
    if (d.degree().form_degree < 0)
        fail(ErrorKind::DegreeUnderflow, "decomposition needs form degree >= 0");
    const auto& pres = d.presentation();
    std::vector<Form> k_vals;
    for (int i = 0; i < pres->generator_count(); ++i) k_vals.push_back(d.on_generator(i));
    FieldValuedForm k(pres, d.phi_twist(), d.degree().form_degree, d.degree().grade,
                      std::move(k_vals));
    std::vector<Form> l_vals;
    for (int i = 0; i < pres->generator_count(); ++i) {
        Form dxi = Form::generator_differential(pres, d.phi_twist(), i);
        l_vals.push_back(d.on_differential(i) - lie_derivative(k, dxi));
    }
    FieldValuedForm l(pres, d.phi_twist(), d.degree().form_degree + 1, d.degree().grade,
                      std::move(l_vals));
    return {std::move(k), std::move(l)};
}

} // namespace rhoform
