#include "rhoform/field_valued_form.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

FieldValuedForm::FieldValuedForm(PresentationPtr pres, GradedUnitHom phi, long target_degree,
                                 Grade alpha, std::vector<Form> generator_values)
    : pres_(std::move(pres)), phi_(std::move(phi)), target_degree_(target_degree),
      alpha_(std::move(alpha)), values_(std::move(generator_values)) {
    if (target_degree_ < 0)
        fail(ErrorKind::DegreeUnderflow, "field-valued form target degree must be >= 0");
    if (alpha_.group != pres_->group())
        fail(ErrorKind::GroupMismatch, "grade not in the presentation's group");
    if (static_cast<int>(values_.size()) != pres_->generator_count())
        fail(ErrorKind::IllDefined, "need one value per generator differential");
    validate();
}

FieldValuedForm FieldValuedForm::zero(PresentationPtr pres, GradedUnitHom phi,
                                      long target_degree, Grade alpha) {
    std::vector<Form> vals(static_cast<size_t>(pres->generator_count()),
                           Form::zero(pres, phi));
    return FieldValuedForm(std::move(pres), std::move(phi), target_degree, std::move(alpha),
                           std::move(vals));
}

FieldValuedForm FieldValuedForm::identity(PresentationPtr pres, GradedUnitHom phi) {
    std::vector<Form> vals;
    for (int i = 0; i < pres->generator_count(); ++i)
        vals.push_back(Form::generator_differential(pres, phi, i));
    return FieldValuedForm(pres, phi, 1, Grade::zero(pres->group()), std::move(vals));
}

FieldValuedForm FieldValuedForm::from_derivation(const Derivation& x, GradedUnitHom phi) {
    std::vector<Form> vals;
    for (const auto& v : x.values()) vals.push_back(Form::from_element(v, phi));
    return FieldValuedForm(x.presentation(), std::move(phi), 0, x.degree(), std::move(vals));
}

bool FieldValuedForm::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

void FieldValuedForm::validate() const {
    for (int i = 0; i < pres_->generator_count(); ++i) {
        const Form& v = values_[static_cast<size_t>(i)];
        require_same_presentation(pres_, v.presentation());
        if (v.phi() != phi_) fail(ErrorKind::PhiMismatch, "value carries a different phi");
        if (v.is_zero()) continue;
        Bidegree d = v.bidegree();
        if (d.form_degree != target_degree_ || d.grade != alpha_ + pres_->generator(i).grade)
            fail(ErrorKind::IllDefined,
                 "value on d" + pres_->generator(i).name + " has wrong bidegree");
    }
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    auto tau = [&](const Grade& g) {
        return rhobar.eval(Bidegree{target_degree_, alpha_}, Bidegree{0, g});
    };
    // pairwise relations: X(x_i x_j) = swap * X(x_j x_i) with
    // X(ab) = X(a) b + rhobar((k,alpha),(0,|a|)) a X(b)
    for (int i = 0; i < pres_->generator_count(); ++i) {
        Form xi = Form::from_element(AlgebraElement::generator(pres_, i), phi_);
        Grade gi = pres_->generator(i).grade;
        for (int j = 0; j < i; ++j) {
            Form xj = Form::from_element(AlgebraElement::generator(pres_, j), phi_);
            Grade gj = pres_->generator(j).grade;
            Form lhs = value(i) * xj + tau(gi) * (xi * value(j));
            Form rhs = value(j) * xi + tau(gj) * (xj * value(i));
            Scalar t = pres_->rho().eval(gi, gj);
            if (lhs != t * rhs)
                fail(ErrorKind::IllDefined,
                     "field-valued form violates the relation between " +
                         pres_->generator(i).name + " and " + pres_->generator(j).name);
        }
        int n = pres_->generator(i).exponent_order;
        if (n > 0) {
            AlgebraElement gen = AlgebraElement::generator(pres_, i);
            Form acc = Form::zero(pres_, phi_);
            AlgebraElement left = AlgebraElement::unit(pres_);
            for (int s = 0; s < n; ++s) {
                AlgebraElement right = AlgebraElement::unit(pres_);
                for (int t2 = 0; t2 < n - 1 - s; ++t2) right = right * gen;
                Form mid = Form::from_element(left, phi_) * value(i) *
                           Form::from_element(right, phi_);
                acc = acc + tau(gi.scaled(s)) * mid;
                left = left * gen;
            }
            if (!acc.is_zero())
                fail(ErrorKind::IllDefined, "field-valued form violates the power relation of " +
                                                pres_->generator(i).name);
        }
    }
}

Form FieldValuedForm::apply_d_monomial(const Monomial& m) const {
    size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size()) return Form::zero(pres_, phi_); // K(d1) = 0
    Monomial rest = m;
    rest[i] -= 1;
    const Grade& gi = pres_->generator(static_cast<int>(i)).grade;
    Form rest_form = Form::from_element(AlgebraElement::monomial(pres_, rest), phi_);
    Form out = values_[i] * rest_form;
    Form tail = apply_d_monomial(rest);
    if (!tail.is_zero()) {
        ExtendedCocycle rhobar(pres_->rho(), phi_);
        Scalar tw = rhobar.eval(Bidegree{target_degree_, alpha_}, Bidegree{0, gi});
        Form xi = Form::from_element(AlgebraElement::generator(pres_, static_cast<int>(i)), phi_);
        out = out + tw * (xi * tail);
    }
    return out;
}

Form FieldValuedForm::apply_d(const AlgebraElement& u) const {
    require_same_presentation(pres_, u.presentation());
    Form out = Form::zero(pres_, phi_);
    for (const auto& [m, c] : u.terms()) out = out + c * apply_d_monomial(m);
    return out;
}

Form FieldValuedForm::apply(const Form& one_form) const {
    require_same_presentation(pres_, one_form.presentation());
    if (one_form.phi() != phi_) fail(ErrorKind::PhiMismatch, "phi mismatch");
    ExtendedCocycle rhobar(pres_->rho(), phi_);
    Bidegree jdeg = contraction_degree();
    Form out = Form::zero(pres_, phi_);
    for (const auto& [t, c] : one_form.terms()) {
        if (t.bars.size() != 1)
            fail(ErrorKind::BadArgument, "field-valued form applied to a non-1-form");
        // K(m0 d(m)) = rhobar(jdeg, (0,|m0|)) m0 K(dm)
        Scalar tw = rhobar.eval(jdeg, Bidegree{0, pres_->monomial_grade(t.m0)});
        Form head = Form::from_element(AlgebraElement::monomial(pres_, t.m0), phi_);
        out = out + (c * tw) * (head * apply_d_monomial(t.bars[0]));
    }
    return out;
}

Derivation FieldValuedForm::to_derivation() const {
    if (target_degree_ != 0)
        fail(ErrorKind::BadArgument, "only target degree 0 corresponds to a derivation");
    std::vector<AlgebraElement> vals;
    for (const auto& v : values_) vals.push_back(v.to_element());
    return Derivation(pres_, alpha_, std::move(vals));
}

FieldValuedForm FieldValuedForm::operator+(const FieldValuedForm& o) const {
    require_same_presentation(pres_, o.pres_);
    if (phi_ != o.phi_) fail(ErrorKind::PhiMismatch, "phi mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (target_degree_ != o.target_degree_ || alpha_ != o.alpha_)
        fail(ErrorKind::DegreeMismatch, "cannot add field-valued forms of different degrees");
    std::vector<Form> vals;
    for (size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] + o.values_[i]);
    return FieldValuedForm(pres_, phi_, target_degree_, alpha_, std::move(vals));
}

FieldValuedForm FieldValuedForm::operator-() const { return scaled(-Scalar::one()); }

FieldValuedForm FieldValuedForm::scaled(const Scalar& c) const {
    std::vector<Form> vals;
    for (const auto& v : values_) vals.push_back(c * v);
    return FieldValuedForm(pres_, phi_, target_degree_, alpha_, std::move(vals));
}

bool FieldValuedForm::operator==(const FieldValuedForm& o) const {
    if ((pres_ != o.pres_ && *pres_ != *o.pres_) || phi_ != o.phi_) return false;
    if (is_zero() && o.is_zero()) return true;
    return target_degree_ == o.target_degree_ && alpha_ == o.alpha_ && values_ == o.values_;
}

Form contract(const FieldValuedForm& k, const Form& w) {
    require_same_presentation(k.presentation(), w.presentation());
    if (w.phi() != k.phi_twist()) fail(ErrorKind::PhiMismatch, "phi mismatch");
    const auto& pres = k.presentation();
    ExtendedCocycle rhobar(pres->rho(), k.phi_twist());
    Bidegree jdeg = k.contraction_degree();
    Form out = Form::zero(pres, k.phi_twist());
    for (const auto& [t, c] : w.terms()) {
        Bidegree passed{0, pres->monomial_grade(t.m0)};
        for (size_t i = 0; i < t.bars.size(); ++i) {
            Scalar tw = rhobar.eval(jdeg, passed);
            // m0 d(b_1) ... d(b_{i-1}) * K(d b_i) * d(b_{i+1}) ...
            Form prefix = Form::tensor(
                pres, k.phi_twist(),
                FormTensor{t.m0, {t.bars.begin(), t.bars.begin() + static_cast<long>(i)}});
            Form inserted = prefix * k.apply_d_monomial(t.bars[i]);
            Form whole = inserted.with_appended_bars(
                {t.bars.begin() + static_cast<long>(i) + 1, t.bars.end()});
            out = out + (c * tw) * whole;
            passed = passed + Bidegree{1, pres->monomial_grade(t.bars[i])};
        }
    }
    return out;
}

Form lie_derivative(const FieldValuedForm& k, const Form& w) {
    const auto& pres = k.presentation();
    ExtendedCocycle rhobar(pres->rho(), k.phi_twist());
    Scalar tw = rhobar.eval(k.contraction_degree(),
                            Bidegree{1, Grade::zero(pres->group())});
    return contract(k, w.differential()) - tw * contract(k, w).differential();
}

FieldValuedForm contract_compose(const FieldValuedForm& k, const FieldValuedForm& l) {
    require_same_presentation(k.presentation(), l.presentation());
    if (k.phi_twist() != l.phi_twist()) fail(ErrorKind::PhiMismatch, "phi mismatch");
    const auto& pres = k.presentation();
    long target = k.target_degree() + l.target_degree() - 1;
    Grade alpha = k.grade() + l.grade();
    if (target < 0) {
        // both are fields; contractions vanish on Omega^0
        return FieldValuedForm::zero(pres, k.phi_twist(), 0, std::move(alpha));
    }
    std::vector<Form> vals;
    for (int i = 0; i < pres->generator_count(); ++i) vals.push_back(contract(k, l.value(i)));
    return FieldValuedForm(pres, k.phi_twist(), target, std::move(alpha), std::move(vals));
}

FieldValuedForm nijenhuis_bracket(const FieldValuedForm& k, const FieldValuedForm& l) {
    FieldValuedForm first = contract_compose(k, l);
    FieldValuedForm second = contract_compose(l, k);
    ExtendedCocycle rhobar(k.presentation()->rho(), k.phi_twist());
    Scalar tw = rhobar.eval(k.contraction_degree(), l.contraction_degree());
    if (second.is_zero()) return first;
    return first + second.scaled(-tw);
}

FieldValuedForm fn_bracket(const FieldValuedForm& k, const FieldValuedForm& l) {
    require_same_presentation(k.presentation(), l.presentation());
    if (k.phi_twist() != l.phi_twist()) fail(ErrorKind::PhiMismatch, "phi mismatch");
    const auto& pres = k.presentation();
    ExtendedCocycle rhobar(pres->rho(), k.phi_twist());
    Scalar tw = rhobar.eval(Bidegree{k.target_degree(), k.grade()},
                            Bidegree{l.target_degree(), l.grade()});
    std::vector<Form> vals;
    for (int i = 0; i < pres->generator_count(); ++i) {
        Form xi = Form::from_element(AlgebraElement::generator(pres, i), k.phi_twist());
        Form v = lie_derivative(k, lie_derivative(l, xi)) -
                 tw * lie_derivative(l, lie_derivative(k, xi));
        vals.push_back(std::move(v));
    }
    return FieldValuedForm(pres, k.phi_twist(), k.target_degree() + l.target_degree(),
                           k.grade() + l.grade(), std::move(vals));
}

} // namespace rhoform
