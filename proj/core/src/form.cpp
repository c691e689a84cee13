#include "rhoform/form.hpp"

#include <algorithm>
#include <functional>

#include "rhoform/errors.hpp"

namespace rhoform {

Form::Form(PresentationPtr pres, GradedUnitHom phi, Terms terms)
    : pres_(std::move(pres)), phi_(std::move(phi)), terms_(std::move(terms)) {
    if (phi_.group() != pres_->group())
        fail(ErrorKind::GroupMismatch, "phi is not defined on the presentation's grade group");
    for (auto it = terms_.begin(); it != terms_.end();) {
        for (const Monomial& b : it->first.bars)
            if (pres_->is_unit(b))
                fail(ErrorKind::BadArgument, "unit monomial in a differential slot");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

Form Form::zero(PresentationPtr pres, GradedUnitHom phi) {
    return Form(std::move(pres), std::move(phi));
}

Form Form::from_element(const AlgebraElement& u, GradedUnitHom phi) {
    Form f(u.presentation(), std::move(phi));
    for (const auto& [m, c] : u.terms()) f.terms_.emplace(FormTensor{m, {}}, c);
    return f;
}

Form Form::from_scalar(PresentationPtr pres, GradedUnitHom phi, const Scalar& c) {
    return from_element(AlgebraElement::monomial(pres, pres->unit_monomial(), c),
                        std::move(phi));
}

Form Form::tensor(PresentationPtr pres, GradedUnitHom phi, FormTensor t, Scalar coeff) {
    Form f(std::move(pres), std::move(phi));
    if (!coeff.is_zero()) {
        for (const Monomial& b : t.bars)
            if (f.pres_->is_unit(b))
                fail(ErrorKind::BadArgument, "unit monomial in a differential slot");
        f.terms_.emplace(std::move(t), std::move(coeff));
    }
    return f;
}

Form Form::generator_differential(PresentationPtr pres, GradedUnitHom phi, int i) {
    FormTensor t{pres->unit_monomial(), {pres->generator_monomial(i)}};
    return tensor(std::move(pres), std::move(phi), std::move(t));
}

bool Form::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    auto it = terms_.begin();
    Bidegree d = tensor_bidegree(it->first);
    for (++it; it != terms_.end(); ++it)
        if (tensor_bidegree(it->first) != d) return false;
    return true;
}

Bidegree Form::tensor_bidegree(const FormTensor& t) const {
    Grade g = pres_->monomial_grade(t.m0);
    for (const Monomial& b : t.bars) g = g + pres_->monomial_grade(b);
    return Bidegree{static_cast<long>(t.bars.size()), std::move(g)};
}

Bidegree Form::bidegree() const {
    if (is_zero()) fail(ErrorKind::ZeroElement, "the zero form has indeterminate bidegree");
    if (!is_homogeneous()) fail(ErrorKind::NonHomogeneous, "form mixes bidegrees");
    return tensor_bidegree(terms_.begin()->first);
}

bool Form::is_element() const {
    for (const auto& [t, c] : terms_)
        if (!t.bars.empty()) return false;
    return true;
}

AlgebraElement Form::to_element() const {
    AlgebraElement::Terms terms;
    for (const auto& [t, c] : terms_) {
        if (!t.bars.empty())
            fail(ErrorKind::BadArgument, "form of positive degree is not an element");
        terms.emplace(t.m0, c);
    }
    return AlgebraElement(pres_, std::move(terms));
}

void Form::add_term(FormTensor t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::move(t), c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form r(pres_, phi_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

Form Form::operator+(const Form& o) const {
    require_same_presentation(pres_, o.pres_);
    if (phi_ != o.phi_) fail(ErrorKind::PhiMismatch, "forms carry different phi twists");
    Form r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::scaled(const Scalar& c) const {
    Form r(pres_, phi_);
    if (c.is_zero()) return r;
    for (const auto& [t, x] : terms_) r.terms_.emplace(t, x * c);
    return r;
}

Form Form::differential() const {
    Form r(pres_, phi_);
    for (const auto& [t, c] : terms_) {
        if (pres_->is_unit(t.m0)) continue; // d1 = 0, and d^2 = 0 overall
        FormTensor nt{pres_->unit_monomial(), {}};
        nt.bars.reserve(t.bars.size() + 1);
        nt.bars.push_back(t.m0);
        nt.bars.insert(nt.bars.end(), t.bars.begin(), t.bars.end());
        r.add_term(std::move(nt), c);
    }
    return r;
}

Form Form::with_appended_bars(const std::vector<Monomial>& extra) const {
    if (extra.empty()) return *this;
    Form r(pres_, phi_);
    for (const auto& [t, c] : terms_) {
        FormTensor nt = t;
        nt.bars.insert(nt.bars.end(), extra.begin(), extra.end());
        r.add_term(std::move(nt), c);
    }
    return r;
}

// (m0 da_1 ... da_k) * b = m0 da_1 ... da_{k-1} d(a_k b)
//                        - phi(|a_k|) (m0 da_1 ... da_{k-1} * a_k) db,
// recursing on the slot count.
Form Form::tensor_times_element(const FormTensor& t, const AlgebraElement& b) const {
    Form out(pres_, phi_);
    if (b.is_zero()) return out;
    if (t.bars.empty()) {
        AlgebraElement prod = AlgebraElement::monomial(pres_, t.m0) * b;
        return from_element(prod, phi_);
    }
    FormTensor prefix{t.m0, {t.bars.begin(), t.bars.end() - 1}};
    const Monomial& last = t.bars.back();
    AlgebraElement last_elem = AlgebraElement::monomial(pres_, last);

    // d(a_k b): append each non-unit monomial of a_k*b as the new last slot
    AlgebraElement ab = last_elem * b;
    for (const auto& [m, c] : ab.terms()) {
        if (pres_->is_unit(m)) continue;
        FormTensor nt = prefix;
        nt.bars.push_back(m);
        out.add_term(std::move(nt), c);
    }

    // - phi(|a_k|) (prefix * a_k) with every non-unit monomial of b appended
    Scalar tw = -phi_.eval(pres_->monomial_grade(last));
    Form carried = tensor_times_element(prefix, last_elem);
    for (const auto& [m, c] : b.terms()) {
        if (pres_->is_unit(m)) {
            continue; // db drops unit monomials
        }
        for (const auto& [s, cs] : carried.terms()) {
            FormTensor nt = s;
            nt.bars.push_back(m);
            out.add_term(std::move(nt), tw * c * cs);
        }
    }
    return out;
}

Form Form::operator*(const Form& o) const {
    require_same_presentation(pres_, o.pres_);
    if (phi_ != o.phi_) fail(ErrorKind::PhiMismatch, "forms carry different phi twists");
    Form out(pres_, phi_);
    for (const auto& [s, cs] : o.terms_) {
        AlgebraElement head = AlgebraElement::monomial(pres_, s.m0);
        for (const auto& [t, ct] : terms_) {
            Form left = tensor_times_element(t, head); // w * b0
            Form full = left.with_appended_bars(s.bars);
            for (const auto& [u, cu] : full.terms()) out.add_term(u, cu * cs * ct);
        }
    }
    return out;
}

bool Form::operator==(const Form& o) const {
    if (pres_ != o.pres_ && *pres_ != *o.pres_) return false;
    return phi_ == o.phi_ && terms_ == o.terms_;
}

bool leibniz_check(const Form& w, const Form& t) {
    if (w.is_zero()) return true;
    Bidegree d = w.bidegree(); // throws NonHomogeneous
    ExtendedCocycle rhobar(w.presentation()->rho(), w.phi());
    Scalar factor = rhobar.eval(Bidegree{1, Grade::zero(w.presentation()->group())}, d);
    Form lhs = (w * t).differential();
    Form rhs = w.differential() * t + factor * (w * t.differential());
    return lhs == rhs;
}

std::vector<FormTensor> component_basis_tensors(const PresentationPtr& pres, long degree,
                                                const Grade& grade) {
    if (degree < 0) return {};
    std::vector<FormTensor> out;
    if (pres->has_finite_basis()) {
        std::vector<Monomial> all = pres->all_monomials();
        std::vector<Monomial> non_units;
        for (const auto& m : all)
            if (!pres->is_unit(m)) non_units.push_back(m);
        // walk all bar tuples; the head monomial is filtered by grade
        std::vector<size_t> idx(static_cast<size_t>(degree), 0);
        while (true) {
            Grade bars_grade = Grade::zero(pres->group());
            std::vector<Monomial> bars;
            bars.reserve(idx.size());
            for (size_t k : idx) {
                bars.push_back(non_units[k]);
                bars_grade = bars_grade + pres->monomial_grade(non_units[k]);
            }
            for (const auto& m0 : pres->monomials_of_grade(grade - bars_grade))
                out.push_back(FormTensor{m0, bars});
            size_t pos = 0;
            for (; pos < idx.size(); ++pos) {
                if (++idx[pos] < non_units.size()) break;
                idx[pos] = 0;
            }
            if (pos == idx.size()) break;
        }
    } else {
        // quantum-plane style: monomials are exponent vectors equal to grades
        for (long c : grade.comps)
            if (c < 0) return {};
        std::vector<Monomial> stack;
        std::function<void(const Grade&, long)> rec = [&](const Grade& remaining, long slots) {
            if (slots == 0) {
                auto heads = pres->monomials_of_grade(remaining);
                for (auto& m0 : heads) {
                    FormTensor t{m0, {}};
                    t.bars.assign(stack.begin(), stack.end());
                    out.push_back(std::move(t));
                }
                return;
            }
            // enumerate a non-unit monomial v with v <= remaining componentwise
            Monomial v(remaining.comps.size(), 0);
            std::function<void(size_t)> walk = [&](size_t pos) {
                if (pos == v.size()) {
                    bool unit = true;
                    for (long e : v)
                        if (e != 0) unit = false;
                    if (unit) return;
                    stack.push_back(v);
                    std::vector<long> rem(remaining.comps.size());
                    for (size_t i = 0; i < rem.size(); ++i) rem[i] = remaining.comps[i] - v[i];
                    rec(Grade(pres->group(), rem), slots - 1);
                    stack.pop_back();
                    return;
                }
                for (long e = 0; e <= remaining.comps[pos]; ++e) {
                    v[pos] = e;
                    walk(pos + 1);
                }
                v[pos] = 0;
            };
            walk(0);
        };
        rec(grade, degree);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rhoform
