#include "rhoform/element.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

AlgebraElement::AlgebraElement(PresentationPtr pres, Terms terms)
    : pres_(std::move(pres)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != static_cast<size_t>(pres_->generator_count()))
            fail(ErrorKind::BadArgument, "monomial has wrong arity for the presentation");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

AlgebraElement AlgebraElement::unit(PresentationPtr pres) {
    Monomial m = pres->unit_monomial();
    return monomial(std::move(pres), std::move(m));
}

AlgebraElement AlgebraElement::monomial(PresentationPtr pres, Monomial m, Scalar coeff) {
    AlgebraElement e(std::move(pres));
    if (!coeff.is_zero()) e.terms_.emplace(std::move(m), std::move(coeff));
    return e;
}

AlgebraElement AlgebraElement::generator(PresentationPtr pres, int i) {
    Monomial m = pres->generator_monomial(i);
    return monomial(std::move(pres), std::move(m));
}

bool AlgebraElement::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    auto it = terms_.begin();
    Grade g = pres_->monomial_grade(it->first);
    for (++it; it != terms_.end(); ++it)
        if (pres_->monomial_grade(it->first) != g) return false;
    return true;
}

Grade AlgebraElement::grade() const {
    if (is_zero()) fail(ErrorKind::ZeroElement, "the zero element has indeterminate grade");
    if (!is_homogeneous())
        fail(ErrorKind::NonHomogeneous, "element mixes monomials of different grades");
    return pres_->monomial_grade(terms_.begin()->first);
}

bool AlgebraElement::is_scalar() const {
    if (is_zero()) return true;
    return terms_.size() == 1 && pres_->is_unit(terms_.begin()->first);
}

Scalar AlgebraElement::scalar_part() const {
    if (is_zero()) return Scalar::zero();
    if (!is_scalar())
        fail(ErrorKind::BadArgument, "element is not a scalar multiple of the unit");
    return terms_.begin()->second;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(pres_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_presentation(pres_, o.pres_);
    Terms t = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    AlgebraElement r(pres_);
    r.terms_ = std::move(t);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_same_presentation(pres_, o.pres_);
    AlgebraElement r(pres_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto [c, m] = pres_->monomial_mul(ma, mb);
            c = c * ca * cb;
            if (c.is_zero()) continue;
            auto [it, fresh] = r.terms_.emplace(std::move(m), c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(pres_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (pres_ != o.pres_ && *pres_ != *o.pres_) return false;
    return terms_ == o.terms_;
}

AlgebraElement rho_commutator(const AlgebraElement& u, const AlgebraElement& v) {
    require_same_presentation(u.presentation(), v.presentation());
    if (u.is_zero() || v.is_zero()) return AlgebraElement::zero(u.presentation());
    Grade gu = u.grade(); // throws NonHomogeneous on mixed input
    Grade gv = v.grade();
    Scalar twist = u.presentation()->rho().eval(gu, gv);
    return u * v - twist * (v * u);
}

} // namespace rhoform
