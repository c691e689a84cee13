#include "rhoform/derivation.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

Derivation::Derivation(PresentationPtr pres, Grade degree,
                       std::vector<AlgebraElement> generator_values)
    : pres_(std::move(pres)), degree_(std::move(degree)), values_(std::move(generator_values)) {
    if (degree_.group != pres_->group())
        fail(ErrorKind::GroupMismatch, "derivation degree not in the presentation's group");
    if (static_cast<int>(values_.size()) != pres_->generator_count())
        fail(ErrorKind::IllDefined, "derivation needs one value per generator");
    validate();
}

Derivation Derivation::coordinate(const PresentationPtr& pres, int i) {
    std::vector<AlgebraElement> vals;
    for (int j = 0; j < pres->generator_count(); ++j)
        vals.push_back(j == i ? AlgebraElement::unit(pres) : AlgebraElement::zero(pres));
    return Derivation(pres, -pres->generator(i).grade, std::move(vals));
}

Derivation Derivation::zero(const PresentationPtr& pres, Grade degree) {
    std::vector<AlgebraElement> vals(static_cast<size_t>(pres->generator_count()),
                                     AlgebraElement::zero(pres));
    return Derivation(pres, std::move(degree), std::move(vals));
}

bool Derivation::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

void Derivation::validate() const {
    for (int i = 0; i < pres_->generator_count(); ++i) {
        const AlgebraElement& v = values_[static_cast<size_t>(i)];
        require_same_presentation(pres_, v.presentation());
        if (!v.is_zero() && v.grade() != degree_ + pres_->generator(i).grade)
            fail(ErrorKind::IllDefined,
                 "value on " + pres_->generator(i).name + " has wrong grade");
    }
    const auto& rho = pres_->rho();
    // pairwise relations x_i x_j = swap * x_j x_i (i > j): Leibniz on both words
    for (int i = 0; i < pres_->generator_count(); ++i) {
        AlgebraElement xi = AlgebraElement::generator(pres_, i);
        Grade gi = pres_->generator(i).grade;
        for (int j = 0; j < i; ++j) {
            AlgebraElement xj = AlgebraElement::generator(pres_, j);
            Grade gj = pres_->generator(j).grade;
            AlgebraElement lhs =
                value(i) * xj + rho.eval(degree_, gi) * (xi * value(j));
            AlgebraElement rhs =
                value(j) * xi + rho.eval(degree_, gj) * (xj * value(i));
            Scalar t = rho.eval(gi, gj); // the swap factor, validated equal at construction
            if (lhs != t * rhs)
                fail(ErrorKind::IllDefined,
                     "derivation violates the relation between " + pres_->generator(i).name +
                         " and " + pres_->generator(j).name);
        }
        // torsion power relation x_i^n = w * 1, and X(1) = 0
        int n = pres_->generator(i).exponent_order;
        if (n > 0) {
            AlgebraElement acc = AlgebraElement::zero(pres_);
            AlgebraElement left = AlgebraElement::unit(pres_);
            for (int s = 0; s < n; ++s) {
                AlgebraElement right = AlgebraElement::unit(pres_);
                for (int t2 = 0; t2 < n - 1 - s; ++t2) right = right * xi;
                acc = acc + rho.eval(degree_, gi.scaled(s)) * (left * value(i) * right);
                left = left * xi;
            }
            if (!acc.is_zero())
                fail(ErrorKind::IllDefined, "derivation violates the power relation of " +
                                                pres_->generator(i).name);
        }
    }
}

AlgebraElement Derivation::apply_monomial(const Monomial& m) const {
    // X(x_i m') = X(x_i) m' + rho(gamma,|x_i|) x_i X(m'), peeling the lowest
    // generator letter of the normal form.
    size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size()) return AlgebraElement::zero(pres_); // X(1) = 0
    Monomial rest = m;
    rest[i] -= 1;
    const Grade& gi = pres_->generator(static_cast<int>(i)).grade;
    AlgebraElement rest_elem = AlgebraElement::monomial(pres_, rest);
    AlgebraElement out = values_[i] * rest_elem;
    AlgebraElement tail = apply_monomial(rest);
    if (!tail.is_zero()) {
        AlgebraElement xi = AlgebraElement::generator(pres_, static_cast<int>(i));
        out = out + pres_->rho().eval(degree_, gi) * (xi * tail);
    }
    return out;
}

AlgebraElement Derivation::apply(const AlgebraElement& u) const {
    require_same_presentation(pres_, u.presentation());
    AlgebraElement out = AlgebraElement::zero(pres_);
    for (const auto& [m, c] : u.terms()) out = out + c * apply_monomial(m);
    return out;
}

Derivation Derivation::left_scaled(const AlgebraElement& f) const {
    if (f.is_zero()) return zero(pres_, degree_); // degree of 0 is conventional
    Grade gf = f.grade(); // throws NonHomogeneous when mixed
    std::vector<AlgebraElement> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(f * v);
    return Derivation(pres_, gf + degree_, std::move(vals));
}

Derivation Derivation::right_scaled(const AlgebraElement& f) const {
    if (f.is_zero()) return zero(pres_, degree_);
    Scalar twist = pres_->rho().eval(degree_, f.grade());
    return left_scaled(f).scaled(twist);
}

Derivation Derivation::operator+(const Derivation& o) const {
    require_same_presentation(pres_, o.pres_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_)
        fail(ErrorKind::DegreeMismatch, "cannot add derivations of different degrees");
    std::vector<AlgebraElement> vals;
    for (size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] + o.values_[i]);
    return Derivation(pres_, degree_, std::move(vals));
}

Derivation Derivation::operator-() const { return scaled(-Scalar::one()); }

Derivation Derivation::scaled(const Scalar& c) const {
    std::vector<AlgebraElement> vals;
    for (const auto& v : values_) vals.push_back(c * v);
    return Derivation(pres_, degree_, std::move(vals));
}

bool Derivation::operator==(const Derivation& o) const {
    if (pres_ != o.pres_ && *pres_ != *o.pres_) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && values_ == o.values_;
}

Derivation derivation_bracket(const Derivation& x, const Derivation& y) {
    require_same_presentation(x.presentation(), y.presentation());
    const auto& pres = x.presentation();
    Scalar twist = pres->rho().eval(x.degree(), y.degree());
    std::vector<AlgebraElement> vals;
    for (int i = 0; i < pres->generator_count(); ++i) {
        AlgebraElement xi = AlgebraElement::generator(pres, i);
        vals.push_back(x.apply(y.apply(xi)) - twist * y.apply(x.apply(xi)));
    }
    return Derivation(pres, x.degree() + y.degree(), std::move(vals));
}

} // namespace rhoform
