#pragma once

#include <map>

#include "rhoform/presentation.hpp"

namespace rhoform {

/// Finite linear combination of normal-form monomials with Scalar
/// coefficients. Zero coefficients are never stored; immutable after
/// construction.
class AlgebraElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {}
    AlgebraElement(PresentationPtr pres, Terms terms);

    static AlgebraElement zero(PresentationPtr pres) { return AlgebraElement(std::move(pres)); }
    static AlgebraElement unit(PresentationPtr pres);
    static AlgebraElement monomial(PresentationPtr pres, Monomial m,
                                   Scalar coeff = Scalar::one());
    static AlgebraElement generator(PresentationPtr pres, int i);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Scalar c such that the element equals c * 1; BadArgument when it is
    /// not a scalar multiple of the unit.
    Scalar scalar_part() const;
    bool is_scalar() const;

    /// Common grade of all monomials; NonHomogeneous / ZeroElement otherwise.
    Grade grade() const;

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
    PresentationPtr pres_;
    Terms terms_;
};

inline AlgebraElement operator*(const Scalar& c, const AlgebraElement& u) { return u.scaled(c); }

/// [u,v]_rho = u v - rho(|u|,|v|) v u; both operands must be homogeneous.
AlgebraElement rho_commutator(const AlgebraElement& u, const AlgebraElement& v);

} // namespace rhoform
