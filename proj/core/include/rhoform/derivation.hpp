#pragma once

#include "rhoform/element.hpp"

namespace rhoform {

/// rho-derivation of degree gamma: X(fg) = (Xf)g + rho(gamma,|f|) f (Xg),
/// stored by its values on generators. Construction eagerly verifies that
/// applying X to both sides of every defining relation gives equal elements,
/// so downstream law tests only ever see honest derivations.
class Derivation {
public:
    Derivation(PresentationPtr pres, Grade degree, std::vector<AlgebraElement> generator_values);

    /// The coordinate derivation with X(x_j) = delta_{ij}, degree -|x_i|.
    static Derivation coordinate(const PresentationPtr& pres, int i);
    static Derivation zero(const PresentationPtr& pres, Grade degree);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const Grade& degree() const noexcept { return degree_; }
    const AlgebraElement& value(int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<AlgebraElement>& values() const noexcept { return values_; }

    bool is_zero() const;

    AlgebraElement apply(const AlgebraElement& u) const;

    /// Left module action (f X)(g) = f (X g); f must be homogeneous.
    Derivation left_scaled(const AlgebraElement& f) const;
    /// Right action X f = rho(|X|,|f|) f X.
    Derivation right_scaled(const AlgebraElement& f) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-() const;
    Derivation scaled(const Scalar& c) const;

    bool operator==(const Derivation& o) const;
    bool operator!=(const Derivation& o) const { return !(*this == o); }

private:
    PresentationPtr pres_;
    Grade degree_;
    std::vector<AlgebraElement> values_;

    AlgebraElement apply_monomial(const Monomial& m) const;
    void validate() const;
};

/// [X,Y] = X Y - rho(|X|,|Y|) Y X, again a rho-derivation.
Derivation derivation_bracket(const Derivation& x, const Derivation& y);

} // namespace rhoform
