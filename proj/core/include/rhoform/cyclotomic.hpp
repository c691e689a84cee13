#pragma once

#include <vector>

#include "rhoform/rational.hpp"

namespace rhoform {

/// Coefficient vector of the n-th cyclotomic polynomial Phi_n, ascending
/// degree, monic. Cached per order.
const std::vector<Rational>& cyclotomic_polynomial(int order);

/// Euler totient; the dimension of Q(eps_n) over Q.
int euler_phi(int order);

/// Element of the cyclotomic field Q(eps_n), stored as a coordinate vector of
/// length phi(n) over the power basis {1, eps, ..., eps^{phi(n)-1}}, always
/// reduced mod Phi_n. order == 1 means plain Q (no root adjoined); values
/// whose coordinates collapse to the rational subfield are demoted to order 1
/// so that equal values have identical representations across mixed-order
/// arithmetic.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeff_(1, Rational(0)) {}
    explicit Cyclotomic(Rational r) : order_(1), coeff_{std::move(r)} {}
    Cyclotomic(int order, std::vector<Rational> coords);

    /// eps_n^k, reduced mod Phi_n (k may be negative).
    static Cyclotomic eps_power(int order, long k);
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coords() const noexcept { return coeff_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    /// Valid only when is_rational().
    const Rational& rational_value() const { return coeff_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& o) const {
        return order_ == o.order_ && coeff_ == o.coeff_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Strict total order used for canonical term ordering.
    bool operator<(const Cyclotomic& o) const;

private:
    int order_;
    std::vector<Rational> coeff_; // length euler_phi(order_)

    void normalize();
    /// Lifts both operands into a common field; throws IncompatibleRootOrder
    /// when both orders are nontrivial and distinct.
    static int common_order(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic lifted_to(int order) const;
};

} // namespace rhoform
