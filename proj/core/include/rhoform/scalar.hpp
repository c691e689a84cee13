#pragma once

#include <map>
#include <string>

#include "rhoform/cyclotomic.hpp"

namespace rhoform {

/// Element of the field Q(eps_n)(q): a rational function in the indeterminate
/// q over a cyclotomic field, stored as a fraction of sparse Laurent
/// polynomials in canonical form:
///
///   * denominator is an ordinary polynomial with constant term exactly 1
///     (all q-power content is folded into the numerator's Laurent exponents),
///   * gcd(numerator, denominator) = 1 over Q(eps_n)[q],
///   * zero is (empty numerator, denominator 1),
///   * cyclotomic coordinates are reduced mod Phi_n and demote to plain Q
///     whenever the eps-part vanishes.
///
/// Equal values therefore have identical representations and operator== is
/// plain structural comparison. Values are immutable after construction.
class Scalar {
public:
    using TermMap = std::map<long, Cyclotomic>; // exponent of q -> coefficient

    Scalar() : den_{{0, Cyclotomic::one()}} {}
    Scalar(long v) { *this = from_rational(Rational(v)); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_rational(Rational(1)); }
    static Scalar from_rational(const Rational& r);
    static Scalar from_cyclotomic(const Cyclotomic& c);
    /// q^k for any integer k.
    static Scalar q_power(long k);
    /// eps_n^k, eps_n a primitive n-th root of unity.
    static Scalar eps_power(int order, long k = 1);
    static Scalar fraction(TermMap numerator, TermMap denominator);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_unit() const { return !is_zero(); }
    /// True when the value lies in Q (no q, no eps).
    bool is_rational() const;
    /// Valid only when is_rational().
    Rational rational_value() const;

    const TermMap& numerator() const noexcept { return num_; }
    const TermMap& denominator() const noexcept { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    /// Specialization q := value (a unit, e.g. eps^j); the identities of the
    /// calculus hold generically in q, this substitutes after the fact.
    Scalar substitute_q(const Scalar& value) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    /// Number of numerator terms plus denominator terms; cheap size proxy
    /// used for pivot selection in exact elimination.
    size_t complexity() const { return num_.size() + den_.size(); }

    /// Canonical text form: `5/6`, `q^-1`, `eps^2*q`, `(1+q)/(1-q)`.
    /// With wrap_sums, a numerator that is a sum (and has trivial denominator)
    /// is parenthesized so the result can be used as a product factor.
    std::string to_string(bool wrap_sums = false) const;

private:
    TermMap num_;
    TermMap den_;

    void normalize();
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

} // namespace rhoform
