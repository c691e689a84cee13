#include "rhoform/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "rhoform/errors.hpp"

namespace rhoform {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

using Poly = std::vector<Rational>; // ascending degree, no trailing zeros

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Exact quotient; remainder must come out zero for the callers below.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    return q;
}

} // namespace

int euler_phi(int order) {
    if (order < 1) fail(ErrorKind::BadArgument, "root order must be >= 1");
    int result = order, n = order;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int order) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled in ascending order
    // so every needed Phi_e is already cached.
    for (int d = 1; d <= order; ++d) {
        if (order % d != 0 || cache.count(d)) continue;
        Poly xd(d + 1, Rational(0));
        xd[0] = -1;
        xd[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) xd = poly_div_exact(xd, cache.at(e));
        cache.emplace(d, std::move(xd));
    }
    return cache.at(order);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords) : order_(order), coeff_(std::move(coords)) {
    if (order_ < 1) fail(ErrorKind::BadArgument, "root order must be >= 1");
    size_t dim = static_cast<size_t>(euler_phi(order_));
    if (coeff_.size() > dim) {
        // reduce mod Phi_n: replace x^d (d >= dim) using the monic relation
        const auto& phi = cyclotomic_polynomial(order_);
        for (size_t d = coeff_.size(); d-- > dim;) {
            Rational c = coeff_[d];
            if (c == 0) continue;
            coeff_[d] = 0;
            for (size_t i = 0; i < dim; ++i)
                coeff_[d - dim + i] -= c * phi[i];
        }
        coeff_.resize(dim);
    } else {
        coeff_.resize(dim, Rational(0));
    }
    normalize();
}

void Cyclotomic::normalize() {
    if (order_ == 1) return;
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return;
    Rational r = coeff_.empty() ? Rational(0) : coeff_[0];
    order_ = 1;
    coeff_.assign(1, r);
}

Cyclotomic Cyclotomic::eps_power(int order, long k) {
    if (order == 1) return Cyclotomic::one();
    long n = order;
    long e = ((k % n) + n) % n;
    std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
    raw.back() = 1;
    return Cyclotomic(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

int Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.order_;
    if (a.order_ == 1) return b.order_;
    if (b.order_ == 1) return a.order_;
    fail(ErrorKind::IncompatibleRootOrder,
         "cannot mix roots of unity of orders " + std::to_string(a.order_) + " and " +
             std::to_string(b.order_));
}

Cyclotomic Cyclotomic::lifted_to(int order) const {
    if (order_ == order) return *this;
    std::vector<Rational> coords(static_cast<size_t>(euler_phi(order)), Rational(0));
    coords[0] = coeff_[0];
    Cyclotomic r;
    r.order_ = order;
    r.coeff_ = std::move(coords);
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int n = common_order(*this, o);
    Cyclotomic a = lifted_to(n), b = o.lifted_to(n);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int n = common_order(*this, o);
    if (n == 1) return Cyclotomic(coeff_[0] * o.coeff_[0]);
    Cyclotomic a = lifted_to(n), b = o.lifted_to(n);
    std::vector<Rational> prod(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j)
            prod[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return Cyclotomic(n, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(eps)");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeff_[0]);

    // extended Euclid in Q[x]: s*this + t*Phi_n = gcd = const
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = coeff_;
    poly_trim(r1);
    Poly s0 = {}, s1 = {Rational(1)}; // coefficients of `this`
    while (r1.size() > 1) {
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        Poly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            poly_trim(rem);
        }
        Poly s2 = s0;
        Poly qs1 = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) fail(ErrorKind::DivisionByZero, "element not invertible mod Phi_n");
    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return Cyclotomic(order_, std::move(s1));
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    if (coeff_.size() != o.coeff_.size()) return coeff_.size() < o.coeff_.size();
    for (size_t i = 0; i < coeff_.size(); ++i) {
        int c = cmp(coeff_[i], o.coeff_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace rhoform
