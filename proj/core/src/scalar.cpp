#include "rhoform/scalar.hpp"

#include <sstream>
#include <vector>

#include "rhoform/errors.hpp"

namespace rhoform {

namespace {

using CPoly = std::vector<Cyclotomic>; // ascending degree in q, no trailing zeros

void trim(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CPoly to_poly(const Scalar::TermMap& m, long shift) {
    CPoly p;
    if (m.empty()) return p;
    p.resize(static_cast<size_t>(m.rbegin()->first - shift) + 1);
    for (const auto& [e, c] : m) p[static_cast<size_t>(e - shift)] = c;
    return p;
}

Scalar::TermMap to_map(const CPoly& p, long shift) {
    Scalar::TermMap m;
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) m.emplace(static_cast<long>(i) + shift, p[i]);
    return m;
}

// Remainder of a by monic-scaled b (field coefficients), in place.
CPoly poly_mod(CPoly a, const CPoly& b) {
    Cyclotomic lead_inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
        Cyclotomic c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - c * b[i];
        trim(a);
    }
    return a;
}

CPoly poly_div_exact(CPoly a, const CPoly& b) {
    CPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    Cyclotomic lead_inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
        Cyclotomic c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - c * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

// Monic gcd over Q(eps)[q].
CPoly poly_gcd(CPoly a, CPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        CPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Cyclotomic inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
    return a;
}

} // namespace

Scalar Scalar::from_rational(const Rational& r) {
    Scalar s;
    if (r != 0) s.num_.emplace(0, Cyclotomic(r));
    return s;
}

Scalar Scalar::from_cyclotomic(const Cyclotomic& c) {
    Scalar s;
    if (!c.is_zero()) s.num_.emplace(0, c);
    return s;
}

Scalar Scalar::q_power(long k) {
    Scalar s;
    s.num_.emplace(k, Cyclotomic::one());
    return s;
}

Scalar Scalar::eps_power(int order, long k) {
    return from_cyclotomic(Cyclotomic::eps_power(order, k));
}

Scalar Scalar::fraction(TermMap numerator, TermMap denominator) {
    Scalar s;
    s.num_ = std::move(numerator);
    s.den_ = std::move(denominator);
    for (auto it = s.num_.begin(); it != s.num_.end();)
        it = it->second.is_zero() ? s.num_.erase(it) : std::next(it);
    for (auto it = s.den_.begin(); it != s.den_.end();)
        it = it->second.is_zero() ? s.den_.erase(it) : std::next(it);
    if (s.den_.empty()) fail(ErrorKind::DivisionByZero, "zero denominator");
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.empty()) {
        den_ = {{0, Cyclotomic::one()}};
        return;
    }
    long vn = num_.begin()->first;
    long vd = den_.begin()->first;
    CPoly n = to_poly(num_, vn);
    CPoly d = to_poly(den_, vd);
    CPoly g = poly_gcd(n, d);
    if (g.size() > 1) {
        n = poly_div_exact(std::move(n), g);
        d = poly_div_exact(std::move(d), g);
    }
    // den(0) != 0 by construction; scale so the constant term is exactly 1
    Cyclotomic c = d[0].inverse();
    for (auto& x : n) x = x * c;
    for (auto& x : d) x = x * c;
    num_ = to_map(n, vn - vd);
    den_ = to_map(d, 0);
}

bool Scalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_.begin()->first == 0 &&
           num_.begin()->second == Cyclotomic::one();
}

bool Scalar::is_rational() const {
    if (is_zero()) return true;
    return den_.size() == 1 && num_.size() == 1 && num_.begin()->first == 0 &&
           num_.begin()->second.is_rational();
}

Rational Scalar::rational_value() const {
    if (is_zero()) return Rational(0);
    if (!is_rational()) fail(ErrorKind::BadArgument, "scalar is not rational: " + to_string());
    return num_.begin()->second.rational_value();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& [e, c] : s.num_) c = -c;
    return s;
}

namespace {

// denominator is exactly 1 (the invariant forces constant term 1)
bool trivial_den(const Scalar::TermMap& den) {
    return den.size() == 1 && den.begin()->first == 0;
}

} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (trivial_den(den_) && trivial_den(o.den_)) {
        // polynomial + polynomial stays gcd-free against den = 1
        TermMap n = num_;
        for (const auto& [e, c] : o.num_) {
            auto [it, fresh] = n.emplace(e, c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second.is_zero()) n.erase(it);
            }
        }
        Scalar r;
        r.num_ = std::move(n);
        return r;
    }
    Scalar r;
    TermMap n;
    auto accumulate = [&n](const TermMap& a, const TermMap& b) {
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                auto [it, fresh] = n.emplace(ea + eb, ca * cb);
                if (!fresh) it->second = it->second + ca * cb;
            }
    };
    accumulate(num_, o.den_);
    accumulate(o.num_, den_);
    TermMap d;
    for (const auto& [ea, ca] : den_)
        for (const auto& [eb, cb] : o.den_) {
            auto [it, fresh] = d.emplace(ea + eb, ca * cb);
            if (!fresh) it->second = it->second + ca * cb;
        }
    return fraction(std::move(n), std::move(d));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (trivial_den(den_) && trivial_den(o.den_)) {
        TermMap n;
        for (const auto& [ea, ca] : num_)
            for (const auto& [eb, cb] : o.num_) {
                Cyclotomic prod = ca * cb;
                if (prod.is_zero()) continue;
                auto [it, fresh] = n.emplace(ea + eb, std::move(prod));
                if (!fresh) {
                    it->second = it->second + ca * cb;
                    if (it->second.is_zero()) n.erase(it);
                }
            }
        Scalar r;
        r.num_ = std::move(n);
        return r;
    }
    TermMap n, d;
    for (const auto& [ea, ca] : num_)
        for (const auto& [eb, cb] : o.num_) {
            auto [it, fresh] = n.emplace(ea + eb, ca * cb);
            if (!fresh) it->second = it->second + ca * cb;
        }
    for (const auto& [ea, ca] : den_)
        for (const auto& [eb, cb] : o.den_) {
            auto [it, fresh] = d.emplace(ea + eb, ca * cb);
            if (!fresh) it->second = it->second + ca * cb;
        }
    return fraction(std::move(n), std::move(d));
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
    return fraction(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e == 0) return one();
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc = one();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Scalar Scalar::substitute_q(const Scalar& value) const {
    if (value.is_zero()) fail(ErrorKind::BadArgument, "q must be specialized to a unit");
    auto eval = [&value](const TermMap& m) {
        Scalar acc;
        for (const auto& [e, c] : m) acc = acc + Scalar::from_cyclotomic(c) * value.pow(e);
        return acc;
    };
    Scalar den = eval(den_);
    if (den.is_zero())
        fail(ErrorKind::DivisionByZero, "denominator vanishes at the specialization point");
    return eval(num_) / den;
}

bool Scalar::operator<(const Scalar& o) const {
    auto cmp_map = [](const TermMap& a, const TermMap& b) -> int {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_map(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp_map(den_, o.den_) < 0;
}

namespace {

// One power-basis piece r*eps^j; sign is pulled out by the caller.
std::string eps_term_to_string(const Rational& r, size_t j, bool& negative) {
    Rational a = r;
    negative = a < 0;
    if (negative) a = -a;
    std::string coeff = rational_to_string(a);
    if (j == 0) return coeff;
    std::string e = j == 1 ? "eps" : "eps^" + std::to_string(j);
    if (a == 1) return e;
    return coeff + "*" + e;
}

// Renders a cyclotomic coefficient together with a power of q.
// Multi-piece cyclotomics are parenthesized so the term stays a product.
std::string term_to_string(const Cyclotomic& c, long qexp, bool& negative) {
    std::vector<std::pair<size_t, Rational>> pieces;
    const auto& coords = c.coords();
    for (size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0) pieces.emplace_back(j, coords[j]);

    std::string qpart;
    if (qexp == 1)
        qpart = "q";
    else if (qexp != 0)
        qpart = "q^" + std::to_string(qexp);

    std::string cpart;
    if (pieces.size() == 1) {
        cpart = eps_term_to_string(pieces[0].second, pieces[0].first, negative);
        if (cpart == "1" && !qpart.empty()) cpart.clear();
    } else {
        negative = false;
        std::string inner;
        for (size_t i = 0; i < pieces.size(); ++i) {
            bool neg = false;
            std::string piece = eps_term_to_string(pieces[i].second, pieces[i].first, neg);
            if (i == 0)
                inner += (neg ? "-" : "") + piece;
            else
                inner += (neg ? "-" : "+") + piece;
        }
        cpart = "(" + inner + ")";
    }
    if (cpart.empty()) return qpart;
    if (qpart.empty()) return cpart;
    return cpart + "*" + qpart;
}

std::string laurent_to_string(const Scalar::TermMap& m) {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : m) {
        bool neg = false;
        std::string t = term_to_string(c, e, neg);
        if (first) {
            out += (neg ? "-" : "") + t;
            first = false;
        } else {
            out += (neg ? "-" : "+") + t;
        }
    }
    return out;
}

} // namespace

std::string Scalar::to_string(bool wrap_sums) const {
    if (is_zero()) return "0";
    std::string n = laurent_to_string(num_);
    if (den_.size() == 1) {
        if (wrap_sums && num_.size() > 1) return "(" + n + ")";
        return n;
    }
    std::string d = laurent_to_string(den_);
    return "(" + n + ")/(" + d + ")";
}

} // namespace rhoform
