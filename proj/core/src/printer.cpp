#include "rhoform/printer.hpp"

namespace rhoform {

namespace {

// Splits a canonical coefficient into (sign, magnitude string). The scalar
// renderer only emits a leading '-' for single-term numerators, so stripping
// it is safe.
std::pair<bool, std::string> signed_coeff(const Scalar& c) {
    std::string s = c.to_string(true);
    if (!s.empty() && s[0] == '-') return {true, s.substr(1)};
    return {false, s};
}

std::string term_body(const std::string& coeff_mag, const std::string& monomial_part) {
    if (monomial_part.empty()) return coeff_mag;
    if (coeff_mag == "1") return monomial_part;
    return coeff_mag + " * " + monomial_part;
}

std::string join_terms(std::vector<std::pair<bool, std::string>> terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        auto& [neg, body] = terms[i];
        if (i == 0)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace

std::string monomial_to_string(const PresentationPtr& pres, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += pres->generator(static_cast<int>(i)).name;
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out; // empty for the unit monomial
}

std::string element_to_string(const AlgebraElement& u) {
    if (u.is_zero()) return "0";
    const auto& pres = u.presentation();
    std::vector<std::pair<bool, std::string>> terms;
    // descending monomial order: x1-heavy terms first
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        auto [neg, mag] = signed_coeff(it->second);
        std::string mon = monomial_to_string(pres, it->first);
        terms.emplace_back(neg, term_body(mag, mon));
    }
    return join_terms(std::move(terms));
}

std::string form_to_string(const Form& w) {
    if (w.is_zero()) return "0";
    if (w.is_element()) return element_to_string(w.to_element());
    const auto& pres = w.presentation();
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [t, c] : w.terms()) {
        auto [neg, mag] = signed_coeff(c);
        std::string mon = monomial_to_string(pres, t.m0);
        std::string body;
        for (size_t i = 0; i < t.bars.size(); ++i) {
            std::string slot = "d(" + monomial_to_string(pres, t.bars[i]) + ")";
            if (i == 0)
                body = mon.empty() ? slot : mon + "*" + slot;
            else
                body += " /\\ " + slot;
        }
        if (t.bars.empty()) body = mon;
        terms.emplace_back(neg, term_body(mag, body));
    }
    return join_terms(std::move(terms));
}

} // namespace rhoform
