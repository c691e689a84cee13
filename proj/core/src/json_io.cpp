#include "rhoform/json_io.hpp"

#include <json.hpp>

#include "rhoform/printer.hpp"

namespace rhoform {

namespace {

using nlohmann::json;

json envelope(const std::vector<std::string>& input, const std::string& algebra, json result) {
    return json{{"input", input}, {"algebra", algebra}, {"result", std::move(result)}};
}

json element_terms(const AlgebraElement& u) {
    json terms = json::array();
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        terms.push_back({{"coeff", it->second.to_string()},
                         {"monomial", monomial_to_string(u.presentation(), it->first)}});
    }
    return terms;
}

json form_terms(const Form& w) {
    json terms = json::array();
    for (const auto& [t, c] : w.terms()) {
        json dslots = json::array();
        for (const auto& b : t.bars) dslots.push_back(monomial_to_string(w.presentation(), b));
        terms.push_back({{"coeff", c.to_string()},
                         {"monomial", monomial_to_string(w.presentation(), t.m0)},
                         {"dslots", std::move(dslots)}});
    }
    return terms;
}

json fvform_body(const FieldValuedForm& k) {
    json values = json::object();
    for (int i = 0; i < k.presentation()->generator_count(); ++i)
        values[k.presentation()->generator(i).name] = form_to_string(k.value(i));
    json grade = json::array();
    for (long c : k.grade().comps) grade.push_back(c);
    return json{{"kind", "fvform"},
                {"k", k.target_degree()},
                {"grade", std::move(grade)},
                {"values", std::move(values)}};
}

} // namespace

std::string json_element_result(const std::vector<std::string>& input,
                                const std::string& algebra, const AlgebraElement& u) {
    json result{{"kind", "element"}, {"terms", element_terms(u)}, {"text", element_to_string(u)}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_form_result(const std::vector<std::string>& input, const std::string& algebra,
                             const Form& w) {
    json result{{"kind", "form"}, {"terms", form_terms(w)}, {"text", form_to_string(w)}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_fvform_result(const std::vector<std::string>& input, const std::string& algebra,
                               const FieldValuedForm& k) {
    return envelope(input, algebra, fvform_body(k)).dump();
}

std::string json_decompose_result(const std::vector<std::string>& input,
                                  const std::string& algebra, const FieldValuedForm& k,
                                  const FieldValuedForm& l) {
    json result{{"kind", "decompose"}, {"K", fvform_body(k)}, {"L", fvform_body(l)}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_related_result(const std::vector<std::string>& input,
                                const std::string& algebra, bool related) {
    json result{{"kind", "related"}, {"related", related}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_report_result(const std::vector<std::string>& input, const std::string& algebra,
                               const NaturalityReport& report) {
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back(
            {{"item", item.item}, {"passed", item.passed}, {"witness", item.witness}});
    json result{{"kind", "report"},
                {"preconditions_ok", report.preconditions_ok},
                {"precondition_witness", report.precondition_witness},
                {"items", std::move(items)},
                {"all_passed", report.all_passed()}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_betti_result(const std::vector<std::string>& input, const std::string& algebra,
                              const BettiResult& betti) {
    json result{{"kind", "betti"}, {"betti", betti.betti}, {"dims", betti.dims}};
    return envelope(input, algebra, std::move(result)).dump();
}

std::string json_error(ErrorKind kind, const std::string& message, int line, int col) {
    json e{{"kind", to_string(kind)}, {"message", message}};
    if (kind == ErrorKind::SyntaxError) {
        e["line"] = line;
        e["col"] = col;
    }
    return json{{"error", std::move(e)}}.dump();
}

} // namespace rhoform
