#pragma once

#include <string>
#include <vector>

#include "rhoform/cohomology.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/field_valued_form.hpp"
#include "rhoform/hom.hpp"

namespace rhoform {

/// JSON renderers for the CLI envelope
/// {"input": [...], "algebra": ..., "result": {"kind": ..., ...}}.
/// Kinds: element, form, fvform, decompose, report, related, betti, check.
std::string json_element_result(const std::vector<std::string>& input,
                                const std::string& algebra, const AlgebraElement& u);
std::string json_form_result(const std::vector<std::string>& input, const std::string& algebra,
                             const Form& w);
std::string json_fvform_result(const std::vector<std::string>& input, const std::string& algebra,
                               const FieldValuedForm& k);
std::string json_decompose_result(const std::vector<std::string>& input,
                                  const std::string& algebra, const FieldValuedForm& k,
                                  const FieldValuedForm& l);
std::string json_related_result(const std::vector<std::string>& input,
                                const std::string& algebra, bool related);
std::string json_report_result(const std::vector<std::string>& input, const std::string& algebra,
                               const NaturalityReport& report);
std::string json_betti_result(const std::vector<std::string>& input, const std::string& algebra,
                              const BettiResult& betti);
std::string json_error(ErrorKind kind, const std::string& message, int line, int col);

} // namespace rhoform
