#pragma once

#include <string>

#include "rhoform/form.hpp"

namespace rhoform {

/// Canonical text renderers; parse(print(x)) evaluates back to x exactly.
std::string monomial_to_string(const PresentationPtr& pres, const Monomial& m);
std::string element_to_string(const AlgebraElement& u);
std::string form_to_string(const Form& w);

} // namespace rhoform
