#pragma once

#include "rhoform/expr.hpp"

namespace rhoform {

/// Recursive-descent parser for the expression grammar. Syntax errors carry
/// (line, col) and the expected token set.
ExprPtr parse_expr(const std::string& text);

/// Convenience: parse then evaluate in one step.
Form parse_and_eval(const std::string& text, const EvalContext& ctx);

/// Parses a scalar expression (no generators): used for --phi values and
/// pairing entries.
Scalar parse_scalar(const std::string& text, int eps_order);

/// Grade text `a,b,...` (components in generator order, free then torsion).
Grade parse_grade(const std::string& text, const GradeGroup& group);

/// Group spec `Z^r`, `Zn`, or sums like `Z^2+Z3+Z3`; inverse of
/// GradeGroup::to_string.
GradeGroup parse_grade_group(const std::string& text);

} // namespace rhoform
