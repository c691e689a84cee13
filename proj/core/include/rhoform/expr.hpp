#pragma once

#include <memory>
#include <string>

#include "rhoform/form.hpp"

namespace rhoform {

/// Abstract syntax tree for the CLI expression grammar:
/// rationals, q, eps, generators, + - * / ^ (integer powers), d(...),
/// wedge /\ and parentheses. Precedence: ^  >  * / /\  >  unary -  >  + -.
struct Expr {
    enum class Kind {
        Integer,
        QSymbol,
        EpsSymbol,
        Generator,
        Neg,
        Add,
        Sub,
        Mul,
        Div,
        Wedge,
        Pow,
        Diff,
    };

    Kind kind;
    long integer = 0;          // Integer, and the exponent of Pow
    std::string name;          // Generator
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Evaluation context: everything becomes a Form over the presentation
/// (elements are 0-forms, scalars are multiples of the unit monomial).
struct EvalContext {
    PresentationPtr pres;
    GradedUnitHom phi;
    /// Order of eps; generally the presentation's natural root order.
    int eps_order = 1;
};

Form evaluate(const Expr& e, const EvalContext& ctx);

} // namespace rhoform
