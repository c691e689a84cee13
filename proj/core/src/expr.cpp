#include "rhoform/expr.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

Form evaluate(const Expr& e, const EvalContext& ctx) {
    switch (e.kind) {
        case Expr::Kind::Integer:
            return Form::from_scalar(ctx.pres, ctx.phi, Scalar(e.integer));
        case Expr::Kind::QSymbol:
            return Form::from_scalar(ctx.pres, ctx.phi, Scalar::q_power(1));
        case Expr::Kind::EpsSymbol:
            if (ctx.eps_order < 2)
                fail(ErrorKind::BadArgument,
                     "eps needs a root-of-unity order; the presentation has none");
            return Form::from_scalar(ctx.pres, ctx.phi, Scalar::eps_power(ctx.eps_order, 1));
        case Expr::Kind::Generator: {
            int i = ctx.pres->generator_index(e.name);
            if (i < 0)
                fail(ErrorKind::UnknownGenerator,
                     "unknown generator '" + e.name + "' in " + ctx.pres->name());
            return Form::from_element(AlgebraElement::generator(ctx.pres, i), ctx.phi);
        }
        case Expr::Kind::Neg:
            return -evaluate(*e.lhs, ctx);
        case Expr::Kind::Add:
            return evaluate(*e.lhs, ctx) + evaluate(*e.rhs, ctx);
        case Expr::Kind::Sub:
            return evaluate(*e.lhs, ctx) - evaluate(*e.rhs, ctx);
        case Expr::Kind::Mul:
        case Expr::Kind::Wedge:
            return evaluate(*e.lhs, ctx) * evaluate(*e.rhs, ctx);
        case Expr::Kind::Div: {
            Form num = evaluate(*e.lhs, ctx);
            Form den = evaluate(*e.rhs, ctx);
            if (!den.is_element() || !den.to_element().is_scalar())
                fail(ErrorKind::BadArgument, "division is only defined by scalars");
            Scalar d = den.to_element().scalar_part();
            if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
            return num.scaled(d.inverse());
        }
        case Expr::Kind::Pow: {
            Form base = evaluate(*e.lhs, ctx);
            long n = e.integer;
            if (n < 0) {
                if (!base.is_element() || !base.to_element().is_scalar())
                    fail(ErrorKind::BadArgument, "negative powers need a scalar base");
                Scalar b = base.to_element().scalar_part();
                if (b.is_zero()) fail(ErrorKind::DivisionByZero, "zero to a negative power");
                return Form::from_scalar(ctx.pres, ctx.phi, b.pow(n));
            }
            Form acc = Form::from_scalar(ctx.pres, ctx.phi, Scalar::one());
            for (long i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        case Expr::Kind::Diff:
            return evaluate(*e.lhs, ctx).differential();
    }
    fail(ErrorKind::BadArgument, "unreachable expression kind");
}

} // namespace rhoform
