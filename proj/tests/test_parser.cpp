#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhoform/checks.hpp"
#include "rhoform/errors.hpp"
#include "rhoform/parser.hpp"
#include "rhoform/printer.hpp"

using namespace rhoform;

namespace {

EvalContext qp2_ctx() {
    auto pres = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(pres->group());
    return EvalContext{pres, phi, 1};
}

} // namespace

TEST_CASE("AST shapes") {
    ExprPtr e = parse_expr("x2*x1");
    REQUIRE(e->kind == Expr::Kind::Mul);
    CHECK(e->lhs->kind == Expr::Kind::Generator);
    CHECK(e->lhs->name == "x2");
    CHECK(e->rhs->name == "x1");

    ExprPtr w = parse_expr("x1*d(x2) /\\ d(x1)");
    REQUIRE(w->kind == Expr::Kind::Wedge);
    CHECK(w->lhs->kind == Expr::Kind::Mul);
    CHECK(w->lhs->rhs->kind == Expr::Kind::Diff);
    CHECK(w->rhs->kind == Expr::Kind::Diff);
}

TEST_CASE("precedence") {
    EvalContext ctx = qp2_ctx();
    // ^ binds tighter than *
    CHECK(parse_and_eval("x1^2*x2", ctx) ==
          parse_and_eval("(x1^2)*x2", ctx));
    // unary minus binds below products: -x1*x2 = -(x1*x2)
    CHECK(parse_and_eval("-x1*x2", ctx) == -parse_and_eval("x1*x2", ctx));
    // ... but above sums
    CHECK(parse_and_eval("-x1+x2", ctx) ==
          parse_and_eval("x2", ctx) - parse_and_eval("x1", ctx));
    CHECK(parse_and_eval("q^-1", ctx).to_element().scalar_part() == Scalar::q_power(-1));
    CHECK(parse_and_eval("5/6", ctx).to_element().scalar_part() ==
          Scalar::from_rational(rat(5, 6)));
}

TEST_CASE("errors") {
    EvalContext ctx = qp2_ctx();
    try {
        parse_and_eval("x3", ctx);
        FAIL("expected UnknownGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
    }
    try {
        parse_expr("x1 + * x2");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(e.line() == 1);
        CHECK(e.col() == 6);
    }
    CHECK_THROWS_AS(parse_expr("(x1"), Error);
    CHECK_THROWS_AS(parse_expr("x1^x2"), Error); // exponents are integers
    CHECK_THROWS_AS(parse_and_eval("x1/x2", ctx), Error); // non-scalar divisor
    CHECK_THROWS_AS(parse_and_eval("1/0", ctx), Error);
    CHECK_THROWS_AS(parse_and_eval("eps", ctx), Error); // no root order on qplane
}

TEST_CASE("eps needs and uses the presentation root order") {
    auto cs4 = AlgebraPresentation::clock_shift(4);
    EvalContext ctx{cs4, GradedUnitHom::trivial(cs4->group()), cs4->root_order()};
    CHECK(parse_and_eval("eps^2", ctx).to_element().scalar_part() == -Scalar::one());
}

TEST_CASE("print/parse round trip on emitted normal forms") {
    EvalContext ctx = qp2_ctx();
    auto pres = ctx.pres;
    auto x1 = AlgebraElement::generator(pres, 0);
    auto x2 = AlgebraElement::generator(pres, 1);
    AlgebraElement u =
        Scalar::q_power(-1) * (x1 * x2) + Scalar::from_rational(rat(5, 6)) * x1 - x2 * x2;
    std::string text = element_to_string(u);
    CHECK(parse_and_eval(text, ctx).to_element() == u);

    Form w = Form::from_element(u, ctx.phi).differential() +
             Form::from_element(x1, ctx.phi) *
                 Form::generator_differential(pres, ctx.phi, 1);
    std::string wtext = form_to_string(w);
    CHECK(parse_and_eval(wtext, ctx) == w);
}

TEST_CASE("roundtrip suite") {
    CheckConfig cfg;
    cfg.scale_percent = 40;
    CheckResult r = check_parser_roundtrip(cfg);
    std::string detail = r.failures.empty() ? std::string() : r.failures.front();
    INFO(detail);
    CHECK(r.passed);
}
