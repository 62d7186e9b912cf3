#include <doctest.h>

#include "cpa/exprlang.hpp"
#include "cpa/numeric.hpp"

using namespace cpa;

TEST_CASE("parse structure") {
    Expr e = parse("(1+a+t)");
    REQUIRE(e.kind() == Expr::Kind::Add);
    CHECK(e.rhs().kind() == Expr::Kind::Var);
    CHECK(e.rhs().name() == "t");
    CHECK(e.lhs().kind() == Expr::Kind::Add);

    Expr c = parse("cbrt((t^2 - t^3)/a)");
    REQUIRE(c.kind() == Expr::Kind::Pow);
    CHECK(c.exponent() == Rational(1, 3));
    CHECK(c.operand().kind() == Expr::Kind::Div);
    CHECK(c.operand().lhs().kind() == Expr::Kind::Sub);
    CHECK(c.has_fractional_power());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("i*e"), ParseError);
    CHECK_THROWS_AS(parse("(1+"), ParseError);
    CHECK_THROWS_AS(parse("1 +* 2"), ParseError);
}

TEST_CASE("print round trip") {
    for (const char* s : {"(1+a+t)", "cbrt((t^2 - t^3)/a)", "-i*t^2/(1-a)", "sqrt(t)*a - 3/2"}) {
        Expr e = parse(s);
        CHECK(parse(print(e)) == e);
    }
}

TEST_CASE("lowering") {
    auto f = lower(parse("(t^2+3t)/t"));
    REQUIRE(f);
    CHECK(*f == RatFun::t() + RatFun(3));
    CHECK_FALSE(lower(parse("sqrt(t)")));
    auto g = lower(parse("t^(4/2)"));
    REQUIRE(g);
    CHECK(*g == RatFun::t() * RatFun::t());
}

TEST_CASE("evaluate needs bindings for extra names") {
    ParseOptions opts;
    opts.extra_identifier = [](const std::string& n) { return n == "x"; };
    Expr e = parse("x*a + 1", opts);
    CHECK(evaluate(e, {{"x", RatFun(2)}, {"a", RatFun::a()}}) == RatFun(2) * RatFun::a() + RatFun(1));
    CHECK_THROWS(evaluate(e, {}));
}

TEST_CASE("numeric evaluation") {
    PrecisionScope scope(50);
    NumericContext ctx{Complex(0), parse_complex("0.1"), 50, Branch::Principal};
    Complex v = eval_numeric(parse("t^2"), ctx);
    CHECK(abs(v - parse_complex("0.01")) < Real("1e-45"));

    Complex i = eval_numeric(parse("sqrt(-1)"), ctx);
    CHECK(abs(i - Complex(Real(0), Real(1))) < Real("1e-45"));

    NumericContext c2{Complex(2), parse_complex("1e-3"), 50, Branch::Principal};
    Complex r = eval_numeric(parse("cbrt((t^2-t^3)/a)"), c2);
    Complex target = eval_numeric(parse("(t^2-t^3)/a"), c2);
    CHECK(abs(r * r * r - target) < Real("1e-50") * abs(target) * 10);
}

TEST_CASE("real odd roots branch") {
    PrecisionScope scope(40);
    EvalStats stats;
    NumericContext ctx{Complex(-1), parse_complex("1e-2"), 40, Branch::RealOddRoots};
    Complex r = eval_numeric(parse("cbrt(a)"), ctx, &stats);
    CHECK(abs(r - Complex(-1)) < Real("1e-35"));
    CHECK(stats.real_root_substitutions == 1);
}

TEST_CASE("reparametrization") {
    CHECK(*lower(reparametrize(parse("sqrt(t)"), 2)) == RatFun::t());
    CHECK(*lower(reparametrize(parse("1/sqrt(t)"), 2)) == RatFun::t().inverse());
    CHECK(*lower(reparametrize(parse("cbrt(t^2)"), 3)) == RatFun::t().pow(2));
    CHECK(*lower(reparametrize(parse("a + t"), 2)) == RatFun::a() + RatFun::t().pow(2));
}

TEST_CASE("substitute") {
    Expr e = substitute(parse("a*t"), "a", parse("1/t"));
    CHECK(*lower(e) == RatFun(1));
}
