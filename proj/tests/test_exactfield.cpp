#include <doctest.h>

#include "cpa/exactfield.hpp"
#include "cpa/matrix.hpp"

using namespace cpa;

namespace {
const RatFun t = RatFun::t();
const RatFun a = RatFun::a();
}  // namespace

TEST_CASE("gaussian rationals") {
    CHECK(GaussRational(Rational(1, 2)) + GaussRational(Rational(1, 3)) == GaussRational(Rational(5, 6)));
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
    CHECK((GaussRational(Rational(3), Rational(4)) * GaussRational(Rational(3), Rational(4)).inverse()).is_one());
    CHECK_THROWS_AS(GaussRational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational functions reduce") {
    RatFun f = (t * t - RatFun(1)) / (t - RatFun(1));
    CHECK(f == t + RatFun(1));
    CHECK(f.is_polynomial());
    CHECK((a / a).is_one());
    CHECK(((a * t + a) / (RatFun(1) + t)) == a);
    CHECK_THROWS_AS(RatFun(1) / RatFun(0), DivisionByZero);
}

TEST_CASE("rational function field laws on samples") {
    std::vector<RatFun> xs = {a + t, a * t - RatFun(2), (t * t + a) / (a - t), RatFun::i() * a / (t + RatFun(3))};
    for (const auto& x : xs)
        for (const auto& y : xs) {
            CHECK(x * y == y * x);
            CHECK((x + y) - y == x);
            CHECK((x * y) / y == x);
            for (const auto& z : xs) CHECK(x * (y + z) == x * y + x * z);
        }
}

TEST_CASE("substitution") {
    RatFun f = (a * a + t) / (a - RatFun(1));
    CHECK(f.substitute_a(RatFun(2)) == RatFun(4) + t);
    CHECK(f.substitute_t(RatFun(0)) == a * a / (a - RatFun(1)));
    CHECK(a.substitute_a(t.inverse()) == t.inverse());
}

TEST_CASE("valuation") {
    CHECK(valuation_t(t * t / (RatFun(1) - t)) == 2);
    CHECK(valuation_t((t * t + RatFun(3) * t) / t) == 0);
    CHECK(valuation_t(t.inverse()) == -1);
    CHECK_THROWS_AS(valuation_t(RatFun(0)), UndefinedValuation);
}

TEST_CASE("limit at zero") {
    CHECK(limit_t0((t * t + RatFun(3) * t) / t) == RatFun(3));
    CHECK(limit_t0((a * t + a) / (RatFun(1) + t)) == a);
    CHECK(limit_t0(t / (a + t)) == RatFun(0));
    CHECK_THROWS_AS(limit_t0(t.inverse()), NegativeValuation);
    try {
        limit_t0(RatFun(1) / (t * t));
    } catch (const NegativeValuation& e) {
        CHECK(e.valuation == -2);
    }
}

TEST_CASE("matrices") {
    auto id = Matrix<RatFun>::identity(3);
    CHECK(rank(id) == 3);
    CHECK(kernel(id).empty());
    auto m = Matrix<RatFun>::from_rows({{t, RatFun(0)}, {RatFun(0), RatFun(1)}});
    auto inv = invert(m);
    CHECK(inv(0, 0) == t.inverse());
    CHECK(inv(1, 1) == RatFun(1));
    auto r1 = Matrix<RatFun>::from_rows({{RatFun(1), a}, {a, a * a}});
    CHECK(rank(r1) == 1);
    auto k = kernel(r1);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] + a * k[0][1] == RatFun(0));
    CHECK_THROWS_AS(invert(r1), SingularMatrix);
}

TEST_CASE("rref is canonical") {
    auto m = Matrix<RatFun>::from_rows({{RatFun(2), RatFun(4)}, {RatFun(1), RatFun(3)}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.reduced(0, 0) == RatFun(1));
    CHECK(r.reduced(0, 1) == RatFun(0));
}
