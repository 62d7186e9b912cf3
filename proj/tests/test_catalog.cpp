#include <doctest.h>

#include <set>

#include "cpa/catalog.hpp"

using namespace cpa;

TEST_CASE("loading catalog tables") {
    AlgebraPair p01 = catalog::load("P01");
    CHECK(p01.C.at(0, 0, 0) == RatFun(1));
    CHECK(p01.D.at(1, 2, 1) == RatFun(1));
    CHECK(p01.D.at(2, 1, 1) == RatFun(-1));

    AlgebraPair p13 = catalog::load("Pfrak13");
    CHECK(p13.C.at(1, 1, 2) == RatFun(1));
    CHECK(p13.C.at(1, 2, 3) == RatFun(1));
    CHECK(p13.C.at(2, 1, 3) == RatFun(1));
    CHECK(p13.D.at(0, 1, 2) == RatFun(1));
    CHECK(p13.D.at(0, 2, 3) == RatFun(2));
    CHECK(p13.D.at(2, 0, 3) == RatFun(-2));
}

TEST_CASE("constraints and unknown labels") {
    CHECK_THROWS_AS(catalog::load("P08", {{"a", RatFun(0)}}), catalog::ConstraintViolation);
    CHECK_NOTHROW(catalog::load("P08", {{"a", RatFun(1)}}));
    CHECK_THROWS_AS(catalog::load("NoSuchAlgebra"), catalog::UnknownLabel);
    CHECK(catalog::admissible(catalog::entry("P08"), RatFun::a()));
    CHECK_FALSE(catalog::admissible(catalog::entry("P13"), RatFun(0)));
}

TEST_CASE("listing") {
    catalog::Filter a1;
    a1.dim = 3;
    a1.provenance = "TheoremA1";
    CHECK(catalog::list(a1).size() == 16);

    catalog::Filter a2;
    a2.dim = 4;
    a2.provenance = "TheoremA2";
    auto labels = catalog::list(a2);
    CHECK(labels.size() == 27);
    std::vector<std::string> parametric;
    for (const auto& l : labels)
        if (catalog::entry(l).is_parametric()) parametric.push_back(l);
    CHECK(parametric == std::vector<std::string>{"Pfrak01", "Pfrak04", "Pfrak15", "Pfrak16", "Pfrak22", "Pfrak25", "Pfrak26"});

    catalog::Filter nil2;
    nil2.dim = 2;
    nil2.nilpotent = true;
    CHECK(catalog::list(nil2) == std::vector<std::string>{"P1bold", "P2bold"});

    auto all = catalog::list();
    CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("every pair entry loads and single entries are single") {
    for (const auto& label : catalog::list()) {
        const auto& e = catalog::entry(label);
        if (e.kind == catalog::Kind::Single)
            CHECK(catalog::load_single(label).dim() == e.dim);
        else
            CHECK(catalog::load(label).dim() == e.dim);
    }
}

TEST_CASE("format errors carry line numbers") {
    try {
        catalog::parse_algebra("algebra X\ndim 2\ne1*e3 = e1\nend\n", "x.alg");
        FAIL("expected a format error");
    } catch (const catalog::FormatError& e) {
        CHECK(std::string(e.what()).find("x.alg:3") != std::string::npos);
    }
    CHECK_THROWS_AS(catalog::parse_algebra("algebra X\ndim 2\ne1*e1 = e2\n", "x.alg"), catalog::FormatError);
    CHECK_THROWS_AS(catalog::parse_algebra("algebra X\ndim 2\ne1*e1 = e2 +\nend\n", "x.alg"), catalog::FormatError);
}

TEST_CASE("render and parse round trip") {
    for (const char* label : {"P01", "Pfrak16", "bbP3", "Pfrak09"}) {
        AlgebraPair A = catalog::load(label);
        auto e = catalog::parse_algebra(catalog::render_algebra(A));
        CHECK_MESSAGE(catalog::instantiate(e) == A, label);
    }
}

TEST_CASE("linear combinations") {
    auto lc = catalog::parse_linear("2*e1 - a*e3 + 1/t*e2", 3);
    Vec v = catalog::evaluate_linear(lc, 3, {{"a", RatFun(5)}, {"t", RatFun::t()}});
    CHECK(v[0] == RatFun(2));
    CHECK(v[1] == RatFun::t().inverse());
    CHECK(v[2] == RatFun(-5));
    CHECK_THROWS(catalog::parse_linear("e1*e2", 3));
    CHECK_THROWS(catalog::parse_linear("e4", 3));
}

TEST_CASE("cocycle specs") {
    CocyclePair c = catalog::parse_cocycle("a*N12 + 2*D13 - N33", 3);
    CHECK(c.theta.m(0, 1) == RatFun::a());
    CHECK(c.theta.m(1, 0) == RatFun::a());
    CHECK(c.theta.m(2, 2) == RatFun(-1));
    CHECK(c.vartheta.m(0, 2) == RatFun(2));
    CHECK(c.vartheta.m(2, 0) == RatFun(-2));
    CHECK_THROWS(catalog::parse_cocycle("N12*D13", 3));
    CHECK_THROWS(catalog::parse_cocycle("D11", 3));
}

TEST_CASE("extension specs") {
    auto specs = catalog::load_extensions();
    CHECK(specs.size() == 27);
    auto s = catalog::parse_extension("extension X\nbase bbP3 a=0\nexpect Pfrak17\nann 1\nv1 = N12 + D13\nend\n");
    CHECK(s.base == "bbP3");
    CHECK(s.base_bindings.at("a") == RatFun(0));
    CHECK(s.ann == std::size_t(1));
    CHECK(s.cocycles.size() == 1);
}
