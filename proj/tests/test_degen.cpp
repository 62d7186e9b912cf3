#include <doctest.h>

#include "cpa/catalog.hpp"
#include "cpa/degen.hpp"

using namespace cpa;

namespace {

degen::Witness witness(const std::string& body) { return degen::parse_witness("degeneration\n" + body + "end\n"); }

}  // namespace

TEST_CASE("transform") {
    AlgebraPair P = catalog::load("bbP3");
    CHECK(degen::transform(P, Matrix<RatFun>::identity(3)) == P);
    RatFun t = RatFun::t();
    auto M = Matrix<RatFun>::from_rows({{t, RatFun(0), RatFun(0)}, {RatFun(0), RatFun(1), RatFun(0)}, {RatFun(0), RatFun(0), t}});
    AlgebraPair T = degen::transform(P, M);
    AlgebraPair lim = T.map([](const RatFun& f) { return limit_t0(f); });
    CHECK(lim == catalog::load("bbP1"));
    auto perm = Matrix<RatFun>::from_rows({{RatFun(0), RatFun(1)}, {RatFun(1), RatFun(0)}});
    AlgebraPair Q = degen::transform(catalog::load("P2bold"), perm);
    CHECK(Q.C.at(1, 1, 0) == RatFun(1));
}

TEST_CASE("exact verification") {
    auto w1 = witness("source bbP3 index 1/t\ntarget bbP6\nE1 = t*e1\nE2 = e2\nE3 = e3\n");
    CHECK(degen::verify_exact(w1).pass);
    auto w2 = witness("source P02 index 0\ntarget P03\nE1 = t*e1\nE2 = t^2*e2\nE3 = t^3*e3\n");
    CHECK(degen::verify_exact(w2).pass);
    auto bad = witness("source P03\ntarget P03\nE1 = 1/t*e1\nE2 = e2\nE3 = e3\n");
    CHECK_THROWS_AS(degen::verify_exact(bad), NegativeValuation);
    auto wrong = witness("source bbP3\ntarget bbP2\nE1 = t*e1\nE2 = e2\nE3 = t*e3\n");
    degen::Report r = degen::verify_exact(wrong);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.mismatches.empty());
    auto singular = witness("source P03\ntarget P03\nE1 = e1\nE2 = e1\nE3 = e3\n");
    CHECK_THROWS_AS(degen::verify_exact(singular), degen::SingularBasis);
}

TEST_CASE("numeric verification") {
    auto w = witness("source Pfrak06\ntarget Pfrak09\nE1 = i*e1 - e2\nE2 = -t*e2\nE3 = -i*t*e3\nE4 = t*e4\n");
    CHECK(degen::verify_numeric(w).pass);

    degen::Witness cube;
    for (const auto& x : degen::load_witnesses())
        if (x.id == "G2.deg.07") cube = x;
    REQUIRE(cube.reparam == 3);
    degen::Report r = degen::verify_numeric(cube);
    CHECK(r.pass);
    CHECK(r.residuals.size() == 3);

    auto id = witness("source P05\ntarget P05\nE1 = e1\nE2 = e2\nE3 = e3\n");
    degen::Report ri = degen::verify_numeric(id);
    CHECK(ri.pass);
    for (const auto& [a, rs] : ri.residuals)
        for (double x : rs) CHECK(x == 0.0);
}

TEST_CASE("exact and numeric agree on rational witnesses") {
    for (const auto& w : degen::load_witnesses()) {
        if (!w.rational()) continue;
        CHECK_MESSAGE(degen::verify_exact(w).pass == degen::verify_numeric(w).pass, w.id);
    }
}

TEST_CASE("reparametrization keeps exact limits") {
    for (const auto& w : degen::load_witnesses()) {
        if (!w.rational() || !degen::verify_exact(w).pass) continue;
        degen::Witness v = w;
        v.reparam = w.reparam * 2;
        CHECK_MESSAGE(degen::verify_exact(v).pass, w.id);
    }
}

TEST_CASE("witness corpus") {
    auto ws = degen::load_witnesses();
    std::size_t nil = 0, g1 = 0, g2 = 0;
    for (const auto& w : ws) {
        if (w.id.rfind("3gnil.", 0) == 0) ++nil;
        if (w.id.rfind("G1.", 0) == 0) ++g1;
        if (w.id.rfind("G2.", 0) == 0) ++g2;
    }
    CHECK(nil == 6);
    CHECK(g1 == 11);
    CHECK(g2 == 28);
}

TEST_CASE("non-degeneration certificates") {
    auto c = degen::certify_non_degeneration(catalog::load("P10"), catalog::load("P13"));
    CHECK(c.certified);
    auto reasons = c.reasons();
    CHECK(std::find_if(reasons.begin(), reasons.end(), [](const std::string& x) { return x.rfind("bracket_square", 0) == 0; }) !=
          reasons.end());
    CHECK(degen::certify_non_degeneration(catalog::load("P05"), catalog::load("Lfrak1")).certified);
    CHECK_FALSE(degen::certify_non_degeneration(catalog::load("P05"), catalog::load("P05")).certified);
}

TEST_CASE("closed sets") {
    auto r13 = degen::load_closed_set(catalog::data_dir() / "closedsets" / "R_P13.cls");
    CHECK(degen::closed_set_membership(r13, catalog::load("P13")));
    CHECK(degen::closed_set_membership(r13, AlgebraPair(3)));
    auto spec = degen::parse_closed_set("closedset S\ndim 3\neq c11_1 = 0\nend\n");
    CHECK_FALSE(degen::closed_set_membership(spec, catalog::load("T1")));
    CHECK_THROWS_AS(degen::parse_closed_set("closedset S\neq c11_1 = 0\nend\n"), catalog::FormatError);
}
