#include <doctest.h>

#include <set>

#include "cpa/catalog.hpp"
#include "cpa/invariants.hpp"

using namespace cpa;

namespace {

// Derivation dimension at a rational parameter value from the Kronecker form of D(xy) = D(x)y + xD(y).
std::size_t derivation_dim_oracle(const AlgebraPair& A) {
    const std::size_t n = A.dim();
    Matrix<Rational> sys(0, n * n);
    auto q = [](const RatFun& f) { return f.constant_value().re(); };
    for (const Tensor* T : {&A.C, &A.D})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    std::vector<Rational> row(n * n, Rational(0));
                    for (std::size_t l = 0; l < n; ++l) {
                        row[k * n + l] += q(T->at(i, j, l));
                        row[l * n + i] -= q(T->at(l, j, k));
                        row[l * n + j] -= q(T->at(i, l, k));
                    }
                    sys.append_row(row);
                }
    return n * n - rank(sys);
}

}  // namespace

TEST_CASE("derivation dimensions match the Kronecker oracle") {
    for (const auto& label : catalog::list()) {
        const auto& e = catalog::entry(label);
        if (e.kind != catalog::Kind::Pair) continue;
        for (const Rational& v : {Rational(2), Rational(-3), Rational(5, 7)}) {
            if (!catalog::admissible(e, RatFun(v))) continue;
            AlgebraPair A = catalog::instantiate(e, e.is_parametric() ? catalog::Bindings{{"a", RatFun(v)}} : catalog::Bindings{});
            if (A.field() == FieldTag::Gaussian) continue;
            CHECK_MESSAGE(derivation_dim(A) == derivation_dim_oracle(A), label);
        }
    }
}

TEST_CASE("pinned derivation and orbit dimensions") {
    CHECK(derivation_dim(catalog::load("T1")) == 0);
    CHECK(derivation_dim(catalog::load("Lfrak1")) == 3);
    CHECK(derivation_dim(AlgebraPair(3)) == 9);
    CHECK(orbit_dim(catalog::load("T1")) == 9);
    CHECK(orbit_dim(catalog::load("P10")) == 8);
    CHECK(orbit_dim(catalog::load("P11")) == 8);
    CHECK(orbit_dim(catalog::load("P16")) == 7);
    CHECK(orbit_dim(catalog::load("Lfrak1")) == 6);
    CHECK(orbit_dim(AlgebraPair(4)) == 0);
    // Members of these families have one orbit dimension fewer than the family itself.
    CHECK(orbit_dim(catalog::load("P02")) == 7);
    CHECK(orbit_dim(catalog::load("P13")) == 7);
    CHECK(orbit_dim(catalog::load("P14")) == 7);
    CHECK(orbit_dim(catalog::load("Pfrak15")) == 13);
    CHECK(orbit_dim(catalog::load("Pfrak16")) == 13);
}

TEST_CASE("derivations are derivations") {
    AlgebraPair A = catalog::load("Pfrak16");
    DerivationResult r = derivations(A, {GaussRational(2), GaussRational(0)});
    for (const auto& D : r.basis) CHECK(is_derivation(A, D));
    CHECK(r.dim == r.basis.size());
}

TEST_CASE("isomorphisms") {
    AlgebraPair A = catalog::load("P08");
    AlgebraPair B = catalog::load("P08", {{"a", -RatFun::a()}});
    auto swap = Matrix<RatFun>::from_rows({{RatFun(0), RatFun(1), RatFun(0)}, {RatFun(1), RatFun(0), RatFun(0)}, {RatFun(0), RatFun(0), RatFun(1)}});
    CHECK(verify_iso(swap, A, B));
    CHECK(verify_iso(Matrix<RatFun>::identity(3), A, A));
    CHECK_FALSE(verify_iso(Matrix<RatFun>::identity(3), catalog::load("P01"), catalog::load("P03")));
}

TEST_CASE("automorphism of bbP3 with a pinned instance") {
    // a = 2, x11 = 2, x21 = 1, x31 = 5: phi(e1) = 2e1 + e2 + 5e3, phi(e2) = phi(e1)^2, phi(e3) = {phi(e1), phi(e2)}.
    AlgebraPair P = catalog::load("bbP3", {{"a", RatFun(2)}});
    auto phi = Matrix<RatFun>::from_rows({{RatFun(2), RatFun(0), RatFun(0)}, {RatFun(1), RatFun(4), RatFun(0)}, {RatFun(5), RatFun(8), RatFun(8)}});
    CHECK(is_automorphism(phi, P));
    auto without_a = Matrix<RatFun>::from_rows({{RatFun(2), RatFun(0), RatFun(0)}, {RatFun(1), RatFun(4), RatFun(0)}, {RatFun(5), RatFun(4), RatFun(8)}});
    CHECK_FALSE(is_automorphism(without_a, P));
}

TEST_CASE("fingerprints") {
    CHECK(fingerprint_separates(catalog::load("P10"), catalog::load("P02")));
    CHECK_FALSE(fingerprint_separates(catalog::load("P10"), catalog::load("P10")));
    catalog::Filter f;
    f.provenance = "TheoremA2";
    std::set<std::string> classes;
    std::size_t count = 0;
    for (const auto& label : catalog::list(f)) {
        ++count;
        const auto& e = catalog::entry(label);
        classes.insert(fingerprint(catalog::instantiate(e, e.is_parametric() ? catalog::Bindings{{"a", RatFun(2)}} : catalog::Bindings{})).to_string());
    }
    CHECK(count == 27);
    CHECK(classes.size() == 17);
}

TEST_CASE("semicontinuity") {
    SemicontinuityReport s = semicontinuity_check(catalog::load("P02"), catalog::load("P10"));
    auto v = s.violated();
    CHECK(std::find(v.begin(), v.end(), "dot_nilpotent") != v.end());
    CHECK_FALSE(semicontinuity_check(catalog::load("P10"), catalog::load("P10")).any_violated());
    CHECK_FALSE(semicontinuity_check(catalog::load("bbP3"), catalog::load("bbP1")).any_violated());
}
