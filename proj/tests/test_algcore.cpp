#include <doctest.h>

#include "cpa/algcore.hpp"
#include "cpa/catalog.hpp"

using namespace cpa;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

// Independent medial check by direct expansion over basis quadruples.
bool medial_by_expansion(const AlgebraPair& A) {
    const std::size_t n = A.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    Vec l = A.product(A.product(unit_vector(n, x), unit_vector(n, y)), A.product(unit_vector(n, z), unit_vector(n, w)));
                    Vec r = A.product(A.product(unit_vector(n, x), unit_vector(n, z)), A.product(unit_vector(n, y), unit_vector(n, w)));
                    if (!is_zero_vector(l - r)) return false;
                }
    return true;
}

}  // namespace

TEST_CASE("products of P01") {
    AlgebraPair P = catalog::load("P01");
    CHECK(P.product(e(3, 1), e(3, 1)) == e(3, 1));
    CHECK(P.bracket(e(3, 2), e(3, 3)) == e(3, 2));
    Vec x = {RatFun(1), RatFun(2), RatFun::a()};
    CHECK(is_zero_vector(P.bracket(x, x)));
}

TEST_CASE("identity checks") {
    CHECK(check_cpa(AlgebraPair(3)).pass);
    AlgebraPair P = catalog::load("P01");
    P.D.at(2, 1, 1) = RatFun(1);
    IdentityReport r = check_cpa(P);
    CHECK_FALSE(r.pass);
    CHECK(r.violates("anticommutativity"));
}

TEST_CASE("derived identities on a family") {
    AlgebraPair P = catalog::load("Pfrak16");
    CHECK(check_derived_identities(P).pass);
    AlgebraPair dot_free(3);
    dot_free.set_bracket(0, 1, e(3, 3));
    CHECK(check_derived_identities(dot_free).pass);
}

TEST_CASE("medial agrees with direct expansion on catalog pairs") {
    for (const auto& label : catalog::list()) {
        if (catalog::entry(label).kind != catalog::Kind::Pair) continue;
        if (!catalog::admissible(catalog::entry(label), RatFun(2))) continue;
        AlgebraPair A = catalog::instantiate(catalog::entry(label), catalog::entry(label).is_parametric() ? catalog::Bindings{{"a", RatFun(2)}} : catalog::Bindings{});
        CHECK_MESSAGE(medial_by_expansion(A) == !check_derived_identities(A, false).violates("medial"), label);
    }
}

TEST_CASE("brute force finds a medial violation in a commutative product") {
    // Search dim-2 commutative products with entries in {-1,0,1} for one failing the medial law.
    std::optional<AlgebraPair> found;
    std::vector<int> c(6, -1);
    while (!found) {
        AlgebraPair A(2);
        A.set_dot(0, 0, {RatFun(c[0]), RatFun(c[1])});
        A.set_dot(0, 1, {RatFun(c[2]), RatFun(c[3])});
        A.set_dot(1, 1, {RatFun(c[4]), RatFun(c[5])});
        if (!medial_by_expansion(A)) found = A;
        std::size_t q = 0;
        while (q < c.size() && c[q] == 1) c[q++] = -1;
        if (q == c.size()) break;
        ++c[q];
    }
    REQUIRE(found);
    CHECK(check_derived_identities(*found, false).violates("medial"));
    CHECK_FALSE(check_cpa(*found).pass);
}

TEST_CASE("depolarization") {
    SingleAlgebra q = catalog::load_single("QAB");
    AlgebraPair p = depolarize(q);
    CHECK(p.product(e(2, 1), e(2, 1)) == e(2, 1));
    CHECK(is_zero_vector(p.product(e(2, 1), e(2, 2))));
    CHECK(p.bracket(e(2, 1), e(2, 2)) == e(2, 2));
    SingleAlgebra back = polarize(p);
    CHECK(back.M == q.M);

    SingleAlgebra sym(2);
    sym.M.at(0, 1, 0) = RatFun(1);
    sym.M.at(1, 0, 0) = RatFun(1);
    CHECK(depolarize(sym).D.is_zero());
    SingleAlgebra anti(2);
    anti.M.at(0, 1, 0) = RatFun(1);
    anti.M.at(1, 0, 0) = RatFun(-1);
    CHECK(depolarize(anti).C.is_zero());
}

TEST_CASE("identities A and B") {
    ABReport qab = check_AB(catalog::load_single("QAB"));
    CHECK(qab.A.pass);
    CHECK_FALSE(qab.B.pass);
    ABReport qba = check_AB(catalog::load_single("QBA"));
    CHECK(qba.B.pass);
    CHECK_FALSE(qba.A.pass);
    ABReport zero = check_AB(SingleAlgebra(3));
    CHECK(zero.A.pass);
    CHECK(zero.B.pass);
}

TEST_CASE("annihilators") {
    CHECK(annihilator(catalog::load("P2bold")) == Subspace::span(2, {e(2, 2)}));
    CHECK(annihilator(catalog::load("bbP1", {{"a", RatFun(0)}})) == Subspace::span(3, {e(3, 3)}));
    CHECK(annihilator(AlgebraPair(4)).dim() == 4);
}

TEST_CASE("nilpotency") {
    CHECK(is_nilpotent(catalog::load("Pfrak05")).nilpotent);
    CHECK_FALSE(is_nilpotent(catalog::load("P01")).nilpotent);
    Nilpotency z = is_nilpotent(AlgebraPair(3));
    CHECK(z.nilpotent);
    CHECK(z.nil_class == 1);
}

TEST_CASE("perfectness") {
    Perfectness sl2 = perfectness_checks(catalog::load("Lfrak1"));
    CHECK(sl2.bracket_perfect);
    CHECK(sl2.bracket_implication_holds);
    Perfectness t1 = perfectness_checks(catalog::load("T1"));
    CHECK(t1.dot_perfect);
    CHECK(t1.dot_implication_holds);
    Perfectness nil = perfectness_checks(catalog::load("Pfrak05"));
    CHECK_FALSE(nil.dot_perfect);
    CHECK_FALSE(nil.bracket_perfect);
}

TEST_CASE("subspaces") {
    Subspace s = Subspace::span(3, {e(3, 1), e(3, 2)});
    Subspace u = Subspace::span(3, {e(3, 2), e(3, 3)});
    CHECK(s.intersect(u) == Subspace::span(3, {e(3, 2)}));
    CHECK(s.sum(u) == Subspace::whole(3));
    CHECK(s.contains(e(3, 1) + e(3, 2)));
    CHECK_FALSE(s.contains(e(3, 3)));
}
