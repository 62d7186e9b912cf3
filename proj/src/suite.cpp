#include "cpa/suite.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cpa/catalog.hpp"
#include "cpa/cohomext.hpp"
#include "cpa/degen.hpp"
#include "cpa/invariants.hpp"
#include "cpa/numeric.hpp"

namespace cpa::suite {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        default:
            return "inconclusive";
    }
}

std::size_t SuiteResult::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

std::string SuiteResult::to_text(bool verbose) const {
    std::ostringstream os;
    for (const auto& c : claims) {
        std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INCONCLUSIVE";
        os << tag << "  " << c.id << "  [" << c.anchor << "]";
        if (verbose || c.status != Status::Pass)
            if (!c.details.empty()) os << "\n      " << c.details;
        os << "\n";
    }
    os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Inconclusive)
       << " inconclusive in " << seconds << " s\n";
    return os.str();
}

std::string SuiteResult::to_json() const {
    nlohmann::json j;
    j["claims"] = nlohmann::json::array();
    for (const auto& c : claims)
        j["claims"].push_back({{"id", c.id},
                               {"anchor", c.anchor},
                               {"group", c.group},
                               {"status", to_string(c.status)},
                               {"details", c.details},
                               {"seconds", c.seconds}});
    j["totals"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"inconclusive", count(Status::Inconclusive)}};
    j["seconds"] = seconds;
    return j.dump(2);
}

const std::vector<std::string>& groups() {
    static const std::vector<std::string> g = {"identities", "depolarization", "cohomology", "extensions", "orbits",
                                               "degenerations", "certificates", "strict", "perfectness", "crossval"};
    return g;
}

namespace {

using Clock = std::chrono::steady_clock;

Claim make_claim(const std::string& group, const std::string& id, const std::string& anchor,
                 const std::function<std::pair<Status, std::string>()>& body) {
    Claim c;
    c.group = group;
    c.id = id;
    c.anchor = anchor;
    auto start = Clock::now();
    try {
        auto [status, details] = body();
        c.status = status;
        c.details = details;
    } catch (const std::exception& e) {
        c.status = Status::Fail;
        c.details = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return c;
}

std::pair<Status, std::string> verdict(bool ok, const std::string& details) {
    return {ok ? Status::Pass : Status::Fail, details};
}

const std::vector<Rational>& identity_samples() {
    static const std::vector<Rational> s = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3)};
    return s;
}

// ---------------------------------------------------------------- identities

std::vector<Claim> identities() {
    std::vector<Claim> out;
    for (const char* prov : {"TheoremA1", "TheoremA2", "Prop3classif", "Prop2dim"}) {
        catalog::Filter f;
        f.provenance = prov;
        for (const auto& label : catalog::list(f)) {
            out.push_back(make_claim("identities", "identities." + label, prov, [&] {
                const auto& e = catalog::entry(label);
                std::string details;
                bool ok = true;
                auto check = [&](const AlgebraPair& A, const std::string& where) {
                    IdentityReport r = check_cpa(A);
                    if (r.pass) r.merge(check_derived_identities(A));
                    if (!r.pass) {
                        ok = false;
                        details += where + ": " + r.summary(3) + "; ";
                    }
                };
                check(catalog::instantiate(e), "symbolic");
                std::size_t samples = 0;
                if (e.is_parametric())
                    for (const auto& v : identity_samples()) {
                        if (!catalog::admissible(e, RatFun(v))) continue;
                        ++samples;
                        check(catalog::instantiate(e, {{"a", RatFun(v)}}), "a=" + cpa::to_string(v));
                    }
                if (ok) details = "symbolic" + (samples ? " and " + std::to_string(samples) + " sampled values" : std::string());
                return verdict(ok, details);
            }));
        }
    }
    return out;
}

// ---------------------------------------------------------------- depolarization

std::vector<Claim> depolarization() {
    std::vector<Claim> out;
    for (auto [label, holds, fails] : {std::tuple{"QAB", "A", "B"}, std::tuple{"QBA", "B", "A"}}) {
        out.push_back(make_claim("depolarization", std::string("depolarization.") + label, "TheoremDep proof table", [&] {
            ABReport r = check_AB(catalog::load_single(label));
            bool a_pass = r.A.pass, b_pass = r.B.pass;
            bool ok = std::string(holds) == "A" ? (a_pass && !b_pass) : (b_pass && !a_pass);
            return verdict(ok, std::string("identity A ") + (a_pass ? "holds" : "fails") + ", identity B " +
                                   (b_pass ? "holds" : "fails") + " (expected " + holds + " holds, " + fails + " fails)");
        }));
    }
    return out;
}

// ---------------------------------------------------------------- cohomology

struct CohomologyRow {
    std::string id;
    std::string anchor;
    std::string label;
    catalog::Bindings bindings;
    std::size_t ann;
    std::vector<std::string> z, b, h;
};

const std::vector<CohomologyRow>& cohomology_rows() {
    static const std::vector<CohomologyRow> rows = {
        {"P14.row.P1bold", "Prop14 table", "P1bold", {}, 2, {"N11", "N12", "N22", "D12"}, {}, {"N11", "N12", "N22", "D12"}},
        {"P14.row.P2bold", "Prop14 table", "P2bold", {}, 1, {"N11", "N12", "D12"}, {"N11"}, {"N12", "D12"}},
        {"P16.row.bbP1_0",
         "Prop16 table",
         "bbP1",
         {{"a", RatFun(0)}},
         1,
         {"N11", "N12", "N22", "D12", "D13", "D23"},
         {"D12"},
         {"N11", "N12", "N22", "D13", "D23"}},
        {"P16.row.bbP1_a", "Prop16 table", "bbP1", {}, 1, {"N11", "N12", "N22", "D12"}, {"a*N12 + D12"}, {"N11", "N12", "N22"}},
        {"P16.row.bbP2",
         "Prop16 table",
         "bbP2",
         {},
         1,
         {"N11", "N12", "N22", "N23 + 2*D13", "D12", "D23"},
         {"N22 + D12"},
         {"N11", "N12", "N22", "N23 + 2*D13", "D23"}},
        {"P16.row.bbP3",
         "Prop16 table",
         "bbP3",
         {},
         1,
         {"N11", "N12", "a*(a-1)*N13 + a*N22 + D13", "D12"},
         {"a*N12 + D12"},
         {"N12", "a*(a-1)*N13 + a*N22 + D13"}},
        {"P16.row.bbP4",
         "Prop16 table",
         "bbP4",
         {},
         3,
         {"N11", "N12", "N13", "N22", "N23", "N33", "D12", "D13", "D23"},
         {},
         {"N11", "N12", "N13", "N22", "N23", "N33", "D12", "D13", "D23"}},
        {"P16.row.bbP5",
         "Prop16 table",
         "bbP5",
         {},
         2,
         {"N11", "N12", "N13", "N33", "D12", "D13"},
         {"N11"},
         {"N12", "N13", "N33", "D12", "D13"}},
        {"P16.row.bbP6", "Prop16 table", "bbP6", {}, 1, {"N11", "N12", "N22", "D12"}, {"N12"}, {"N11", "N22", "D12"}},
        {"P16.row.bbP7", "Prop16 table", "bbP7", {}, 1, {"N11", "N12", "N13 + N22", "D12"}, {"N11", "N12"}, {"N13 + N22", "D12"}},
    };
    return rows;
}

std::vector<Claim> cohomology_claims() {
    std::vector<Claim> out;
    for (const auto& row : cohomology_rows()) {
        out.push_back(make_claim("cohomology", row.id, row.anchor, [&] {
            AlgebraPair P = catalog::load(row.label, row.bindings);
            const std::size_t n = P.dim();
            Cohomology H = cohomology(P);
            std::size_t ann = annihilator(P).dim();
            std::ostringstream d;
            std::vector<std::string> problems;
            d << "computed Z=" << H.Z.dim() << " B=" << H.B.dim() << " H=" << H.h_dim << " Ann=" << ann << "; printed Z="
              << row.z.size() << " B=" << row.b.size() << " H=" << row.h.size() << " Ann=" << row.ann;
            if (H.Z.dim() != row.z.size()) problems.push_back("Z count");
            if (H.B.dim() != row.b.size()) problems.push_back("B count");
            if (H.h_dim != row.h.size()) problems.push_back("H count");
            if (ann != row.ann) problems.push_back("Ann");
            std::vector<Vec> zv, bv, hv;
            for (const auto& s : row.z) {
                CocyclePair c = catalog::parse_cocycle(s, n);
                if (!is_cocycle(P, c)) problems.push_back("printed Z generator " + s + " is not a cocycle");
                zv.push_back(c.coords());
            }
            for (const auto& s : row.b) {
                Vec v = catalog::parse_cocycle(s, n).coords();
                if (!H.B.contains(v)) problems.push_back("printed B generator " + s + " is not a coboundary");
                bv.push_back(v);
            }
            for (const auto& s : row.h) hv.push_back(catalog::parse_cocycle(s, n).coords());
            if (Subspace::span(n * n, zv).dim() != zv.size()) problems.push_back("printed Z generators are dependent");
            std::vector<Vec> hb = hv;
            for (auto& v : H.B.basis()) hb.push_back(v);
            if (Subspace::span(n * n, hb).dim() != hv.size() + H.B.dim())
                problems.push_back("printed H classes are dependent modulo B");
            for (const auto& p : problems) d << "; mismatch: " << p;
            return verdict(problems.empty(), d.str());
        }));
    }
    return out;
}

// ---------------------------------------------------------------- extensions

std::vector<Claim> extensions() {
    std::vector<Claim> out;
    for (const auto& spec : catalog::load_extensions()) {
        out.push_back(make_claim("extensions", "A2.ext." + spec.name, "TheoremA2 proof, extension of " + spec.base, [&] {
            AlgebraPair E = catalog::run_extension(spec);
            AlgebraPair expected = catalog::load(spec.expect);
            bool same = E == expected;
            std::size_t ann = annihilator(E).dim();
            bool ann_ok = !spec.ann || ann == *spec.ann;
            std::string d = std::string(same ? "tensors match " : "tensors differ from ") + spec.expect + "; Ann dim " +
                            std::to_string(ann);
            if (!same) d += "\n" + catalog::render_algebra(E);
            return verdict(same && ann_ok, d);
        }));
    }
    return out;
}

// ---------------------------------------------------------------- orbits

struct OrbitRow {
    std::string id, anchor, label;
    std::size_t printed;
};

const std::vector<OrbitRow>& orbit_rows() {
    static const std::vector<OrbitRow> rows = {
        {"G1.orbit.T1", "TheoremG1 proof, orbit dimensions", "T1", 9},
        {"G1.orbit.P02", "TheoremG1 proof, orbit dimensions", "P02", 8},
        {"G1.orbit.P10", "TheoremG1 proof, orbit dimensions", "P10", 8},
        {"G1.orbit.P11", "TheoremG1 proof, orbit dimensions", "P11", 8},
        {"G1.orbit.P13", "TheoremG1 proof, orbit dimensions", "P13", 8},
        {"G1.orbit.P14", "TheoremG1 proof, orbit dimensions", "P14", 8},
        {"G1.orbit.P16", "TheoremG1 proof, orbit dimensions", "P16", 7},
        {"G1.orbit.Lfrak1", "TheoremG1 proof, orbit dimensions", "Lfrak1", 6},
        {"G2.orbit.Pfrak15", "TheoremG2 proof, orbit dimensions", "Pfrak15", 14},
        {"G2.orbit.Pfrak16", "TheoremG2 proof, orbit dimensions", "Pfrak16", 14},
    };
    return rows;
}

std::vector<Claim> orbits() {
    std::vector<Claim> out;
    for (const auto& row : orbit_rows()) {
        out.push_back(make_claim("orbits", row.id, row.anchor, [&] {
            const auto& e = catalog::entry(row.label);
            AlgebraPair A = catalog::instantiate(e);
            std::size_t n2 = A.dim() * A.dim();
            std::size_t generic = orbit_dim(A);
            std::ostringstream d;
            d << "n^2 - dim Der = " << generic << " generically (dim Der " << n2 - generic << "), printed " << row.printed;
            bool ok = generic == row.printed;
            if (e.is_parametric()) {
                d << "; samples";
                for (const auto& v : {Rational(2), Rational(3), Rational(5)}) {
                    std::size_t s = orbit_dim(catalog::instantiate(e, {{"a", RatFun(v)}}));
                    d << " a=" << cpa::to_string(v) << ":" << s;
                    ok = ok && s == row.printed;
                }
                d << "; family orbit (one more for the parameter) = " << generic + 1;
            }
            return verdict(ok, d.str());
        }));
    }
    return out;
}

// ---------------------------------------------------------------- degenerations

const std::vector<degen::Witness>& witnesses() {
    static const std::vector<degen::Witness> w = degen::load_witnesses();
    return w;
}

std::vector<Claim> degenerations() {
    std::vector<Claim> out;
    for (const auto& w : witnesses()) {
        out.push_back(make_claim("degenerations", w.id, w.anchor, [&] {
            degen::Report r = degen::verify(w);
            bool ok = r.pass;
            if (r.mode == "numeric")
                for (const auto& [a, rs] : r.residuals)
                    if (rs.size() < 4 || rs[3] >= 1e-6) ok = false;
            return verdict(ok, r.summary());
        }));
    }
    return out;
}

// ---------------------------------------------------------------- certificates

bool violates(const degen::Certificate& c, const std::string& name) {
    for (const auto& cond : c.conditions)
        if (!cond.holds && cond.name == name) return true;
    return false;
}

std::vector<Claim> certificates() {
    std::vector<Claim> out;
    const std::string anchor = "TheoremG1 proof, reasons for non-degenerations";
    for (const char* s : {"P10", "P11"})
        for (const char* t : {"P02", "P13", "P14", "P16"}) {
            out.push_back(make_claim("certificates", std::string("G1.nondeg.bracket_square.") + s + "-" + t, anchor, [=] {
                auto c = degen::certify_non_degeneration(catalog::load(s), catalog::load(t));
                std::size_t ds = square_bracket(catalog::load(s)).dim(), dt = square_bracket(catalog::load(t)).dim();
                return verdict(violates(c, "bracket_square"),
                               "dim {P,P}: " + std::to_string(ds) + " vs " + std::to_string(dt));
            }));
        }
    for (const char* t : {"P10", "P11"}) {
        out.push_back(make_claim("certificates", std::string("G1.nondeg.dot_nilpotent.P02-") + t, anchor, [=] {
            auto c = degen::certify_non_degeneration(catalog::load("P02"), catalog::load(t));
            return verdict(violates(c, "dot_nilpotent"), "nilpotent dot in P02, non-nilpotent dot in " + std::string(t));
        }));
    }
    for (auto [label, file] : {std::pair{"P13", "R_P13.cls"}, std::pair{"P14", "R_P14.cls"}}) {
        out.push_back(make_claim("certificates", std::string("G1.nondeg.closed_set.") + label, anchor, [=] {
            auto spec = degen::load_closed_set(catalog::data_dir() / "closedsets" / file);
            bool in = degen::closed_set_membership(spec, catalog::load(label));
            return verdict(in, std::string(label) + (in ? " lies in " : " does not lie in ") + spec.name +
                                   "; that the target has no representative in the set is not automated");
        }));
    }
    out.push_back(make_claim("certificates", "G1.nondeg.rigid.Lfrak1", anchor, [] {
        AlgebraPair L = catalog::load("Lfrak1");
        std::vector<std::string> missing;
        catalog::Filter f;
        f.dim = 3;
        for (const auto& label : catalog::list(f)) {
            if (label == "Lfrak1" || catalog::entry(label).kind != catalog::Kind::Pair) continue;
            auto c = degen::certify_non_degeneration(catalog::load(label), L);
            if (!c.certified) missing.push_back(label);
        }
        return verdict(missing.empty(), missing.empty() ? "every other 3-dimensional catalog entry is certified"
                                                        : "uncertified sources: " + std::to_string(missing.size()));
    }));
    return out;
}

// ---------------------------------------------------------------- strict inequality

std::vector<Claim> strict() {
    std::vector<Claim> out;
    for (const auto& w : witnesses()) {
        out.push_back(make_claim("strict", "strict." + w.id, w.anchor, [&] {
            AlgebraPair src, tgt;
            if (w.rational()) {
                std::tie(src, tgt) = degen::endpoints(w);
            } else {
                src = catalog::load(w.source);
                tgt = catalog::load(w.target);
            }
            std::size_t ds = derivation_dim(src), dt = derivation_dim(tgt);
            std::ostringstream d;
            d << "dim Der " << ds << " -> " << dt << " generically";
            bool ok = ds < dt;
            if (src.is_parametric() || tgt.is_parametric()) {
                for (const auto& v : {Rational(2), Rational(3), Rational(-1)}) {
                    RatFun rv(v);
                    if (!catalog::admissible(catalog::entry(w.target), rv)) continue;
                    std::size_t s = derivation_dim(src.substitute_a(rv)), t = derivation_dim(tgt.substitute_a(rv));
                    d << "; a=" << cpa::to_string(v) << ": " << s << " -> " << t;
                    ok = ok && s < t;
                }
            }
            if (!ok && w.source != w.target && (w.index || catalog::entry(w.source).is_parametric()))
                d << " (family source: the family orbit has one more dimension than a member orbit)";
            return verdict(ok, d.str());
        }));
    }
    return out;
}

// ---------------------------------------------------------------- perfectness

std::vector<Claim> perfectness() {
    std::vector<Claim> out;
    out.push_back(make_claim("perfectness", "perfect.sl2_bracket", "Corollary on perfect brackets", [] {
        AlgebraPair L = catalog::load("Lfrak1");
        auto r = products_for_bracket(L);
        return verdict(!r.nonzero_solution, "linear solution space dim " + std::to_string(r.linear_dim) + "; " + r.method);
    }));
    out.push_back(make_claim("perfectness", "perfect.T1_product", "Corollary on perfect products", [] {
        auto r = brackets_for_product(catalog::load("T1"));
        std::string d = "linear solution space dim " + std::to_string(r.linear_dim);
        if (!r.nonzero_solution && r.linear_dim > 0)
            return std::pair{Status::Inconclusive, d + "; Jacobi checked only on basis directions"};
        return verdict(!r.nonzero_solution, d);
    }));
    return out;
}

// ---------------------------------------------------------------- cross validation

std::vector<Claim> crossval() {
    std::vector<Claim> out;
    for (const auto& w : witnesses()) {
        if (!w.rational()) continue;
        out.push_back(make_claim("crossval", "crossval." + w.id, w.anchor, [&] {
            degen::Report e = degen::verify_exact(w);
            degen::Report n = degen::verify_numeric(w);
            return verdict(e.pass == n.pass, std::string("exact ") + (e.pass ? "pass" : "fail") + ", numeric " +
                                                 (n.pass ? "pass" : "fail"));
        }));
    }
    out.push_back(make_claim("crossval", "crossval.limits", "limit at t = 0 versus t = 1e-8", [] {
        auto r = limit_cross_check(200);
        std::string d = std::to_string(r.samples) + " samples, " + std::to_string(r.skipped) + " skipped, " +
                        std::to_string(r.disagreements) + " disagreements";
        if (!r.first_failure.empty()) d += "; first: " + r.first_failure;
        return verdict(r.disagreements == 0 && r.samples == 200, d);
    }));
    return out;
}

}  // namespace

// ---------------------------------------------------------------- public helpers

CompatibleProducts products_for_bracket(const AlgebraPair& B) {
    const std::size_t n = B.dim();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> unknowns;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                index[{i, j, k}] = unknowns.size();
                unknowns.emplace_back(i, j, k);
            }
    const std::size_t N = unknowns.size();
    auto u = [&](std::size_t i, std::size_t j, std::size_t k) { return index.at({std::min(i, j), std::max(i, j), k}); };
    auto d = [&](std::size_t i, std::size_t j, std::size_t k) -> const RatFun& { return B.D.at(i, j, k); };
    Matrix<RatFun> sys(0, N);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z)
                for (std::size_t m = 0; m < n; ++m) {
                    Vec row(N);
                    for (std::size_t p = 0; p < n; ++p) {
                        if (!d(y, z, p).is_zero()) row[u(x, p, m)] += d(y, z, p);
                        if (!d(p, z, m).is_zero()) row[u(x, y, p)] -= d(p, z, m);
                        if (!d(y, p, m).is_zero()) row[u(x, z, p)] -= d(y, p, m);
                    }
                    if (!is_zero_vector(row)) sys.append_row(row);
                }
    std::vector<Vec> K = sys.rows() ? kernel(sys) : std::vector<Vec>{};
    if (!sys.rows())
        for (std::size_t q = 0; q < N; ++q) K.push_back(unit_vector(N, q));
    CompatibleProducts r;
    r.linear_dim = K.size();
    if (K.empty()) {
        r.method = "linear condition forces the zero product";
        return r;
    }
    // Quadratic condition {x,y}.z = x.(y.z) - y.(x.z) on c = sum_r l_r K_r: collect linear and quadratic parts.
    auto algebra_of = [&](const Vec& c) {
        AlgebraPair A(n);
        A.D = B.D;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vec v(n);
                for (std::size_t k = 0; k < n; ++k) v[k] = c[u(i, j, k)];
                A.set_dot(i, j, v);
            }
        return A;
    };
    auto residuals = [&](const AlgebraPair& lin, const AlgebraPair& q1, const AlgebraPair& q2) {
        // Linear part from lin's product, quadratic part from products of q1 and q2.
        Vec out;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Vec ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
                    Vec l = lin.product(B.bracket(ex, ey), ez);
                    Vec q = q1.product(ex, q2.product(ey, ez)) - q1.product(ey, q2.product(ex, ez));
                    for (std::size_t k = 0; k < n; ++k) {
                        out.push_back(l[k]);
                        out.push_back(q[k]);
                    }
                }
        return out;
    };
    if (K.size() == 1) {
        AlgebraPair A = algebra_of(K[0]);
        Vec lq = residuals(A, A, A);
        std::optional<RatFun> lambda;
        bool consistent = true;
        for (std::size_t e = 0; e < lq.size(); e += 2) {
            const RatFun& L = lq[e];
            const RatFun& Q = lq[e + 1];
            if (Q.is_zero()) {
                if (!L.is_zero()) consistent = false;
                continue;
            }
            RatFun cand = -L / Q;
            if (lambda && !(*lambda == cand)) consistent = false;
            if (!lambda) lambda = cand;
        }
        r.nonzero_solution = consistent && (!lambda || !lambda->is_zero());
        r.method = "one-parameter family l*K: equations l*L + l^2*Q = 0 have " +
                   std::string(r.nonzero_solution ? "a nonzero root" : "only l = 0");
        return r;
    }
    // Several parameters: the linear part alone must already vanish identically for a nonzero root with small l.
    r.method = "multi-parameter solution space; brute force over {-2..2}^" + std::to_string(K.size());
    std::vector<int> l(K.size(), -2);
    while (true) {
        bool nonzero = std::any_of(l.begin(), l.end(), [](int v) { return v != 0; });
        if (nonzero) {
            Vec c(N);
            for (std::size_t q = 0; q < K.size(); ++q) c = c + scale(RatFun(l[q]), K[q]);
            AlgebraPair A = algebra_of(c);
            if (check_cpa(A).pass) {
                r.nonzero_solution = true;
                return r;
            }
        }
        std::size_t q = 0;
        while (q < l.size() && l[q] == 2) l[q++] = -2;
        if (q == l.size()) break;
        ++l[q];
    }
    return r;
}

CompatibleBrackets brackets_for_product(const AlgebraPair& A) {
    AffineFormSpace s = z2_fixed_dot_linear(A);
    CompatibleBrackets r;
    r.linear_dim = s.homogeneous.size();
    if (!s.particular) return r;
    bool particular_zero = s.particular->is_zero();
    if (!particular_zero && jacobi_check(*s.particular)) r.nonzero_solution = true;
    for (const auto& h : s.homogeneous)
        if (jacobi_check(*s.particular + h)) r.nonzero_solution = true;
    return r;
}

LimitCrossCheck limit_cross_check(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 3), shift(0, 2);
    const Rational a_value(7, 3);
    LimitCrossCheck r;
    auto random_poly = [&](int lowest) {
        Poly2 p;
        int top = lowest + deg(rng);
        for (int j = lowest; j <= top; ++j)
            for (int i = 0; i <= 2; ++i) {
                int c = coef(rng);
                if (c) p += Poly2::monomial(GaussRational(c), i, j);
            }
        if (p.is_zero()) p = Poly2::monomial(GaussRational(1), 0, lowest);
        return p;
    };
    PrecisionScope scope(60);
    while (r.samples < count) {
        int vn = shift(rng), vd = shift(rng);
        RatFun f(random_poly(vn), random_poly(vd));
        if (f.is_zero() || valuation_t(f) < 0) {
            ++r.skipped;
            continue;
        }
        GaussRational exact;
        try {
            exact = limit_t0(f).substitute_a(RatFun(a_value)).constant_value();
            Complex probe = eval_numeric(f.den(), to_complex(GaussRational(a_value)), Complex(0));
            (void)probe;
        } catch (const std::exception&) {
            ++r.skipped;
            continue;
        }
        RatFun den0 = RatFun(f.den()).substitute_t(RatFun(0));
        if (valuation_t(f) == 0 && den0.substitute_a(RatFun(a_value)).is_zero()) {
            ++r.skipped;
            continue;
        }
        ++r.samples;
        Complex num = eval_numeric(f, to_complex(GaussRational(a_value)), parse_complex("1e-8"));
        Complex ex = to_complex(exact);
        Real diff = abs(num - ex);
        Real scale_v = abs(ex);
        bool ok = scale_v == 0 ? diff < Real("1e-4") : diff < Real("1e-4") * scale_v;
        if (!ok) {
            ++r.disagreements;
            if (r.first_failure.empty()) r.first_failure = f.to_string();
        }
    }
    return r;
}

std::vector<Claim> run_group(const std::string& group) {
    std::vector<Claim> claims;
    if (group == "identities")
        claims = identities();
    else if (group == "depolarization")
        claims = depolarization();
    else if (group == "cohomology")
        claims = cohomology_claims();
    else if (group == "extensions")
        claims = extensions();
    else if (group == "orbits")
        claims = orbits();
    else if (group == "degenerations")
        claims = degenerations();
    else if (group == "certificates")
        claims = certificates();
    else if (group == "strict")
        claims = strict();
    else if (group == "perfectness")
        claims = perfectness();
    else if (group == "crossval")
        claims = crossval();
    else
        throw std::invalid_argument("unknown suite group '" + group + "'");
    std::sort(claims.begin(), claims.end(), [](const Claim& x, const Claim& y) { return x.id < y.id; });
    return claims;
}

SuiteResult run(const std::vector<std::string>& only) {
    SuiteResult r;
    auto start = Clock::now();
    for (const auto& g : groups()) {
        if (!only.empty() && std::find(only.begin(), only.end(), g) == only.end()) continue;
        for (auto& c : run_group(g)) r.claims.push_back(std::move(c));
    }
    for (const auto& o : only)
        if (std::find(groups().begin(), groups().end(), o) == groups().end())
            throw std::invalid_argument("unknown suite group '" + o + "'");
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

}  // namespace cpa::suite
