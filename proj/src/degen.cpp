#include "cpa/degen.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace cpa::degen {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::map<std::string, RatFun>& symbolic_env() {
    static const std::map<std::string, RatFun> env = {{"a", RatFun::a()}, {"t", RatFun::t()}};
    return env;
}

}  // namespace

std::vector<std::vector<Expr>> Witness::entries() const {
    const Expr zero = Expr::constant(GaussRational(0));
    std::vector<std::vector<Expr>> m(dim, std::vector<Expr>(dim, zero));
    std::vector<std::vector<bool>> set(dim, std::vector<bool>(dim, false));
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& term : basis[i]) {
            Expr c = reparametrize(term.coeff, reparam);
            m[i][term.index] = set[i][term.index] ? m[i][term.index] + c : c;
            set[i][term.index] = true;
        }
    return m;
}

std::optional<Expr> Witness::reparametrized_index() const {
    if (!index) return std::nullopt;
    return reparametrize(*index, reparam);
}

bool Witness::rational() const {
    for (const auto& row : entries())
        for (const auto& e : row)
            if (e.has_fractional_power()) return false;
    auto idx = reparametrized_index();
    return !idx || !idx->has_fractional_power();
}

Witness parse_witness(const std::string& text, const std::string& source) {
    Witness w;
    w.path = source;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool header = false, ended = false;
    std::vector<std::pair<std::size_t, std::string>> rows;
    auto fail = [&](const std::string& msg) { throw catalog::FormatError(source, lineno, msg); };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (ended) fail("content after 'end'");
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "degeneration") {
            header = true;
        } else if (!header) {
            fail("expected 'degeneration' header");
        } else if (key == "id") {
            w.id = rest;
        } else if (key == "anchor") {
            w.anchor = rest;
        } else if (key == "source") {
            std::string label, kw;
            ls >> label;
            w.source = label;
            if (ls >> kw) {
                if (kw != "index") fail("expected 'index <expr>' after source label");
                std::string expr;
                std::getline(ls, expr);
                try {
                    w.index = parse(trim(expr));
                } catch (const ParseError& e) {
                    fail(e.what());
                }
            }
        } else if (key == "target") {
            std::string label, kw, p;
            ls >> label;
            w.target = label;
            if (ls >> kw && !(kw == "param" && ls >> p && p == "a")) fail("expected 'param a' after target label");
        } else if (key == "reparam") {
            long m = 0;
            ls >> m;
            if (m < 1) fail("reparam must be a positive integer");
            w.reparam = static_cast<unsigned>(m);
        } else if (key == "mode") {
            if (rest == "exact")
                w.mode = Mode::Exact;
            else if (rest == "numeric")
                w.mode = Mode::Numeric;
            else if (rest == "auto")
                w.mode = Mode::Auto;
            else
                fail("unknown mode '" + rest + "'");
        } else if (key == "end") {
            ended = true;
        } else if (key.size() > 1 && key[0] == 'E') {
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("expected 'E<i> = ...'");
            std::string name = trim(line.substr(0, eq));
            std::size_t idx = 0;
            try {
                idx = std::stoul(name.substr(1));
            } catch (...) {
                fail("bad basis vector name '" + name + "'");
            }
            if (idx == 0) fail("basis vectors are numbered from 1");
            rows.emplace_back(idx, trim(line.substr(eq + 1)));
        } else {
            fail("unrecognized line '" + line + "'");
        }
    }
    if (!ended) fail("missing 'end'");
    if (w.source.empty() || w.target.empty()) fail("missing source or target");
    const auto& src = catalog::entry(w.source);
    const auto& tgt = catalog::entry(w.target);
    if (src.dim != tgt.dim) fail("source and target dimensions differ");
    w.dim = src.dim;
    if (rows.size() != w.dim) fail("expected " + std::to_string(w.dim) + " basis vectors");
    w.basis.resize(w.dim);
    std::vector<bool> seen(w.dim, false);
    for (auto& [idx, rhs] : rows) {
        if (idx > w.dim || seen[idx - 1]) fail("basis vector E" + std::to_string(idx) + " repeated or out of range");
        seen[idx - 1] = true;
        try {
            w.basis[idx - 1] = catalog::parse_linear(rhs, w.dim);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
    if (w.id.empty()) w.id = w.source + "->" + w.target;
    return w;
}

Witness load_witness(const std::filesystem::path& path) { return parse_witness(read_file(path), path.string()); }

std::vector<Witness> load_witnesses(const std::filesystem::path& dir) {
    std::vector<Witness> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".wit") out.push_back(load_witness(f.path()));
    std::sort(out.begin(), out.end(), [](const Witness& x, const Witness& y) { return x.id < y.id; });
    return out;
}

AlgebraPair transform(const AlgebraPair& A, const Matrix<RatFun>& M) {
    const std::size_t n = A.dim();
    if (M.rows() != n || M.cols() != n) throw DimensionMismatch("basis matrix has wrong size");
    Matrix<RatFun> inv;
    try {
        inv = invert(M);
    } catch (const SingularMatrix&) {
        throw SingularBasis();
    }
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(M.row(i));
    AlgebraPair out(n, A.label);
    auto coords = [&](const Vec& w) {
        Vec x(n);
        for (std::size_t l = 0; l < n; ++l) {
            if (w[l].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!inv(l, k).is_zero()) x[k] += w[l] * inv(l, k);
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            out.set_dot(i, j, coords(A.product(rows[i], rows[j])));
            if (i != j) out.set_bracket(i, j, coords(A.bracket(rows[i], rows[j])));
        }
    return out;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " (" << mode << ")";
    for (const auto& m : mismatches)
        os << "\n  " << m.tensor << "_" << m.i << m.j << "^" << m.k << ": limit " << m.limit << ", expected " << m.expected;
    for (const auto& [a, rs] : residuals) {
        os << "\n  a=" << a << " residuals:";
        for (double r : rs) os << " " << r;
    }
    for (const auto& n : notes) os << "\n  note: " << n;
    for (const auto& w : warnings) os << "\n  warning: " << w;
    return os.str();
}

std::pair<AlgebraPair, AlgebraPair> endpoints(const Witness& w) {
    const auto& se = catalog::entry(w.source);
    AlgebraPair src;
    if (auto idx = w.reparametrized_index()) {
        auto value = lower(*idx);
        if (!value) throw NotRationalEntries();
        src = catalog::instantiate(se, {{"a", *value}});
    } else {
        src = catalog::instantiate(se);
    }
    return {src, catalog::load(w.target)};
}

Report verify_exact(const Witness& w) {
    if (!w.rational()) throw NotRationalEntries();
    const std::size_t n = w.dim;
    Matrix<RatFun> M(n, n);
    auto ents = w.entries();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = *lower(ents[i][j]);
    auto [src, tgt] = endpoints(w);
    AlgebraPair T = transform(src, M);
    Report rep;
    rep.mode = "exact";
    for (const auto& [tag, mine, theirs] : {std::tuple{'c', &T.C, &tgt.C}, std::tuple{'d', &T.D, &tgt.D}})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const RatFun& f = mine->at(i, j, k);
                    RatFun lim;
                    if (!f.is_zero()) {
                        int v = valuation_t(f);
                        if (v < 0) throw DivergentConstant(v, tag, i + 1, j + 1, k + 1);
                        lim = limit_t0(f);
                    }
                    if (!(lim == theirs->at(i, j, k)))
                        rep.mismatches.push_back({tag, i + 1, j + 1, k + 1, lim.to_string(), theirs->at(i, j, k).to_string()});
                }
    rep.pass = rep.mismatches.empty();
    return rep;
}

namespace {

using CMatrix = std::vector<std::vector<Complex>>;

CMatrix invert_numeric(CMatrix m, const std::string& where) {
    const std::size_t n = m.size();
    CMatrix inv(n, std::vector<Complex>(n, Complex(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Complex(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[p][c])) p = r;
        if (m[p][c].is_zero()) throw NumericSingularBasis(where);
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Complex piv = m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Complex f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

struct NumericSetup {
    AlgebraPair source;  // symbolic in a; the index is applied numerically
    AlgebraPair target;
    std::vector<std::vector<Expr>> entries;
    std::optional<Expr> index;
};

// Max-norm distance between transformed and target constants at one sample.
Real residual(const NumericSetup& s, const Rational& a_value, const std::string& t_text, unsigned precision, Branch branch,
              EvalStats* stats) {
    PrecisionScope scope(precision);
    const std::size_t n = s.source.dim();
    NumericContext ctx;
    ctx.value_a = Complex(to_real(a_value));
    ctx.value_t = parse_complex(t_text);
    ctx.precision = precision;
    ctx.branch = branch;
    CMatrix M(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = eval_numeric(s.entries[i][j], ctx, stats);
    CMatrix inv = invert_numeric(M, "t = " + t_text);
    Complex a_src = s.index ? eval_numeric(*s.index, ctx, stats) : ctx.value_a;
    Real worst(0);
    for (const auto& [src, tgt] : {std::pair{&s.source.C, &s.target.C}, std::pair{&s.source.D, &s.target.D}}) {
        std::vector<Complex> S(n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t l = 0; l < n; ++l)
                    if (!src->at(p, q, l).is_zero()) S[(p * n + q) * n + l] = eval_numeric(src->at(p, q, l), a_src, ctx.value_t);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Complex> w(n, Complex(0));
                for (std::size_t p = 0; p < n; ++p) {
                    if (M[i][p].is_zero()) continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        if (M[j][q].is_zero()) continue;
                        Complex f = M[i][p] * M[j][q];
                        for (std::size_t l = 0; l < n; ++l)
                            if (!S[(p * n + q) * n + l].is_zero()) w[l] += f * S[(p * n + q) * n + l];
                    }
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Complex x(0);
                    for (std::size_t l = 0; l < n; ++l) x += w[l] * inv[l][k];
                    const RatFun& target = tgt->at(i, j, k);
                    Complex expected = target.is_zero() ? Complex(0) : eval_numeric(target, ctx.value_a, Complex(0));
                    Real d = abs(x - expected);
                    if (d > worst) worst = d;
                }
            }
    }
    return worst;
}

std::string sample_text(double t) {
    std::ostringstream os;
    os << std::scientific << t;
    return os.str();
}

// Residual at a sample, raising the precision until two consecutive levels agree.
double stable_residual(const NumericSetup& s, const Rational& a_value, double t, unsigned precision, Branch branch,
                       EvalStats* stats) {
    std::string tt = sample_text(t);
    unsigned p = precision;
    Real prev = residual(s, a_value, tt, p, branch, stats);
    for (int round = 0; round < 8; ++round) {
        Real next = residual(s, a_value, tt, p + 40, branch, stats);
        PrecisionScope scope(p + 40);
        Real diff = next > prev ? Real(next - prev) : Real(prev - next);
        Real floor = pow(Real(10), -static_cast<int>(p / 2));
        if (diff <= next / 1000 + floor) return next.convert_to<double>();
        prev = next;
        p += 40;
    }
    return prev.convert_to<double>();
}

bool monotone_and_small(const std::vector<double>& rs, const NumericOptions& o) {
    for (std::size_t k = 1; k < rs.size(); ++k)
        if (rs[k] > o.slack * rs[k - 1] + 1e-30) return false;
    return !rs.empty() && rs.back() < o.tol;
}

}  // namespace

Report verify_numeric(const Witness& w, const NumericOptions& options) {
    NumericSetup s;
    s.source = catalog::load(w.source);
    s.target = catalog::load(w.target);
    s.entries = w.entries();
    s.index = w.reparametrized_index();
    const auto& te = catalog::entry(w.target);
    const auto& se = catalog::entry(w.source);
    bool uses_a = te.is_parametric() || (!s.index && se.is_parametric()) || (s.index && s.index->uses("a"));
    for (const auto& row : s.entries)
        for (const auto& e : row) uses_a = uses_a || e.uses("a");

    Report rep;
    rep.mode = "numeric";
    std::vector<Rational> as = uses_a ? options.a_samples : std::vector<Rational>{Rational(0)};
    bool all = true;
    std::size_t used = 0;
    for (const auto& av : as) {
        if (uses_a) {
            RatFun v(av);
            if (!catalog::admissible(te, v) || (!s.index && !catalog::admissible(se, v))) {
                rep.notes.push_back("a = " + to_string(av) + " skipped (constraint)");
                continue;
            }
        }
        ++used;
        std::vector<double> rs;
        bool ok = false;
        for (Branch br : {Branch::Principal, Branch::RealOddRoots}) {
            EvalStats stats;
            rs.clear();
            try {
                for (double t : options.t_samples) rs.push_back(stable_residual(s, av, t, options.precision, br, &stats));
            } catch (const DivideByZeroAtPoint& e) {
                rep.notes.push_back("a = " + to_string(av) + ": " + e.what());
                rs.clear();
            }
            ok = monotone_and_small(rs, options);
            if (ok) {
                if (br == Branch::RealOddRoots && stats.real_root_substitutions > 0)
                    rep.warnings.push_back("a = " + to_string(av) + ": branch cut; real odd roots used");
                break;
            }
        }
        rep.residuals.emplace_back(uses_a ? to_string(av) : std::string("-"), rs);
        all = all && ok;
    }
    rep.pass = all && used > 0;
    return rep;
}

Report verify(const Witness& w, const NumericOptions& options) {
    if (w.mode == Mode::Numeric || (w.mode == Mode::Auto && !w.rational())) return verify_numeric(w, options);
    return verify_exact(w);
}

std::vector<std::string> Certificate::reasons() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
        if (!c.holds) out.push_back(c.name + " (" + c.detail + ")");
    return out;
}

Certificate certify_non_degeneration(const AlgebraPair& source, const AlgebraPair& target) {
    Certificate cert;
    for (auto& c : semicontinuity_check(source, target).conditions) cert.conditions.push_back(c);
    for (auto& c : semicontinuity_check(dot_part(source), dot_part(target)).conditions)
        cert.conditions.push_back({"dot_part." + c.name, c.holds, c.detail});
    for (auto& c : semicontinuity_check(bracket_part(source), bracket_part(target)).conditions)
        cert.conditions.push_back({"bracket_part." + c.name, c.holds, c.detail});
    // A 3-dimensional perfect Lie algebra is simple, hence rigid: only its own orbit reaches it.
    bool target_simple = target.dim() == 3 && target.C.is_zero() && derived(target).dim() == 3;
    if (target_simple)
        cert.conditions.push_back({"rigid_simple_target", !fingerprint_separates(source, target),
                                   "target is a simple Lie algebra with trivial product"});
    for (const auto& c : cert.conditions)
        if (!c.holds) cert.certified = true;
    return cert;
}

namespace {

const std::regex& constant_name() {
    static const std::regex re("([cd])([1-9])([1-9])_([1-9])");
    return re;
}

}  // namespace

ClosedSetSpec parse_closed_set(const std::string& text, const std::string& source) {
    ClosedSetSpec spec;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool ended = false;
    auto fail = [&](const std::string& msg) { throw catalog::FormatError(source, lineno, msg); };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "closedset") {
            spec.name = rest;
        } else if (key == "dim") {
            spec.dim = std::stoul(rest);
        } else if (key == "source") {
            spec.sources.push_back(rest);
        } else if (key == "eq") {
            if (spec.dim == 0) fail("'dim' must precede equations");
            ParseOptions opts;
            const std::size_t n = spec.dim;
            opts.extra_identifier = [n](const std::string& name) {
                std::smatch m;
                if (!std::regex_match(name, m, constant_name())) return false;
                for (int g = 2; g <= 4; ++g)
                    if (static_cast<std::size_t>(std::stoi(m[g].str())) > n) return false;
                return true;
            };
            auto eq = rest.find('=');
            try {
                Expr lhs = parse(trim(rest.substr(0, eq)), opts);
                Expr rhs = eq == std::string::npos ? Expr::constant(GaussRational(0)) : parse(trim(rest.substr(eq + 1)), opts);
                spec.equations.push_back(lhs - rhs);
            } catch (const ParseError& e) {
                fail(e.what());
            }
        } else if (key == "end") {
            ended = true;
        } else {
            fail("unrecognized line '" + line + "'");
        }
    }
    if (!ended) fail("missing 'end'");
    return spec;
}

ClosedSetSpec load_closed_set(const std::filesystem::path& path) { return parse_closed_set(read_file(path), path.string()); }

bool closed_set_membership(const ClosedSetSpec& spec, const AlgebraPair& A) {
    const std::size_t n = A.dim();
    if (n != spec.dim) throw DimensionMismatch("closed set and algebra differ in dimension");
    std::map<std::string, RatFun> env = symbolic_env();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::string suffix = std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1);
                env["c" + suffix] = A.C.at(i, j, k);
                env["d" + suffix] = A.D.at(i, j, k);
            }
    for (const auto& e : spec.equations)
        if (!evaluate(e, env).is_zero()) return false;
    return true;
}

}  // namespace cpa::degen
