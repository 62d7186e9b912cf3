#include "cpa/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace cpa::catalog {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool basis_var(const std::string& name, const std::string& basis_name, std::size_t dim, std::size_t* index) {
    if (name.size() <= basis_name.size() || name.compare(0, basis_name.size(), basis_name) != 0) return false;
    std::string digits = name.substr(basis_name.size());
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) return false;
    std::size_t k = std::stoul(digits);
    if (k < 1 || k > dim) return false;
    if (index) *index = k - 1;
    return true;
}

bool mentions_basis(const Expr& e, const std::string& basis_name, std::size_t dim) {
    for (std::size_t k = 1; k <= dim; ++k)
        if (e.uses(basis_name + std::to_string(k))) return true;
    return false;
}

void collect_terms(const Expr& e, bool negate, const std::string& basis_name, std::size_t dim, LinearCombination& out) {
    using K = Expr::Kind;
    auto one = Expr::constant(GaussRational(1));
    switch (e.kind()) {
        case K::Add:
            collect_terms(e.lhs(), negate, basis_name, dim, out);
            collect_terms(e.rhs(), negate, basis_name, dim, out);
            return;
        case K::Sub:
            collect_terms(e.lhs(), negate, basis_name, dim, out);
            collect_terms(e.rhs(), !negate, basis_name, dim, out);
            return;
        case K::Neg:
            collect_terms(e.operand(), !negate, basis_name, dim, out);
            return;
        case K::Var: {
            std::size_t k;
            if (basis_var(e.name(), basis_name, dim, &k)) {
                out.push_back({k, negate ? -one : one});
                return;
            }
            break;
        }
        case K::Mul: {
            std::size_t k;
            Expr l = e.lhs(), r = e.rhs();
            if (r.kind() == K::Var && basis_var(r.name(), basis_name, dim, &k) && !mentions_basis(l, basis_name, dim)) {
                out.push_back({k, negate ? -l : l});
                return;
            }
            if (l.kind() == K::Var && basis_var(l.name(), basis_name, dim, &k) && !mentions_basis(r, basis_name, dim)) {
                out.push_back({k, negate ? -r : r});
                return;
            }
            break;
        }
        case K::Const:
            if (e.value().is_zero()) return;
            break;
        default:
            break;
    }
    throw ParseError("not a linear combination of " + basis_name + "1.." + basis_name + std::to_string(dim) + ": " +
                         print(e),
                     0);
}

struct Cache {
    std::mutex mu;
    std::map<std::string, CatalogEntry> entries;
    std::filesystem::path dir;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

LinearCombination parse_linear(const std::string& text, std::size_t dim, const std::string& basis_name) {
    ParseOptions opts;
    opts.extra_identifier = [&](const std::string& name) { return basis_var(name, basis_name, dim, nullptr); };
    Expr e = parse(text, opts);
    LinearCombination out;
    collect_terms(e, false, basis_name, dim, out);
    return out;
}

Vec evaluate_linear(const LinearCombination& lc, std::size_t dim, const std::map<std::string, RatFun>& env) {
    Vec v(dim);
    for (const auto& term : lc) v.at(term.index) += evaluate(term.coeff, env);
    return v;
}

CatalogEntry parse_algebra(const std::string& text, const std::string& source) {
    CatalogEntry e;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool ended = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (ended) throw FormatError(source, lineno, "content after 'end'");
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        try {
            if (key == "algebra") {
                ls >> e.label;
            } else if (key == "dim") {
                ls >> e.dim;
            } else if (key == "params") {
                std::string p;
                while (ls >> p) {
                    if (p != "a") throw FormatError(source, lineno, "only the parameter 'a' is supported");
                    e.params.push_back(p);
                }
            } else if (key == "constraint") {
                std::string rest = trim(line.substr(key.size()));
                auto pos = rest.find("!=");
                if (pos == std::string::npos) throw FormatError(source, lineno, "constraint must have the form <expr> != <expr>");
                e.nonzero.push_back(parse(trim(rest.substr(0, pos))) - parse(trim(rest.substr(pos + 2))));
            } else if (key == "kind") {
                std::string k;
                ls >> k;
                if (k == "single")
                    e.kind = Kind::Single;
                else if (k == "pair")
                    e.kind = Kind::Pair;
                else
                    throw FormatError(source, lineno, "unknown kind '" + k + "'");
            } else if (key == "provenance") {
                e.provenance = trim(line.substr(key.size()));
            } else if (key == "end") {
                ended = true;
            } else {
                if (e.dim == 0) throw FormatError(source, lineno, "'dim' must precede product lines");
                auto eq = line.find('=');
                if (eq == std::string::npos) throw FormatError(source, lineno, "unrecognized line '" + line + "'");
                std::string lhs = trim(line.substr(0, eq));
                std::string rhs = trim(line.substr(eq + 1));
                ProductLine pl;
                bool bracket = false;
                std::string a, b;
                if (lhs.front() == '[' && lhs.back() == ']') {
                    bracket = true;
                    auto comma = lhs.find(',');
                    if (comma == std::string::npos) throw FormatError(source, lineno, "bracket needs two arguments");
                    a = trim(lhs.substr(1, comma - 1));
                    b = trim(lhs.substr(comma + 1, lhs.size() - comma - 2));
                } else {
                    auto star = lhs.find('*');
                    if (star == std::string::npos) throw FormatError(source, lineno, "product needs '*'");
                    a = trim(lhs.substr(0, star));
                    b = trim(lhs.substr(star + 1));
                }
                if (!basis_var(a, "e", e.dim, &pl.i) || !basis_var(b, "e", e.dim, &pl.j))
                    throw FormatError(source, lineno, "bad basis vector in '" + lhs + "'");
                if (bracket && pl.i == pl.j) throw FormatError(source, lineno, "bracket of a basis vector with itself");
                pl.value = parse_linear(rhs, e.dim);
                (bracket ? e.brackets : e.dots).push_back(std::move(pl));
            }
        } catch (const ParseError& err) {
            throw FormatError(source, lineno, err.what());
        }
    }
    if (e.label.empty()) throw FormatError(source, lineno, "missing 'algebra <label>'");
    if (e.dim == 0) throw FormatError(source, lineno, "missing 'dim'");
    if (!ended) throw FormatError(source, lineno, "missing 'end'");
    if (e.kind == Kind::Single && !e.brackets.empty()) throw FormatError(source, lineno, "single-product entries have no bracket");
    return e;
}

CatalogEntry read_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str(), path.string());
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("CPA_CATALOG_DIR"); env && *env) return env;
    return CPA_DEFAULT_DATA_DIR;
}

std::filesystem::path catalog_dir() { return data_dir() / "catalog"; }

const CatalogEntry& entry(const std::string& label) {
    Cache& c = cache();
    std::lock_guard lock(c.mu);
    std::filesystem::path dir = catalog_dir();
    if (dir != c.dir) {
        c.entries.clear();
        c.dir = dir;
    }
    auto it = c.entries.find(label);
    if (it != c.entries.end()) return it->second;
    std::filesystem::path p = dir / (label + ".alg");
    if (!std::filesystem::exists(p)) throw UnknownLabel(label);
    CatalogEntry e = read_algebra_file(p);
    if (e.label != label) throw std::runtime_error(p.string() + " declares label '" + e.label + "'");
    return c.entries.emplace(label, std::move(e)).first->second;
}

bool admissible(const CatalogEntry& e, const RatFun& value) {
    std::map<std::string, RatFun> env = {{"a", value}, {"t", RatFun::t()}};
    for (const auto& c : e.nonzero)
        if (evaluate(c, env).is_zero()) return false;
    return true;
}

namespace {

std::map<std::string, RatFun> environment(const CatalogEntry& e, const Bindings& bindings) {
    std::map<std::string, RatFun> env = {{"a", RatFun::a()}, {"t", RatFun::t()}};
    for (const auto& [name, value] : bindings) {
        if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
            throw std::invalid_argument(e.label + " has no parameter '" + name + "'");
        if (!admissible(e, value))
            throw ConstraintViolation(e.label + ": parameter value " + name + " = " + value.to_string() +
                                      " violates a recorded constraint");
        env[name] = value;
    }
    return env;
}

}  // namespace

AlgebraPair instantiate(const CatalogEntry& e, const Bindings& bindings) {
    if (e.kind != Kind::Pair) throw std::invalid_argument(e.label + " is a single-product entry");
    auto env = environment(e, bindings);
    AlgebraPair A(e.dim, e.label);
    for (const auto& pl : e.dots) A.set_dot(pl.i, pl.j, A.C.basis_product(pl.i, pl.j) + evaluate_linear(pl.value, e.dim, env));
    for (const auto& pl : e.brackets)
        A.set_bracket(pl.i, pl.j, A.D.basis_product(pl.i, pl.j) + evaluate_linear(pl.value, e.dim, env));
    return A;
}

SingleAlgebra instantiate_single(const CatalogEntry& e, const Bindings& bindings) {
    auto env = environment(e, bindings);
    SingleAlgebra M(e.dim, e.label);
    for (const auto& pl : e.dots) {
        Vec v = evaluate_linear(pl.value, e.dim, env);
        for (std::size_t k = 0; k < e.dim; ++k) M.M.at(pl.i, pl.j, k) += v[k];
        if (e.kind == Kind::Pair && pl.i != pl.j)
            for (std::size_t k = 0; k < e.dim; ++k) M.M.at(pl.j, pl.i, k) += v[k];
    }
    return M;
}

AlgebraPair load(const std::string& label, const Bindings& bindings) { return instantiate(entry(label), bindings); }

SingleAlgebra load_single(const std::string& label, const Bindings& bindings) {
    return instantiate_single(entry(label), bindings);
}

CatalogEntry resolve(const std::string& label_or_path) {
    if (label_or_path.find('/') != std::string::npos || label_or_path.ends_with(".alg"))
        return read_algebra_file(label_or_path);
    return entry(label_or_path);
}

std::vector<std::string> list(const Filter& filter) {
    std::vector<std::string> labels;
    std::filesystem::path dir = catalog_dir();
    if (!std::filesystem::is_directory(dir)) return labels;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".alg") labels.push_back(f.path().stem().string());
    std::sort(labels.begin(), labels.end());
    std::vector<std::string> out;
    for (const auto& l : labels) {
        const CatalogEntry& e = entry(l);
        if (filter.dim && e.dim != *filter.dim) continue;
        if (filter.provenance && e.provenance != *filter.provenance) continue;
        if (filter.nilpotent) {
            if (e.kind != Kind::Pair) continue;
            if (is_nilpotent(instantiate(e)).nilpotent != *filter.nilpotent) continue;
        }
        out.push_back(l);
    }
    return out;
}

std::string render_algebra(const AlgebraPair& A, const std::string& provenance) {
    const std::size_t n = A.dim();
    std::ostringstream os;
    os << "algebra " << (A.label.empty() ? "unnamed" : A.label) << "\n";
    os << "dim " << n << "\n";
    if (A.is_parametric()) os << "params a\n";
    if (!provenance.empty()) os << "provenance " << provenance << "\n";
    auto combo = [&](const Vec& v) {
        std::string s;
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k].is_zero()) continue;
            std::string c = v[k].is_one() ? "" : "(" + v[k].to_string() + ")*";
            s += (s.empty() ? "" : " + ") + c + "e" + std::to_string(k + 1);
        }
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec v = A.C.basis_product(i, j);
            if (!is_zero_vector(v)) os << "e" << i + 1 << "*e" << j + 1 << " = " << combo(v) << "\n";
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = A.D.basis_product(i, j);
            if (!is_zero_vector(v)) os << "[e" << i + 1 << ",e" << j + 1 << "] = " << combo(v) << "\n";
        }
    os << "end\n";
    return os.str();
}

}  // namespace cpa::catalog

namespace cpa::catalog {

namespace {

bool cocycle_var(const std::string& name, std::size_t dim, std::size_t* i, std::size_t* j) {
    if (name.size() != 3 || (name[0] != 'N' && name[0] != 'D')) return false;
    if (!std::isdigit(static_cast<unsigned char>(name[1])) || !std::isdigit(static_cast<unsigned char>(name[2]))) return false;
    std::size_t p = name[1] - '0', q = name[2] - '0';
    if (p < 1 || q < 1 || p > dim || q > dim) return false;
    if (name[0] == 'N' ? p > q : p >= q) return false;
    if (i) *i = p;
    if (j) *j = q;
    return true;
}

}  // namespace

CocyclePair parse_cocycle(const std::string& text, std::size_t dim) {
    ParseOptions opts;
    opts.extra_identifier = [dim](const std::string& name) { return cocycle_var(name, dim, nullptr, nullptr); };
    Expr e = parse(text, opts);
    std::vector<std::string> names;
    for (std::size_t p = 1; p <= dim; ++p)
        for (std::size_t q = p; q <= dim; ++q) {
            names.push_back("N" + std::to_string(p) + std::to_string(q));
            if (p < q) names.push_back("D" + std::to_string(p) + std::to_string(q));
        }
    std::map<std::string, RatFun> env = {{"a", RatFun::a()}, {"t", RatFun::t()}};
    for (const auto& n : names) env[n] = RatFun();
    if (!evaluate(e, env).is_zero()) throw ParseError("cocycle has a constant term: " + text, 0);
    CocyclePair c(dim);
    RatFun total;
    for (const auto& n : names) {
        env[n] = RatFun(1);
        RatFun coeff = evaluate(e, env);
        env[n] = RatFun();
        total += coeff;
        std::size_t p, q;
        cocycle_var(n, dim, &p, &q);
        if (n[0] == 'N') {
            c.theta.m(p - 1, q - 1) = coeff;
            c.theta.m(q - 1, p - 1) = coeff;
        } else {
            c.vartheta.m(p - 1, q - 1) = coeff;
            c.vartheta.m(q - 1, p - 1) = -coeff;
        }
    }
    for (const auto& n : names) env[n] = RatFun(1);
    if (!(evaluate(e, env) == total)) throw ParseError("cocycle is not linear in N_ij, D_ij: " + text, 0);
    return c;
}

ExtensionSpec parse_extension(const std::string& text, const std::string& source) {
    ExtensionSpec spec;
    spec.path = source;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool ended = false;
    std::map<std::size_t, std::string> vs;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "extension") {
            spec.name = rest;
        } else if (key == "base") {
            ls >> spec.base;
            std::string binding;
            while (ls >> binding) {
                auto eq = binding.find('=');
                if (eq == std::string::npos) throw FormatError(source, lineno, "expected <param>=<value>");
                spec.base_bindings[binding.substr(0, eq)] = *lower(parse(binding.substr(eq + 1)));
            }
        } else if (key == "expect") {
            spec.expect = rest;
        } else if (key == "ann") {
            spec.ann = std::stoul(rest);
        } else if (key == "end") {
            ended = true;
        } else if (key.size() > 1 && key[0] == 'v') {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw FormatError(source, lineno, "expected 'v<k> = <cocycle>'");
            std::size_t k = std::stoul(trim(line.substr(1, eq - 1)));
            if (k == 0 || vs.count(k)) throw FormatError(source, lineno, "bad or repeated component index");
            vs[k] = trim(line.substr(eq + 1));
        } else {
            throw FormatError(source, lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!ended) throw FormatError(source, lineno, "missing 'end'");
    if (spec.base.empty()) throw FormatError(source, lineno, "missing 'base'");
    std::size_t expected = 1;
    for (auto& [k, v] : vs) {
        if (k != expected++) throw FormatError(source, lineno, "components must be numbered v1, v2, ...");
        spec.cocycles.push_back(v);
    }
    if (spec.name.empty()) spec.name = spec.expect.empty() ? spec.base + "+ext" : spec.expect;
    return spec;
}

ExtensionSpec read_extension_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_extension(ss.str(), path.string());
}

std::vector<ExtensionSpec> load_extensions(const std::filesystem::path& dir) {
    std::vector<ExtensionSpec> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".ext") out.push_back(read_extension_file(f.path()));
    std::sort(out.begin(), out.end(), [](const ExtensionSpec& x, const ExtensionSpec& y) { return x.name < y.name; });
    return out;
}

AlgebraPair base_of(const ExtensionSpec& spec) { return load(spec.base, spec.base_bindings); }

AlgebraPair run_extension(const ExtensionSpec& spec) {
    AlgebraPair P = base_of(spec);
    std::vector<CocyclePair> cs;
    for (const auto& text : spec.cocycles) cs.push_back(parse_cocycle(text, P.dim()));
    return extend(P, cs, spec.name);
}

}  // namespace cpa::catalog
