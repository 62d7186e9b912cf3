#include "cpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cpa/catalog.hpp"
#include "cpa/cohomext.hpp"
#include "cpa/degen.hpp"
#include "cpa/invariants.hpp"
#include "cpa/suite.hpp"

namespace cpa::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

catalog::Bindings parse_params(const std::vector<std::string>& params) {
    catalog::Bindings b;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw UsageError("parameter must look like name=value: " + p);
        auto value = lower(parse(p.substr(eq + 1)));
        if (!value) throw UsageError("parameter value must be rational: " + p);
        b[p.substr(0, eq)] = *value;
    }
    return b;
}

struct Loaded {
    catalog::CatalogEntry entry;
    AlgebraPair algebra;
};

Loaded load_pair(const std::string& label, const catalog::Bindings& b) {
    Loaded l{catalog::resolve(label), {}};
    if (l.entry.kind != catalog::Kind::Pair) throw UsageError(label + " is a single-product entry; use --single");
    for (const auto& [name, value] : b)
        if (name == "a" && !catalog::admissible(l.entry, value))
            throw catalog::ConstraintViolation(l.entry.label + ": parameter value violates the recorded constraints");
    l.algebra = catalog::instantiate(l.entry, b);
    return l;
}

int cmd_check(std::ostream& out, const std::string& target, bool all, bool single, const std::string& identities,
              const catalog::Bindings& b) {
    if (all) {
        std::size_t failed = 0, total = 0;
        for (const auto& label : catalog::list()) {
            const auto& e = catalog::entry(label);
            ++total;
            bool ok;
            if (e.kind == catalog::Kind::Single) {
                ok = true;
                out << "SKIP  " << label << " (single product)\n";
                --total;
                continue;
            }
            AlgebraPair A = catalog::instantiate(e);
            IdentityReport r = check_cpa(A);
            if (r.pass) r.merge(check_derived_identities(A));
            ok = r.pass;
            if (!ok) ++failed;
            out << (ok ? "PASS  " : "FAIL  ") << label << "\n";
        }
        out << total - failed << "/" << total << " catalog pairs pass\n";
        return failed ? 1 : 0;
    }
    if (target.empty()) throw UsageError("check needs a label, a path, or --all");
    auto e = catalog::resolve(target);
    if (single || e.kind == catalog::Kind::Single) {
        SingleAlgebra m = catalog::instantiate_single(e, b);
        ABReport r = check_AB(m);
        bool want_a = identities.find('A') != std::string::npos || identities.empty();
        bool want_b = identities.find('B') != std::string::npos || identities.empty();
        if (want_a) out << "A: " << (r.A.pass ? "pass" : "fail") << "\n";
        if (want_b) out << "B: " << (r.B.pass ? "pass" : "fail") << "\n";
        return 0;
    }
    AlgebraPair A = load_pair(target, b).algebra;
    IdentityReport r = check_cpa(A);
    if (r.pass) r.merge(check_derived_identities(A));
    out << (r.pass ? "PASS" : "FAIL") << "  " << e.label << "\n";
    if (!r.pass) out << r.summary() << "\n";
    return r.pass ? 0 : 1;
}

int cmd_der(std::ostream& out, const std::string& target, std::size_t abelian, const catalog::Bindings& b) {
    AlgebraPair A;
    std::string name;
    bool parametric = false;
    if (abelian) {
        A = AlgebraPair(abelian, "abelian");
        name = "abelian " + std::to_string(abelian);
    } else {
        if (target.empty()) throw UsageError("der needs a label or --abelian n");
        auto l = load_pair(target, b);
        A = l.algebra;
        name = l.entry.label;
        parametric = A.is_parametric();
    }
    std::size_t n2 = A.dim() * A.dim();
    std::size_t der = derivation_dim(A);
    out << name << ": Der " << der << ", orbit " << n2 - der;
    if (parametric) out << " (family " << n2 - der + 1 << ")";
    out << "\n";
    return 0;
}

int cmd_h22(std::ostream& out, const std::string& target, const catalog::Bindings& b, bool json, std::size_t abelian) {
    AlgebraPair P = abelian ? AlgebraPair(abelian, "abelian") : load_pair(target, b).algebra;
    Cohomology H = cohomology(P);
    const std::size_t n = P.dim();
    auto names = [&](const Subspace& s) {
        std::vector<std::string> v;
        for (const auto& vec : s.basis()) v.push_back(CocyclePair::from_coords(n, vec).to_string());
        return v;
    };
    std::vector<std::string> reps;
    for (const auto& c : H.h_representatives) reps.push_back(c.to_string());
    std::size_t ann = annihilator(P).dim();
    if (json) {
        nlohmann::json j{{"Z", H.Z.dim()}, {"B", H.B.dim()}, {"H", H.h_dim}, {"ann", ann},
                         {"Z_basis", names(H.Z)}, {"B_basis", names(H.B)}, {"H_representatives", reps}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "Z dim " << H.Z.dim() << ", B dim " << H.B.dim() << ", H dim " << H.h_dim << ", Ann dim " << ann << "\n";
    out << "Z basis:\n";
    for (const auto& s : names(H.Z)) out << "  " << s << "\n";
    out << "B basis:\n";
    for (const auto& s : names(H.B)) out << "  " << s << "\n";
    out << "H representatives:\n";
    for (const auto& s : reps) out << "  " << s << "\n";
    return 0;
}

int cmd_extend(std::ostream& out, std::ostream& err, const std::string& target, const std::vector<std::string>& cocycles,
               const catalog::Bindings& b, const std::string& output) {
    AlgebraPair E;
    if (std::filesystem::is_regular_file(target)) {
        auto spec = catalog::read_extension_file(target);
        E = catalog::run_extension(spec);
        bool matches = E == catalog::load(spec.expect);
        err << "extension " << spec.name << (matches ? " matches " : " differs from ") << spec.expect << "\n";
        if (!matches) {
            out << catalog::render_algebra(E);
            return 1;
        }
    } else {
        if (cocycles.empty()) throw UsageError("extend needs an extension file or --cocycle arguments");
        AlgebraPair P = load_pair(target, b).algebra;
        std::vector<CocyclePair> cs;
        for (const auto& c : cocycles) cs.push_back(catalog::parse_cocycle(c, P.dim()));
        E = extend(P, cs, target + "_ext");
    }
    std::string text = catalog::render_algebra(E);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output);
        if (!f) throw UsageError("cannot write " + output);
        f << text;
    }
    return 0;
}

degen::Witness find_witness(const std::string& target) {
    if (std::filesystem::is_regular_file(target)) return degen::load_witness(target);
    for (auto& w : degen::load_witnesses())
        if (w.id == target) return w;
    throw UsageError("no witness file or id '" + target + "'");
}

int cmd_degen(std::ostream& out, const std::string& target, bool all, const std::string& mode, bool json) {
    std::vector<degen::Witness> ws;
    if (all)
        ws = degen::load_witnesses();
    else if (!target.empty())
        ws.push_back(find_witness(target));
    else
        throw UsageError("degen needs a witness path, an id, or --suite");
    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& w : ws) {
        degen::Report r = mode == "exact" ? degen::verify_exact(w) : mode == "numeric" ? degen::verify_numeric(w) : degen::verify(w);
        ok = ok && r.pass;
        if (json)
            j.push_back({{"id", w.id}, {"anchor", w.anchor}, {"pass", r.pass}, {"mode", r.mode}, {"summary", r.summary()}});
        else
            out << (r.pass ? "PASS  " : "FAIL  ") << w.id << "  " << w.source << " -> " << w.target << "\n      " << r.summary()
                << "\n";
    }
    if (json) out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_fingerprint(std::ostream& out, const std::string& target, const catalog::Bindings& b) {
    auto l = load_pair(target, b);
    out << l.entry.label << ": " << fingerprint(l.algebra).to_string() << "\n";
    return 0;
}

int cmd_iso(std::ostream& out, const std::string& x, const std::string& y, const std::string& map, const catalog::Bindings& b) {
    AlgebraPair A = load_pair(x, b).algebra, B = load_pair(y, b).algebra;
    if (map.empty()) {
        bool sep = fingerprint_separates(A, B);
        out << (sep ? "not isomorphic: invariants differ" : "invariants agree; supply --map to verify an isomorphism") << "\n";
        return 0;
    }
    std::vector<Vec> rows;
    std::istringstream in(map);
    std::string row;
    while (std::getline(in, row, ';')) {
        Vec v;
        std::istringstream rs(row);
        std::string entry;
        while (std::getline(rs, entry, ',')) {
            auto value = lower(parse(entry));
            if (!value) throw UsageError("map entries must be rational: " + entry);
            v.push_back(*value);
        }
        rows.push_back(v);
    }
    auto phi = Matrix<RatFun>::from_rows(rows);
    if (phi.rows() != A.dim() || phi.cols() != A.dim()) throw UsageError("map has the wrong size");
    bool ok = verify_iso(phi, A, B);
    out << (ok ? "isomorphism verified" : "map is not an isomorphism") << "\n";
    return ok ? 0 : 1;
}

int cmd_suite(std::ostream& out, const std::vector<std::string>& only, bool json, bool verbose) {
    suite::SuiteResult r = suite::run(only);
    out << (json ? r.to_json() + "\n" : r.to_text(verbose));
    return r.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commutative post-Lie algebra toolkit"};
    app.require_subcommand(1);
    std::vector<std::string> params;
    std::string target, second, identities, output, mode = "auto", map;
    std::vector<std::string> cocycles, only;
    bool all = false, single = false, json = false, verbose = false, generic = false, paper = false;
    std::size_t abelian = 0;

    auto* check = app.add_subcommand("check", "check the CPA identities");
    check->add_option("target", target, "catalog label or .alg path");
    check->add_flag("--all", all, "check every catalog entry");
    check->add_flag("--single", single, "treat the input as a single product");
    check->add_option("--identities", identities, "single product identities to check (A, B, AB)");
    check->add_option("--param", params, "parameter binding, e.g. a=2");

    auto* der = app.add_subcommand("der", "derivation and orbit dimension");
    der->add_option("target", target, "catalog label or .alg path");
    der->add_option("--param", params, "parameter binding");
    der->add_flag("--generic", generic, "keep parameters symbolic (default)");
    der->add_option("--abelian", abelian, "use the abelian algebra of this dimension");

    auto* h22 = app.add_subcommand("h22", "cocycles, coboundaries and cohomology");
    h22->add_option("target", target, "catalog label or .alg path");
    h22->add_option("--param", params, "parameter binding");
    h22->add_option("--abelian", abelian, "use the abelian algebra of this dimension");
    h22->add_flag("--json", json, "machine readable output");

    auto* ext = app.add_subcommand("extend", "annihilator extension");
    ext->add_option("target", target, "extension file, or base label together with --cocycle")->required();
    ext->add_option("--cocycle", cocycles, "cocycle such as 'N12 + D13'");
    ext->add_option("--param", params, "parameter binding for the base");
    ext->add_option("-o,--output", output, "write the algebra file here");

    auto* deg = app.add_subcommand("degen", "verify degeneration witnesses");
    deg->add_option("target", target, "witness file or id");
    deg->add_flag("--suite", all, "verify every recorded witness");
    deg->add_option("--mode", mode, "exact, numeric or auto")->check(CLI::IsMember({"exact", "numeric", "auto"}));
    deg->add_flag("--json", json, "machine readable output");

    auto* fp = app.add_subcommand("fingerprint", "isomorphism invariants");
    fp->add_option("target", target, "catalog label or .alg path")->required();
    fp->add_option("--param", params, "parameter binding");

    auto* iso = app.add_subcommand("iso", "compare two algebras");
    iso->add_option("first", target, "catalog label or .alg path")->required();
    iso->add_option("second", second, "catalog label or .alg path")->required();
    iso->add_option("--map", map, "matrix rows separated by ';', entries by ','");
    iso->add_option("--param", params, "parameter binding");

    auto* su = app.add_subcommand("suite", "run the claim suite");
    su->add_flag("--paper", paper, "run every recorded claim (default)");
    su->add_option("--only", only, "restrict to these groups");
    su->add_flag("--json", json, "machine readable output");
    su->add_flag("-v,--verbose", verbose, "print details for passing claims");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }
    (void)generic;
    (void)paper;
    try {
        catalog::Bindings b = parse_params(params);
        if (*check) return cmd_check(out, target, all, single, identities, b);
        if (*der) return cmd_der(out, target, abelian, b);
        if (*h22) return cmd_h22(out, target, b, json, abelian);
        if (*ext) return cmd_extend(out, err, target, cocycles, b, output);
        if (*deg) return cmd_degen(out, target, all, mode, json);
        if (*fp) return cmd_fingerprint(out, target, b);
        if (*iso) return cmd_iso(out, target, second, map, b);
        if (*su) return cmd_suite(out, only, json, verbose);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const catalog::UnknownLabel& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const catalog::FormatError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace cpa::cli
