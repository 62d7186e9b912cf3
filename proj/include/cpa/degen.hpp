#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cpa/algcore.hpp"
#include "cpa/catalog.hpp"
#include "cpa/invariants.hpp"
#include "cpa/numeric.hpp"

namespace cpa::degen {

class SingularBasis : public std::domain_error {
public:
    SingularBasis() : std::domain_error("parametrized basis is singular") {}
};

class NumericSingularBasis : public std::domain_error {
public:
    explicit NumericSingularBasis(const std::string& where) : std::domain_error("basis is numerically singular at " + where) {}
};

class NotRationalEntries : public std::domain_error {
public:
    NotRationalEntries() : std::domain_error("basis entries involve fractional powers; use numeric mode") {}
};

// A transformed structure constant with negative t-valuation.
class DivergentConstant : public NegativeValuation {
public:
    DivergentConstant(int v, char tensor, std::size_t i, std::size_t j, std::size_t k)
        : NegativeValuation(v), tensor(tensor), i(i), j(j), k(k) {
        where = std::string(1, tensor) + "_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k);
    }
    const char* what() const noexcept override { return where.c_str(); }
    char tensor;
    std::size_t i, j, k;  // 1-based
    std::string where;
};

enum class Mode { Exact, Numeric, Auto };

struct Witness {
    std::string id;
    std::string anchor;
    std::string source;
    std::optional<Expr> index;
    std::string target;
    unsigned reparam = 1;
    Mode mode = Mode::Auto;
    // Row i holds E_{i+1} in the coordinates of e_1..e_n.
    std::vector<catalog::LinearCombination> basis;
    std::size_t dim = 0;
    std::string path;

    // Basis entries after reparametrization.
    std::vector<std::vector<Expr>> entries() const;
    std::optional<Expr> reparametrized_index() const;
    bool rational() const;
};

Witness parse_witness(const std::string& text, const std::string& source = "<text>");
Witness load_witness(const std::filesystem::path& path);
// All witnesses under data/witnesses, sorted by id.
std::vector<Witness> load_witnesses(const std::filesystem::path& dir = catalog::data_dir() / "witnesses");

// Rows of M are the new basis vectors in old coordinates.
AlgebraPair transform(const AlgebraPair& A, const Matrix<RatFun>& M);

struct Mismatch {
    char tensor = 'c';
    std::size_t i = 0, j = 0, k = 0;  // 1-based
    std::string limit;
    std::string expected;
};

struct Report {
    bool pass = false;
    std::string mode;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    // Numeric mode: residual per t sample for each sampled a value.
    std::vector<std::pair<std::string, std::vector<double>>> residuals;
    std::string summary() const;
};

// Source with the index substitution applied and the target, both exact.
std::pair<AlgebraPair, AlgebraPair> endpoints(const Witness& w);

Report verify_exact(const Witness& w);

struct NumericOptions {
    double tol = 1e-6;
    std::vector<double> t_samples = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
    std::vector<Rational> a_samples = {Rational(2), Rational(3), Rational(-1)};
    unsigned precision = 60;
    double slack = 1.1;
};

Report verify_numeric(const Witness& w, const NumericOptions& options = {});
// Exact when the entries are rational (unless mode says numeric), numeric otherwise.
Report verify(const Witness& w, const NumericOptions& options = {});

struct Certificate {
    bool certified = false;
    std::vector<Condition> conditions;
    std::vector<std::string> reasons() const;
};

Certificate certify_non_degeneration(const AlgebraPair& source, const AlgebraPair& target);

struct ClosedSetSpec {
    std::string name;
    std::size_t dim = 0;
    std::vector<Expr> equations;
    std::vector<std::string> sources;
};

ClosedSetSpec parse_closed_set(const std::string& text, const std::string& source = "<text>");
ClosedSetSpec load_closed_set(const std::filesystem::path& path);
bool closed_set_membership(const ClosedSetSpec& spec, const AlgebraPair& A);

}  // namespace cpa::degen
