#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpa/algcore.hpp"
#include "cpa/cohomext.hpp"
#include "cpa/exprlang.hpp"

namespace cpa::catalog {

class UnknownLabel : public std::out_of_range {
public:
    explicit UnknownLabel(const std::string& label) : std::out_of_range("unknown catalog label '" + label + "'"), label(label) {}
    std::string label;
};

class ConstraintViolation : public std::invalid_argument {
public:
    explicit ConstraintViolation(const std::string& what) : std::invalid_argument(what) {}
};

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

struct Term {
    std::size_t index = 0;  // 0-based basis index
    Expr coeff;
};
using LinearCombination = std::vector<Term>;

// Splits "c1*e1 - c2*e3 + e4" into coefficient expressions per basis vector.
LinearCombination parse_linear(const std::string& text, std::size_t dim, const std::string& basis_name = "e");
Vec evaluate_linear(const LinearCombination& lc, std::size_t dim, const std::map<std::string, RatFun>& env);

enum class Kind { Pair, Single };

struct ProductLine {
    std::size_t i = 0;
    std::size_t j = 0;
    LinearCombination value;
};

struct CatalogEntry {
    std::string label;
    std::size_t dim = 0;
    std::vector<std::string> params;
    // Each expression must be nonzero at a binding.
    std::vector<Expr> nonzero;
    Kind kind = Kind::Pair;
    std::string provenance;
    std::vector<ProductLine> dots;
    std::vector<ProductLine> brackets;

    bool is_parametric() const { return !params.empty(); }
};

CatalogEntry parse_algebra(const std::string& text, const std::string& source = "<text>");
CatalogEntry read_algebra_file(const std::filesystem::path& path);

std::filesystem::path data_dir();
std::filesystem::path catalog_dir();

using Bindings = std::map<std::string, RatFun>;

const CatalogEntry& entry(const std::string& label);
// Unbound parameters stay symbolic.
AlgebraPair instantiate(const CatalogEntry& e, const Bindings& bindings = {});
SingleAlgebra instantiate_single(const CatalogEntry& e, const Bindings& bindings = {});
AlgebraPair load(const std::string& label, const Bindings& bindings = {});
SingleAlgebra load_single(const std::string& label, const Bindings& bindings = {});
// Accepts a label or a path to an .alg file.
CatalogEntry resolve(const std::string& label_or_path);

// Checks the recorded constraints at a value; symbolic values are checked generically.
bool admissible(const CatalogEntry& e, const RatFun& value);

struct Filter {
    std::optional<std::size_t> dim;
    std::optional<std::string> provenance;
    std::optional<bool> nilpotent;
};
std::vector<std::string> list(const Filter& filter = {});

// Parses "a*N12 + D13" (N_ij symmetric, D_ij antisymmetric) into a cocycle pair.
CocyclePair parse_cocycle(const std::string& text, std::size_t dim);

struct ExtensionSpec {
    std::string name;
    std::string base;
    Bindings base_bindings;
    std::string expect;
    std::optional<std::size_t> ann;
    std::vector<std::string> cocycles;
    std::string path;
};

ExtensionSpec parse_extension(const std::string& text, const std::string& source = "<text>");
ExtensionSpec read_extension_file(const std::filesystem::path& path);
std::vector<ExtensionSpec> load_extensions(const std::filesystem::path& dir = data_dir() / "extensions");
AlgebraPair base_of(const ExtensionSpec& spec);
AlgebraPair run_extension(const ExtensionSpec& spec);

// Renders an algebra in the .alg file format.
std::string render_algebra(const AlgebraPair& A, const std::string& provenance = "");

}  // namespace cpa::catalog
