#pragma once

#include <string>
#include <vector>

#include "cpa/algcore.hpp"

namespace cpa::suite {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct Claim {
    std::string id;
    std::string anchor;
    std::string group;
    Status status = Status::Fail;
    std::string details;
    double seconds = 0;
};

struct SuiteResult {
    std::vector<Claim> claims;
    double seconds = 0;

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
    std::string to_text(bool verbose = false) const;
    std::string to_json() const;
};

// Groups in acceptance order: identities, depolarization, cohomology, extensions, orbits,
// degenerations, certificates, strict, perfectness, crossval.
const std::vector<std::string>& groups();
SuiteResult run(const std::vector<std::string>& only = {});
std::vector<Claim> run_group(const std::string& group);

// Dimension of the space of commutative products compatible with a fixed bracket (linear condition only),
// and whether any nonzero product in it also satisfies the quadratic condition.
struct CompatibleProducts {
    std::size_t linear_dim = 0;
    bool nonzero_solution = false;
    std::string method;
};
CompatibleProducts products_for_bracket(const AlgebraPair& bracket_only);

struct CompatibleBrackets {
    std::size_t linear_dim = 0;
    bool nonzero_solution = false;
};
CompatibleBrackets brackets_for_product(const AlgebraPair& product_only);

// Random rational functions in t (a fixed) whose exact limit is compared with numeric evaluation at t = 1e-8.
struct LimitCrossCheck {
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::size_t disagreements = 0;
    std::string first_failure;
};
LimitCrossCheck limit_cross_check(std::size_t count, unsigned seed = 20240611);

}  // namespace cpa::suite
