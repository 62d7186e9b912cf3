#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/algcore.hpp"

namespace cpa {

class SingularWitness : public std::domain_error {
public:
    SingularWitness() : std::domain_error("isomorphism witness is singular") {}
};

struct DerivationResult {
    std::size_t dim = 0;
    // Column convention: D(e_j) = sum_i basis[r](i, j) e_i.
    std::vector<Matrix<RatFun>> basis;
    std::vector<std::pair<GaussRational, std::size_t>> sampled;

    bool sampled_differs() const;
};

DerivationResult derivations(const AlgebraPair& A, const std::vector<GaussRational>& samples = {});
std::size_t derivation_dim(const AlgebraPair& A);
std::size_t orbit_dim(const AlgebraPair& A);
bool is_derivation(const AlgebraPair& A, const Matrix<RatFun>& D);

// Column convention: phi(e_j) = sum_i phi(i, j) e_i.
Vec apply_map(const Matrix<RatFun>& phi, const Vec& x);
bool verify_iso(const Matrix<RatFun>& phi, const AlgebraPair& A, const AlgebraPair& B);
bool is_automorphism(const Matrix<RatFun>& phi, const AlgebraPair& A, ProductMode mode = ProductMode::Both);

struct Fingerprint {
    std::size_t n = 0;
    std::size_t ann = 0;
    std::size_t dot_square = 0;
    std::size_t bracket_square = 0;
    std::size_t derived = 0;
    std::size_t der = 0;
    bool nilpotent = false;
    int nil_class = 0;
    bool dot_nilpotent = false;
    bool bracket_nilpotent = false;
    bool bracket_perfect = false;
    bool dot_perfect = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const AlgebraPair& A);
bool fingerprint_separates(const AlgebraPair& A, const AlgebraPair& B);

struct Condition {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct SemicontinuityReport {
    std::vector<Condition> conditions;
    bool any_violated() const;
    std::vector<std::string> violated() const;
};

// Necessary conditions for source -> target; a violated one rules the degeneration out.
SemicontinuityReport semicontinuity_check(const AlgebraPair& source, const AlgebraPair& target);

AlgebraPair dot_part(const AlgebraPair& A);
AlgebraPair bracket_part(const AlgebraPair& A);

}  // namespace cpa
