#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpa/algcore.hpp"
#include "cpa/invariants.hpp"

namespace cpa {

class NotAnAutomorphism : public std::invalid_argument {
public:
    NotAnAutomorphism() : std::invalid_argument("matrix is not an automorphism") {}
};

class NotACocycle : public std::invalid_argument {
public:
    explicit NotACocycle(const std::string& what) : std::invalid_argument(what) {}
};

// Antisymmetric A-valued bilinear map: theta(e_i, e_j) = sum_k B[k](i, j) e_k.
struct AlgForm {
    std::size_t n = 0;
    std::vector<Matrix<RatFun>> B;

    AlgForm() = default;
    explicit AlgForm(std::size_t n);
    static AlgForm from_bracket(const AlgebraPair& A);
    // Delta_{ij} (x) e_k with 1-based indices, as printed in tables.
    static AlgForm delta(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

    Vec eval(const Vec& x, const Vec& y) const;
    AlgForm operator+(const AlgForm& o) const;
    AlgForm scaled(const RatFun& s) const;
    bool is_zero() const;
    friend bool operator==(const AlgForm& x, const AlgForm& y) { return x.n == y.n && x.B == y.B; }
};

// Solution set of the two linear conditions: particular + span(homogeneous).
struct AffineFormSpace {
    std::optional<AlgForm> particular;
    std::vector<AlgForm> homogeneous;
    bool contains(const AlgForm& theta) const;
};

AffineFormSpace z2_fixed_dot_linear(const AlgebraPair& Adot);
bool jacobi_check(const AlgForm& theta);
AlgForm aut_action_fixed_dot(const AlgebraPair& Adot, const AlgForm& theta, const Matrix<RatFun>& phi);

enum class Symmetry { Symmetric, Antisymmetric };

struct BiFormScalar {
    Matrix<RatFun> m;
    Symmetry tag = Symmetry::Symmetric;

    BiFormScalar() = default;
    BiFormScalar(std::size_t n, Symmetry s) : m(n, n), tag(s) {}
    // nabla_{ij} and Delta_{ij} with 1-based indices.
    static BiFormScalar nabla(std::size_t n, std::size_t i, std::size_t j);
    static BiFormScalar delta(std::size_t n, std::size_t i, std::size_t j);
    RatFun eval(const Vec& x, const Vec& y) const;
    bool well_formed() const;
};

struct CocyclePair {
    BiFormScalar theta;
    BiFormScalar vartheta;

    CocyclePair() = default;
    explicit CocyclePair(std::size_t n) : theta(n, Symmetry::Symmetric), vartheta(n, Symmetry::Antisymmetric) {}
    std::size_t dim() const { return theta.m.rows(); }
    // Coordinates: nabla_ij (i <= j) in lex order, then Delta_ij (i < j) in lex order.
    Vec coords() const;
    static CocyclePair from_coords(std::size_t n, const Vec& v);
    CocyclePair operator+(const CocyclePair& o) const;
    CocyclePair scaled(const RatFun& s) const;
    std::string to_string() const;
};

std::string coordinate_name(std::size_t n, std::size_t index);

bool is_cocycle(const AlgebraPair& P, const CocyclePair& c);
std::vector<CocyclePair> z22(const AlgebraPair& P);
std::vector<CocyclePair> b22(const AlgebraPair& P);
std::size_t h22_dim(const AlgebraPair& P);

struct Cohomology {
    Subspace Z;
    Subspace B;
    std::size_t h_dim = 0;
    std::vector<CocyclePair> h_representatives;
};
Cohomology cohomology(const AlgebraPair& P);

Subspace rad(const std::vector<CocyclePair>& cs);
Subspace rad(const CocyclePair& c);

AlgebraPair extend(const AlgebraPair& P, const std::vector<CocyclePair>& cocycles, const std::string& label = "");

// Pullback (x, y) -> c(phi x, phi y) of every component, via phi^t A phi.
std::vector<CocyclePair> cocycle_matrix_action(const AlgebraPair& P, const std::vector<CocyclePair>& cs,
                                               const Matrix<RatFun>& phi);
// Component matrices B'_k = phi^t (sum_i phi(i,k) B_i) phi for an n-component form.
std::vector<Matrix<RatFun>> component_matrix_action(const std::vector<Matrix<RatFun>>& B, const Matrix<RatFun>& phi);

bool has_annihilator_component(const AlgebraPair& P, const std::vector<CocyclePair>& cs);

}  // namespace cpa
