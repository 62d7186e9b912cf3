#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cpa/exactfield.hpp"
#include "cpa/matrix.hpp"

namespace cpa {

using Vec = std::vector<RatFun>;

Vec unit_vector(std::size_t n, std::size_t i);
Vec zero_vector(std::size_t n);
bool is_zero_vector(const Vec& v);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec scale(const RatFun& s, const Vec& v);
std::string format_vector(const Vec& v);

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Structure constants of one bilinear product: e_i e_j = sum_k m(i,j,k) e_k.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::size_t n) : n_(n), v_(n * n * n) {}

    std::size_t dim() const { return n_; }
    RatFun& at(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * n_ + j) * n_ + k]; }
    const RatFun& at(std::size_t i, std::size_t j, std::size_t k) const { return v_[(i * n_ + j) * n_ + k]; }
    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec apply(const Vec& x, const Vec& y) const;
    bool is_zero() const;
    Tensor map(const std::function<RatFun(const RatFun&)>& f) const;
    const std::vector<RatFun>& raw() const { return v_; }
    friend bool operator==(const Tensor& x, const Tensor& y) { return x.n_ == y.n_ && x.v_ == y.v_; }

private:
    std::size_t n_ = 0;
    std::vector<RatFun> v_;
};

enum class FieldTag { Rational, Gaussian, FunctionField };

// A vector space with a commutative product (dot) and an anticommutative bracket.
class AlgebraPair {
public:
    AlgebraPair() = default;
    explicit AlgebraPair(std::size_t n, std::string label = "") : label(std::move(label)), C(n), D(n) {}
    AlgebraPair(Tensor c, Tensor d, std::string label = "");

    std::size_t dim() const { return C.dim(); }
    // Sets e_i * e_j and e_j * e_i.
    void set_dot(std::size_t i, std::size_t j, const Vec& v);
    // Sets {e_i, e_j} and {e_j, e_i} = -{e_i, e_j}.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v);

    Vec product(const Vec& x, const Vec& y) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    bool is_parametric() const;
    FieldTag field() const;
    AlgebraPair substitute_a(const RatFun& value) const;
    AlgebraPair map(const std::function<RatFun(const RatFun&)>& f) const;

    friend bool operator==(const AlgebraPair& x, const AlgebraPair& y) { return x.C == y.C && x.D == y.D; }

    std::string label;
    Tensor C;
    Tensor D;
};

// A single bilinear product with no symmetry assumption.
class SingleAlgebra {
public:
    SingleAlgebra() = default;
    explicit SingleAlgebra(std::size_t n, std::string label = "") : label(std::move(label)), M(n) {}
    std::size_t dim() const { return M.dim(); }
    Vec product(const Vec& x, const Vec& y) const { return M.apply(x, y); }

    std::string label;
    Tensor M;
};

struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    Vec residual;
};

struct IdentityReport {
    bool pass = true;
    std::vector<Violation> violations;

    void add(Violation v);
    void merge(const IdentityReport& other);
    bool violates(const std::string& identity) const;
    std::string summary(std::size_t max_lines = 10) const;
};

class PreconditionFailed : public std::logic_error {
public:
    explicit PreconditionFailed(const std::string& what) : std::logic_error(what) {}
};

IdentityReport check_cpa(const AlgebraPair& A);
IdentityReport check_derived_identities(const AlgebraPair& A, bool require_cpa = true);

AlgebraPair depolarize(const SingleAlgebra& m);
SingleAlgebra polarize(const AlgebraPair& A);

struct ABReport {
    IdentityReport A;
    IdentityReport B;
};
ABReport check_AB(const SingleAlgebra& m);

// Row-reduced basis; equal subspaces have equal representations.
class Subspace {
public:
    explicit Subspace(std::size_t n = 0) : n_(n), basis_(0, n) {}
    static Subspace span(std::size_t n, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t n);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    std::vector<Vec> basis() const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace substitute_a(const RatFun& value) const;
    std::string to_string() const;
    friend bool operator==(const Subspace& x, const Subspace& y) { return x.n_ == y.n_ && x.basis_ == y.basis_; }

private:
    std::size_t n_;
    Matrix<RatFun> basis_;
};

Subspace annihilator(const AlgebraPair& A);
Subspace square_dot(const AlgebraPair& A);
Subspace square_bracket(const AlgebraPair& A);
Subspace derived(const AlgebraPair& A);

enum class ProductMode { Both, Dot, Bracket };

struct Nilpotency {
    bool nilpotent = false;
    int nil_class = 0;
};
Nilpotency is_nilpotent(const AlgebraPair& A, ProductMode mode = ProductMode::Both);

struct Perfectness {
    bool bracket_perfect = false;
    bool dot_perfect = false;
    bool bracket_implication_holds = true;
    bool dot_implication_holds = true;
};
Perfectness perfectness_checks(const AlgebraPair& A);

// Left multiplication operators as matrices acting on column coordinate vectors.
Matrix<RatFun> left_dot(const AlgebraPair& A, const Vec& x);
Matrix<RatFun> left_bracket(const AlgebraPair& A, const Vec& x);

}  // namespace cpa
