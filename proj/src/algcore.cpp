#include "cpa/algcore.hpp"

#include <sstream>

namespace cpa {

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = RatFun(1);
    return v;
}

Vec zero_vector(std::size_t n) { return Vec(n); }

bool is_zero_vector(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector length mismatch");
    Vec r = x;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (!y[k].is_zero()) r[k] += y[k];
    return r;
}

Vec operator-(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector length mismatch");
    Vec r = x;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (!y[k].is_zero()) r[k] -= y[k];
    return r;
}

Vec scale(const RatFun& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) r[k] = s * v[k];
    return r;
}

std::string format_vector(const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (v[k].is_one())
            os << "e" << k + 1;
        else
            os << "(" << v[k].to_string() << ")*e" << k + 1;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- Tensor

Vec Tensor::basis_product(std::size_t i, std::size_t j) const {
    Vec r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = at(i, j, k);
    return r;
}

Vec Tensor::apply(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("vector length does not match algebra dimension");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            RatFun xy;
            bool have = false;
            for (std::size_t k = 0; k < n_; ++k) {
                const RatFun& c = at(i, j, k);
                if (c.is_zero()) continue;
                if (!have) {
                    xy = x[i] * y[j];
                    have = true;
                }
                r[k] += xy * c;
            }
        }
    }
    return r;
}

bool Tensor::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor Tensor::map(const std::function<RatFun(const RatFun&)>& f) const {
    Tensor r(n_);
    for (std::size_t k = 0; k < v_.size(); ++k)
        if (!v_[k].is_zero()) r.v_[k] = f(v_[k]);
    return r;
}

// ---------------------------------------------------------------- AlgebraPair

AlgebraPair::AlgebraPair(Tensor c, Tensor d, std::string l) : label(std::move(l)), C(std::move(c)), D(std::move(d)) {
    if (C.dim() != D.dim()) throw DimensionMismatch("product and bracket tensors differ in dimension");
}

void AlgebraPair::set_dot(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != dim()) throw DimensionMismatch("product value has wrong length");
    for (std::size_t k = 0; k < dim(); ++k) {
        C.at(i, j, k) = v[k];
        C.at(j, i, k) = v[k];
    }
}

void AlgebraPair::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != dim()) throw DimensionMismatch("bracket value has wrong length");
    if (i == j && !is_zero_vector(v)) throw std::invalid_argument("bracket of a basis vector with itself must vanish");
    for (std::size_t k = 0; k < dim(); ++k) {
        D.at(i, j, k) = v[k];
        D.at(j, i, k) = -v[k];
    }
}

Vec AlgebraPair::product(const Vec& x, const Vec& y) const { return C.apply(x, y); }

Vec AlgebraPair::bracket(const Vec& x, const Vec& y) const { return D.apply(x, y); }

bool AlgebraPair::is_parametric() const {
    for (const auto* T : {&C, &D})
        for (const auto& x : T->raw())
            if (x.depends_on_a()) return true;
    return false;
}

FieldTag AlgebraPair::field() const {
    bool gaussian = false;
    for (const auto* T : {&C, &D})
        for (const auto& x : T->raw()) {
            if (x.depends_on_a() || x.depends_on_t()) return FieldTag::FunctionField;
            if (!x.is_zero() && !x.constant_value().is_real()) gaussian = true;
        }
    return gaussian ? FieldTag::Gaussian : FieldTag::Rational;
}

AlgebraPair AlgebraPair::map(const std::function<RatFun(const RatFun&)>& f) const {
    return AlgebraPair(C.map(f), D.map(f), label);
}

AlgebraPair AlgebraPair::substitute_a(const RatFun& value) const {
    return map([&](const RatFun& x) { return x.substitute_a(value); });
}

// ---------------------------------------------------------------- reports

void IdentityReport::add(Violation v) {
    pass = false;
    violations.push_back(std::move(v));
}

void IdentityReport::merge(const IdentityReport& other) {
    for (const auto& v : other.violations) add(v);
}

bool IdentityReport::violates(const std::string& identity) const {
    for (const auto& v : violations)
        if (v.identity == identity) return true;
    return false;
}

std::string IdentityReport::summary(std::size_t max_lines) const {
    if (pass) return "PASS";
    std::ostringstream os;
    os << "FAIL (" << violations.size() << " violations)";
    for (std::size_t k = 0; k < violations.size() && k < max_lines; ++k) {
        const auto& v = violations[k];
        os << "\n  " << v.identity << " at (";
        for (std::size_t q = 0; q < v.indices.size(); ++q) os << (q ? "," : "") << v.indices[q] + 1;
        os << "): residual " << format_vector(v.residual);
    }
    return os.str();
}

namespace {

struct BasisTables {
    std::size_t n;
    std::vector<Vec> dot;
    std::vector<Vec> br;
    explicit BasisTables(const AlgebraPair& A) : n(A.dim()), dot(n * n), br(n * n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                dot[i * n + j] = A.C.basis_product(i, j);
                br[i * n + j] = A.D.basis_product(i, j);
            }
    }
    const Vec& d(std::size_t i, std::size_t j) const { return dot[i * n + j]; }
    const Vec& b(std::size_t i, std::size_t j) const { return br[i * n + j]; }
};

void report_if_nonzero(IdentityReport& rep, const char* name, std::vector<std::size_t> idx, const Vec& residual) {
    if (!is_zero_vector(residual)) rep.add({name, std::move(idx), residual});
}

}  // namespace

IdentityReport check_cpa(const AlgebraPair& A) {
    IdentityReport rep;
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec sym(n), anti(n);
            for (std::size_t k = 0; k < n; ++k) {
                sym[k] = A.C.at(i, j, k) - A.C.at(j, i, k);
                anti[k] = A.D.at(i, j, k) + A.D.at(j, i, k);
            }
            if (i < j) report_if_nonzero(rep, "commutativity", {i, j}, sym);
            if (i <= j) report_if_nonzero(rep, "anticommutativity", {i, j}, anti);
        }
    BasisTables T(A);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = unit_vector(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = unit_vector(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = unit_vector(n, k);
                if (i < j && j < k) {
                    Vec jac = A.bracket(ei, T.b(j, k)) + A.bracket(ej, T.b(k, i)) + A.bracket(ek, T.b(i, j));
                    report_if_nonzero(rep, "jacobi", {i, j, k}, jac);
                }
                // {x,y}.z = x.(y.z) - y.(x.z)
                Vec act = A.product(T.b(i, j), ek) - A.product(ei, T.d(j, k)) + A.product(ej, T.d(i, k));
                report_if_nonzero(rep, "bracket_action", {i, j, k}, act);
                // x.{y,z} = {x.y,z} + {y,x.z}
                Vec der = A.product(ei, T.b(j, k)) - A.bracket(T.d(i, j), ek) - A.bracket(ej, T.d(i, k));
                report_if_nonzero(rep, "dot_derivation", {i, j, k}, der);
            }
        }
    }
    return rep;
}

IdentityReport check_derived_identities(const AlgebraPair& A, bool require_cpa) {
    if (require_cpa) {
        auto base = check_cpa(A);
        if (!base.pass) throw PreconditionFailed("derived identities need a commutative post-Lie algebra: " + base.summary(3));
    }
    IdentityReport rep;
    const std::size_t n = A.dim();
    BasisTables T(A);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& xy = T.d(i, j);
            bool xy_zero = is_zero_vector(xy);
            for (std::size_t k = 0; k < n; ++k) {
                Vec xyz = A.product(xy, unit_vector(n, k));
                for (std::size_t l = 0; l < n; ++l) {
                    Vec el = unit_vector(n, l);
                    Vec medial = A.product(xy, T.d(k, l)) - A.product(T.d(i, k), T.d(j, l));
                    report_if_nonzero(rep, "medial", {i, j, k, l}, medial);
                    if (!xy_zero) {
                        Vec rc = A.product(xyz, el) - A.product(A.product(xy, el), unit_vector(n, k));
                        report_if_nonzero(rep, "right_commutative_square", {i, j, k, l}, rc);
                        report_if_nonzero(rep, "square_bracket", {i, j, k, l}, A.product(xy, T.b(k, l)));
                    }
                }
            }
        }
    std::vector<Vec> nested(n * n * n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e) nested[(c * n + d) * n + e] = A.bracket(unit_vector(n, c), T.b(d, e));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const Vec& ab = T.d(a, b);
            if (is_zero_vector(ab)) continue;
            for (std::size_t q = 0; q < nested.size(); ++q) {
                if (is_zero_vector(nested[q])) continue;
                Vec r = A.bracket(ab, nested[q]);
                report_if_nonzero(rep, "product_bracket_bracket", {a, b, q / (n * n), (q / n) % n, q % n}, r);
            }
        }
    return rep;
}

AlgebraPair depolarize(const SingleAlgebra& m) {
    const std::size_t n = m.dim();
    AlgebraPair out(n, m.label);
    const RatFun half(make_rational(1, 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const RatFun& x = m.M.at(i, j, k);
                const RatFun& y = m.M.at(j, i, k);
                out.C.at(i, j, k) = half * (x + y);
                out.D.at(i, j, k) = half * (x - y);
            }
    return out;
}

SingleAlgebra polarize(const AlgebraPair& A) {
    const std::size_t n = A.dim();
    SingleAlgebra m(n, A.label);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.M.at(i, j, k) = A.C.at(i, j, k) + A.D.at(i, j, k);
    return m;
}

ABReport check_AB(const SingleAlgebra& m) {
    ABReport rep;
    const std::size_t n = m.dim();
    auto p = [&](const Vec& x, const Vec& y) { return m.product(x, y); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                Vec a = p(p(x, y), z) - p(x, p(z, y)) + p(z, p(x, y)) - p(p(z, y), x);
                Vec two_yzx = p(y, p(z, x));
                Vec two_zyx = p(z, p(y, x));
                Vec b = p(p(y, z), x) - two_yzx - two_yzx + two_zyx + two_zyx - p(p(z, y), x);
                report_if_nonzero(rep.A, "identity_A", {i, j, k}, a);
                report_if_nonzero(rep.B, "identity_B", {i, j, k}, b);
            }
    return rep;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t n, const std::vector<Vec>& vectors) {
    Subspace s(n);
    Matrix<RatFun> m(0, n);
    for (const auto& v : vectors) {
        if (v.size() != n) throw DimensionMismatch("vector length does not match ambient dimension");
        if (!is_zero_vector(v)) m.append_row(v);
    }
    if (m.rows() > 0) s.basis_ = rref(m).reduced;
    return s;
}

Subspace Subspace::whole(std::size_t n) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector(n, i));
    return span(n, vs);
}

std::vector<Vec> Subspace::basis() const {
    std::vector<Vec> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
    return out;
}

bool Subspace::contains(const Vec& v) const {
    auto vs = basis();
    vs.push_back(v);
    return span(n_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& s) const {
    auto vs = basis();
    for (auto& v : s.basis()) vs.push_back(v);
    return span(n_, vs).dim() == dim();
}

Subspace Subspace::sum(const Subspace& o) const {
    auto vs = basis();
    for (auto& v : o.basis()) vs.push_back(v);
    return span(n_, vs);
}

namespace {

std::vector<Vec> orthogonal(const Subspace& s) {
    if (s.dim() == 0) return Subspace::whole(s.ambient()).basis();
    Matrix<RatFun> m(0, s.ambient());
    for (auto& v : s.basis()) m.append_row(v);
    return kernel(m);
}

}  // namespace

Subspace Subspace::intersect(const Subspace& o) const {
    auto rows = orthogonal(*this);
    for (auto& v : orthogonal(o)) rows.push_back(v);
    if (rows.empty()) return whole(n_);
    Matrix<RatFun> m(0, n_);
    for (auto& v : rows) m.append_row(v);
    return span(n_, kernel(m));
}

Subspace Subspace::substitute_a(const RatFun& value) const {
    std::vector<Vec> vs;
    for (auto& v : basis()) {
        Vec w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k].substitute_a(value);
        vs.push_back(w);
    }
    return span(n_, vs);
}

std::string Subspace::to_string() const {
    if (dim() == 0) return "0";
    std::string out = "<";
    bool first = true;
    for (auto& v : basis()) {
        out += (first ? "" : ", ") + format_vector(v);
        first = false;
    }
    return out + ">";
}

Subspace annihilator(const AlgebraPair& A) {
    const std::size_t n = A.dim();
    Matrix<RatFun> m(0, n);
    for (const auto* T : {&A.C, &A.D})
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = T->at(i, j, k);
                if (!is_zero_vector(row)) m.append_row(row);
            }
    if (m.rows() == 0) return Subspace::whole(n);
    return Subspace::span(n, kernel(m));
}

namespace {

Subspace image(const AlgebraPair& A, const Subspace& U, const Subspace& W, ProductMode mode) {
    std::vector<Vec> vs;
    for (auto& u : U.basis())
        for (auto& w : W.basis()) {
            if (mode != ProductMode::Bracket) vs.push_back(A.product(u, w));
            if (mode != ProductMode::Dot) vs.push_back(A.bracket(u, w));
        }
    return Subspace::span(A.dim(), vs);
}

}  // namespace

Subspace square_dot(const AlgebraPair& A) {
    Subspace all = Subspace::whole(A.dim());
    return image(A, all, all, ProductMode::Dot);
}

Subspace square_bracket(const AlgebraPair& A) {
    Subspace all = Subspace::whole(A.dim());
    return image(A, all, all, ProductMode::Bracket);
}

Subspace derived(const AlgebraPair& A) { return square_dot(A).sum(square_bracket(A)); }

Nilpotency is_nilpotent(const AlgebraPair& A, ProductMode mode) {
    const std::size_t n = A.dim();
    std::vector<Subspace> chain{Subspace(n), Subspace::whole(n)};
    for (int k = 1; k <= static_cast<int>(n) + 1; ++k) {
        if (chain[k].dim() == 0) return {true, k - 1};
        Subspace next(n);
        for (int i = 1; i <= k; ++i) next = next.sum(image(A, chain[i], chain[k + 1 - i], mode));
        if (next == chain[k]) return {false, 0};
        chain.push_back(next);
    }
    return {chain.back().dim() == 0, static_cast<int>(n) + 1};
}

Perfectness perfectness_checks(const AlgebraPair& A) {
    Perfectness p;
    const std::size_t n = A.dim();
    p.bracket_perfect = n > 0 && square_bracket(A).dim() == n;
    p.dot_perfect = n > 0 && square_dot(A).dim() == n;
    if (p.bracket_perfect) p.bracket_implication_holds = A.C.is_zero();
    if (p.dot_perfect) p.dot_implication_holds = A.D.is_zero();
    return p;
}

Matrix<RatFun> left_dot(const AlgebraPair& A, const Vec& x) {
    const std::size_t n = A.dim();
    Matrix<RatFun> L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = A.product(x, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) L(k, j) = col[k];
    }
    return L;
}

Matrix<RatFun> left_bracket(const AlgebraPair& A, const Vec& x) {
    const std::size_t n = A.dim();
    Matrix<RatFun> L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = A.bracket(x, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) L(k, j) = col[k];
    }
    return L;
}

}  // namespace cpa
