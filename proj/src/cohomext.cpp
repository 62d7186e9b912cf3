#include "cpa/cohomext.hpp"

#include <sstream>

namespace cpa {

// ---------------------------------------------------------------- algebra-valued forms

AlgForm::AlgForm(std::size_t n) : n(n), B(n, Matrix<RatFun>(n, n)) {}

AlgForm AlgForm::from_bracket(const AlgebraPair& A) {
    AlgForm f(A.dim());
    for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = 0; j < f.n; ++j)
            for (std::size_t k = 0; k < f.n; ++k) f.B[k](i, j) = A.D.at(i, j, k);
    return f;
}

AlgForm AlgForm::delta(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    AlgForm f(n);
    f.B.at(k - 1)(i - 1, j - 1) = RatFun(1);
    f.B.at(k - 1)(j - 1, i - 1) = RatFun(-1);
    return f;
}

Vec AlgForm::eval(const Vec& x, const Vec& y) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!B[k](i, j).is_zero()) r[k] += x[i] * y[j] * B[k](i, j);
        }
    }
    return r;
}

AlgForm AlgForm::operator+(const AlgForm& o) const {
    AlgForm r = *this;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.B[k](i, j) += o.B[k](i, j);
    return r;
}

AlgForm AlgForm::scaled(const RatFun& s) const {
    AlgForm r = *this;
    for (auto& m : r.B)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) *= s;
    return r;
}

bool AlgForm::is_zero() const {
    for (const auto& m : B)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) return false;
    return true;
}

namespace {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    // i < j, lex order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vec form_coords(const AlgForm& f) {
    const std::size_t n = f.n;
    Vec v(n * (n - 1) / 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) v[pair_index(n, i, j) * n + k] = f.B[k](i, j);
    return v;
}

AlgForm form_from_coords(std::size_t n, const Vec& v) {
    AlgForm f(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const RatFun& x = v[pair_index(n, i, j) * n + k];
                f.B[k](i, j) = x;
                f.B[k](j, i) = -x;
            }
    return f;
}

}  // namespace

bool AffineFormSpace::contains(const AlgForm& theta) const {
    if (!particular) return false;
    const std::size_t n = theta.n;
    Vec diff = form_coords(theta) - form_coords(*particular);
    if (is_zero_vector(diff)) return true;
    std::vector<Vec> vs;
    for (const auto& h : homogeneous) vs.push_back(form_coords(h));
    return Subspace::span(n * (n - 1) / 2 * n, vs).contains(diff);
}

AffineFormSpace z2_fixed_dot_linear(const AlgebraPair& Adot) {
    const std::size_t n = Adot.dim();
    AffineFormSpace out;
    const std::size_t N = n * (n - 1) / 2 * n;
    if (N == 0) {
        out.particular = AlgForm(n);
        return out;
    }
    auto u = [&](std::size_t i, std::size_t j, std::size_t k) { return pair_index(n, i, j) * n + k; };
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const RatFun& { return Adot.C.at(i, j, k); };
    // theta(e_p, e_q)_m contributes sign * u(min, max, m)
    auto add_theta = [&](Vec& row, std::size_t p, std::size_t q, std::size_t m, const RatFun& coeff) {
        if (p == q || coeff.is_zero()) return;
        if (p < q)
            row[u(p, q, m)] += coeff;
        else
            row[u(q, p, m)] -= coeff;
    };
    Matrix<RatFun> aug(0, N + 1);
    auto push = [&](Vec row) {
        if (!is_zero_vector(row)) aug.append_row(row);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vec rhs = Adot.product(unit_vector(n, i), Adot.C.basis_product(j, l)) -
                          Adot.product(unit_vector(n, j), Adot.C.basis_product(i, l));
                for (std::size_t m = 0; m < n; ++m) {
                    Vec row(N + 1);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!c(k, l, m).is_zero()) row[u(i, j, k)] += c(k, l, m);
                    row[N] = rhs[m];
                    push(row);
                }
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z)
                for (std::size_t m = 0; m < n; ++m) {
                    Vec row(N + 1);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!c(x, k, m).is_zero()) row[u(y, z, k)] += c(x, k, m);
                    for (std::size_t p = 0; p < n; ++p) {
                        add_theta(row, p, z, m, -c(x, y, p));
                        add_theta(row, y, p, m, -c(x, z, p));
                    }
                    push(row);
                }
    if (aug.rows() == 0) {
        out.particular = AlgForm(n);
        for (std::size_t q = 0; q < N; ++q) out.homogeneous.push_back(form_from_coords(n, unit_vector(N, q)));
        return out;
    }
    auto rr = rref(aug);
    bool consistent = rr.pivots.empty() || rr.pivots.back() != N;
    if (consistent) {
        Vec part(N);
        for (std::size_t r = 0; r < rr.rank; ++r) part[rr.pivots[r]] = rr.reduced(r, N);
        out.particular = form_from_coords(n, part);
    }
    Matrix<RatFun> hom(aug.rows(), N);
    for (std::size_t r = 0; r < aug.rows(); ++r)
        for (std::size_t q = 0; q < N; ++q) hom(r, q) = aug(r, q);
    for (auto& v : kernel(hom)) out.homogeneous.push_back(form_from_coords(n, v));
    return out;
}

bool jacobi_check(const AlgForm& theta) {
    const std::size_t n = theta.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                Vec r = theta.eval(x, theta.eval(y, z)) - theta.eval(theta.eval(x, y), z) - theta.eval(y, theta.eval(x, z));
                if (!is_zero_vector(r)) return false;
            }
    return true;
}

AlgForm aut_action_fixed_dot(const AlgebraPair& Adot, const AlgForm& theta, const Matrix<RatFun>& phi) {
    if (!is_automorphism(phi, Adot, ProductMode::Dot)) throw NotAnAutomorphism();
    const std::size_t n = Adot.dim();
    Matrix<RatFun> inv = invert(phi);
    AlgForm out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = apply_map(inv, theta.eval(apply_map(phi, unit_vector(n, i)), apply_map(phi, unit_vector(n, j))));
            for (std::size_t k = 0; k < n; ++k) out.B[k](i, j) = v[k];
        }
    return out;
}

// ---------------------------------------------------------------- scalar cocycles

BiFormScalar BiFormScalar::nabla(std::size_t n, std::size_t i, std::size_t j) {
    BiFormScalar f(n, Symmetry::Symmetric);
    f.m(i - 1, j - 1) = RatFun(1);
    f.m(j - 1, i - 1) = RatFun(1);
    return f;
}

BiFormScalar BiFormScalar::delta(std::size_t n, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("Delta_ii is not defined");
    BiFormScalar f(n, Symmetry::Antisymmetric);
    f.m(i - 1, j - 1) = RatFun(1);
    f.m(j - 1, i - 1) = RatFun(-1);
    return f;
}

RatFun BiFormScalar::eval(const Vec& x, const Vec& y) const {
    RatFun r;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !m(i, j).is_zero()) r += x[i] * y[j] * m(i, j);
    }
    return r;
}

bool BiFormScalar::well_formed() const {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (tag == Symmetry::Symmetric && !(m(i, j) == m(j, i))) return false;
            if (tag == Symmetry::Antisymmetric && !(m(i, j) == -m(j, i))) return false;
        }
    return true;
}

namespace {

std::size_t nabla_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - (i * (i - 1)) / 2 + (j - i);
}

std::size_t sym_count(std::size_t n) { return n * (n + 1) / 2; }

std::size_t delta_index(std::size_t n, std::size_t i, std::size_t j) { return sym_count(n) + pair_index(n, i, j); }

}  // namespace

Vec CocyclePair::coords() const {
    const std::size_t n = dim();
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) v[nabla_index(n, i, j)] = theta.m(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) v[delta_index(n, i, j)] = vartheta.m(i, j);
    return v;
}

CocyclePair CocyclePair::from_coords(std::size_t n, const Vec& v) {
    if (v.size() != n * n) throw DimensionMismatch("cocycle coordinate vector has wrong length");
    CocyclePair c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            c.theta.m(i, j) = v[nabla_index(n, i, j)];
            c.theta.m(j, i) = v[nabla_index(n, i, j)];
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            c.vartheta.m(i, j) = v[delta_index(n, i, j)];
            c.vartheta.m(j, i) = -v[delta_index(n, i, j)];
        }
    return c;
}

CocyclePair CocyclePair::operator+(const CocyclePair& o) const {
    return from_coords(dim(), coords() + o.coords());
}

CocyclePair CocyclePair::scaled(const RatFun& s) const { return from_coords(dim(), scale(s, coords())); }

std::string coordinate_name(std::size_t n, std::size_t index) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (nabla_index(n, i, j) == index) return "N" + std::to_string(i + 1) + std::to_string(j + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (delta_index(n, i, j) == index) return "D" + std::to_string(i + 1) + std::to_string(j + 1);
    throw std::out_of_range("cocycle coordinate index out of range");
}

std::string CocyclePair::to_string() const {
    const std::size_t n = dim();
    Vec v = coords();
    auto part = [&](std::size_t lo, std::size_t hi) {
        std::string s;
        for (std::size_t q = lo; q < hi; ++q) {
            if (v[q].is_zero()) continue;
            std::string coeff = v[q].is_one() ? "" : "(" + v[q].to_string() + ")*";
            s += (s.empty() ? "" : " + ") + coeff + coordinate_name(n, q);
        }
        return s.empty() ? std::string("0") : s;
    };
    return "(" + part(0, sym_count(n)) + ", " + part(sym_count(n), n * n) + ")";
}

namespace {

// Linear rows over cocycle coordinates for theta(x, y) and vartheta(x, y).
void add_theta_row(Vec& row, std::size_t n, const Vec& x, const Vec& y, const RatFun& s) {
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero()) row[nabla_index(n, i, j)] += s * x[i] * y[j];
    }
}

void add_vartheta_row(Vec& row, std::size_t n, const Vec& x, const Vec& y, const RatFun& s) {
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            if (i < j)
                row[delta_index(n, i, j)] += s * x[i] * y[j];
            else
                row[delta_index(n, j, i)] -= s * x[i] * y[j];
        }
    }
}

Matrix<RatFun> cocycle_system(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    Matrix<RatFun> m(0, n * n);
    const RatFun one(1), minus(-1);
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto push = [&](const Vec& row) {
        if (!is_zero_vector(row)) m.append_row(row);
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                Vec row(n * n);
                add_vartheta_row(row, n, P.D.basis_product(x, y), e(z), one);
                add_vartheta_row(row, n, P.D.basis_product(y, z), e(x), one);
                add_vartheta_row(row, n, P.D.basis_product(z, x), e(y), one);
                push(row);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec row(n * n);
                add_theta_row(row, n, P.D.basis_product(x, y), e(z), one);
                add_theta_row(row, n, e(x), P.C.basis_product(y, z), minus);
                add_theta_row(row, n, e(y), P.C.basis_product(x, z), one);
                push(row);
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                Vec row(n * n);
                add_theta_row(row, n, e(x), P.D.basis_product(y, z), one);
                add_vartheta_row(row, n, P.C.basis_product(x, y), e(z), minus);
                add_vartheta_row(row, n, e(y), P.C.basis_product(x, z), minus);
                push(row);
            }
    return m;
}

Subspace z_space(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    Matrix<RatFun> sys = cocycle_system(P);
    if (sys.rows() == 0) return Subspace::whole(n * n);
    return Subspace::span(n * n, kernel(sys));
}

std::vector<Vec> coboundary_generators(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    std::vector<Vec> out;
    for (std::size_t k = 0; k < n; ++k) {
        CocyclePair c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                c.theta.m(i, j) = P.C.at(i, j, k);
                c.vartheta.m(i, j) = P.D.at(i, j, k);
            }
        out.push_back(c.coords());
    }
    return out;
}

}  // namespace

bool is_cocycle(const AlgebraPair& P, const CocyclePair& c) {
    if (c.dim() != P.dim()) throw DimensionMismatch("cocycle and algebra differ in dimension");
    if (!c.theta.well_formed() || !c.vartheta.well_formed()) return false;
    Matrix<RatFun> sys = cocycle_system(P);
    Vec v = c.coords();
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        RatFun acc;
        for (std::size_t q = 0; q < v.size(); ++q)
            if (!v[q].is_zero() && !sys(r, q).is_zero()) acc += sys(r, q) * v[q];
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<CocyclePair> z22(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    Matrix<RatFun> sys = cocycle_system(P);
    std::vector<CocyclePair> out;
    if (sys.rows() == 0) {
        for (std::size_t q = 0; q < n * n; ++q) out.push_back(CocyclePair::from_coords(n, unit_vector(n * n, q)));
        return out;
    }
    for (auto& v : kernel(sys)) out.push_back(CocyclePair::from_coords(n, v));
    return out;
}

std::vector<CocyclePair> b22(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    std::vector<CocyclePair> out;
    for (auto& v : Subspace::span(n * n, coboundary_generators(P)).basis()) out.push_back(CocyclePair::from_coords(n, v));
    return out;
}

Cohomology cohomology(const AlgebraPair& P) {
    const std::size_t n = P.dim();
    Cohomology h;
    h.Z = z_space(P);
    h.B = Subspace::span(n * n, coboundary_generators(P));
    if (!h.Z.contains(h.B)) throw std::logic_error("coboundaries are not cocycles for " + P.label);
    h.h_dim = h.Z.dim() - h.B.dim();
    Subspace acc = h.B;
    std::vector<Vec> zbasis;
    for (auto& c : z22(P)) zbasis.push_back(c.coords());
    for (auto& v : zbasis) {
        if (acc.contains(v)) continue;
        h.h_representatives.push_back(CocyclePair::from_coords(n, v));
        acc = acc.sum(Subspace::span(n * n, {v}));
    }
    return h;
}

std::size_t h22_dim(const AlgebraPair& P) { return cohomology(P).h_dim; }

Subspace rad(const std::vector<CocyclePair>& cs) {
    if (cs.empty()) throw std::invalid_argument("radical of an empty cocycle list");
    const std::size_t n = cs.front().dim();
    Matrix<RatFun> m(0, n);
    for (const auto& c : cs)
        for (const auto* f : {&c.theta, &c.vartheta})
            for (std::size_t j = 0; j < n; ++j) {
                Vec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = f->m(i, j);
                if (!is_zero_vector(row)) m.append_row(row);
            }
    if (m.rows() == 0) return Subspace::whole(n);
    return Subspace::span(n, kernel(m));
}

Subspace rad(const CocyclePair& c) { return rad(std::vector<CocyclePair>{c}); }

AlgebraPair extend(const AlgebraPair& P, const std::vector<CocyclePair>& cocycles, const std::string& label) {
    const std::size_t n = P.dim();
    const std::size_t s = cocycles.size();
    for (std::size_t l = 0; l < s; ++l)
        if (!is_cocycle(P, cocycles[l]))
            throw NotACocycle("component " + std::to_string(l + 1) + " " + cocycles[l].to_string() + " is not a cocycle");
    AlgebraPair E(n + s, label.empty() ? P.label + "+ext" : label);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                E.C.at(i, j, k) = P.C.at(i, j, k);
                E.D.at(i, j, k) = P.D.at(i, j, k);
            }
            for (std::size_t l = 0; l < s; ++l) {
                E.C.at(i, j, n + l) = cocycles[l].theta.m(i, j);
                E.D.at(i, j, n + l) = cocycles[l].vartheta.m(i, j);
            }
        }
    auto report = check_cpa(E);
    if (!report.pass) throw std::logic_error("extension is not a commutative post-Lie algebra: " + report.summary(3));
    if (s > 0) {
        Subspace inner = rad(cocycles).intersect(annihilator(P));
        std::vector<Vec> expected;
        for (auto& v : inner.basis()) {
            Vec w(n + s);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
            expected.push_back(w);
        }
        for (std::size_t l = 0; l < s; ++l) expected.push_back(unit_vector(n + s, n + l));
        if (!(Subspace::span(n + s, expected) == annihilator(E)))
            throw std::logic_error("annihilator of the extension differs from (Rad cap Ann) + V");
    }
    return E;
}

namespace {

Matrix<RatFun> congruence(const Matrix<RatFun>& phi, const Matrix<RatFun>& A) { return phi.transpose() * A * phi; }

}  // namespace

std::vector<CocyclePair> cocycle_matrix_action(const AlgebraPair& P, const std::vector<CocyclePair>& cs,
                                               const Matrix<RatFun>& phi) {
    if (!is_automorphism(phi, P)) throw NotAnAutomorphism();
    std::vector<CocyclePair> out;
    for (const auto& c : cs) {
        CocyclePair r(c.dim());
        r.theta.m = congruence(phi, c.theta.m);
        r.vartheta.m = congruence(phi, c.vartheta.m);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Matrix<RatFun>> component_matrix_action(const std::vector<Matrix<RatFun>>& B, const Matrix<RatFun>& phi) {
    const std::size_t n = phi.rows();
    if (B.size() != n) throw DimensionMismatch("need one component matrix per basis vector");
    std::vector<Matrix<RatFun>> out;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<RatFun> mix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (phi(i, k).is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (!B[i](p, q).is_zero()) mix(p, q) += phi(i, k) * B[i](p, q);
        }
        out.push_back(congruence(phi, mix));
    }
    return out;
}

bool has_annihilator_component(const AlgebraPair& P, const std::vector<CocyclePair>& cs) {
    const std::size_t n = P.dim();
    Subspace B = Subspace::span(n * n, coboundary_generators(P));
    std::vector<Vec> vs = B.basis();
    for (const auto& c : cs) vs.push_back(c.coords());
    return Subspace::span(n * n, vs).dim() < B.dim() + cs.size();
}

}  // namespace cpa
