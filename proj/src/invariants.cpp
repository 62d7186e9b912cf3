#include "cpa/invariants.hpp"

#include <sstream>

namespace cpa {

bool DerivationResult::sampled_differs() const {
    for (const auto& [value, d] : sampled)
        if (d != dim) return true;
    return false;
}

namespace {

Matrix<RatFun> derivation_system(const AlgebraPair& A) {
    const std::size_t n = A.dim();
    Matrix<RatFun> m(0, n * n);
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (const Tensor* T : {&A.C, &A.D}) {
        if (T->is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec row(n * n);
                    for (std::size_t p = 0; p < n; ++p) {
                        if (!T->at(i, j, p).is_zero()) row[idx(p, k)] += T->at(i, j, p);
                        if (!T->at(p, j, k).is_zero()) row[idx(i, p)] -= T->at(p, j, k);
                        if (!T->at(i, p, k).is_zero()) row[idx(j, p)] -= T->at(i, p, k);
                    }
                    if (!is_zero_vector(row)) m.append_row(row);
                }
    }
    return m;
}

}  // namespace

DerivationResult derivations(const AlgebraPair& A, const std::vector<GaussRational>& samples) {
    const std::size_t n = A.dim();
    DerivationResult out;
    Matrix<RatFun> sys = derivation_system(A);
    std::vector<Vec> ker;
    if (sys.rows() == 0) {
        for (std::size_t q = 0; q < n * n; ++q) ker.push_back(unit_vector(n * n, q));
    } else {
        ker = kernel(sys);
    }
    out.dim = ker.size();
    for (const auto& v : ker) {
        Matrix<RatFun> D(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) D(j, i) = v[i * n + j];
        out.basis.push_back(std::move(D));
    }
    if (A.is_parametric()) {
        for (const auto& s : samples) {
            AlgebraPair B = A.substitute_a(RatFun(s));
            Matrix<RatFun> sb = derivation_system(B);
            out.sampled.emplace_back(s, n * n - (sb.rows() ? rank(sb) : 0));
        }
    }
    return out;
}

std::size_t derivation_dim(const AlgebraPair& A) {
    Matrix<RatFun> sys = derivation_system(A);
    return A.dim() * A.dim() - (sys.rows() ? rank(sys) : 0);
}

std::size_t orbit_dim(const AlgebraPair& A) { return A.dim() * A.dim() - derivation_dim(A); }

bool is_derivation(const AlgebraPair& A, const Matrix<RatFun>& D) {
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = unit_vector(n, i), ej = unit_vector(n, j);
            Vec Di = apply_map(D, ei), Dj = apply_map(D, ej);
            Vec r1 = apply_map(D, A.product(ei, ej)) - A.product(Di, ej) - A.product(ei, Dj);
            Vec r2 = apply_map(D, A.bracket(ei, ej)) - A.bracket(Di, ej) - A.bracket(ei, Dj);
            if (!is_zero_vector(r1) || !is_zero_vector(r2)) return false;
        }
    return true;
}

Vec apply_map(const Matrix<RatFun>& phi, const Vec& x) {
    if (phi.cols() != x.size()) throw DimensionMismatch("map and vector sizes differ");
    Vec r(phi.rows());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < phi.rows(); ++i)
            if (!phi(i, j).is_zero()) r[i] += phi(i, j) * x[j];
    }
    return r;
}

namespace {

bool preserves(const Matrix<RatFun>& phi, const AlgebraPair& A, const AlgebraPair& B, ProductMode mode) {
    const std::size_t n = A.dim();
    std::vector<Vec> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(apply_map(phi, unit_vector(n, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (mode != ProductMode::Bracket) {
                Vec lhs = apply_map(phi, A.C.basis_product(i, j));
                if (!is_zero_vector(lhs - B.product(images[i], images[j]))) return false;
            }
            if (mode != ProductMode::Dot && i != j) {
                Vec lhs = apply_map(phi, A.D.basis_product(i, j));
                if (!is_zero_vector(lhs - B.bracket(images[i], images[j]))) return false;
            }
        }
    return true;
}

}  // namespace

bool verify_iso(const Matrix<RatFun>& phi, const AlgebraPair& A, const AlgebraPair& B) {
    if (A.dim() != B.dim() || phi.rows() != A.dim() || phi.cols() != A.dim())
        throw DimensionMismatch("isomorphism witness dimensions do not match");
    if (rank(phi) < A.dim()) throw SingularWitness();
    return preserves(phi, A, B, ProductMode::Both);
}

bool is_automorphism(const Matrix<RatFun>& phi, const AlgebraPair& A, ProductMode mode) {
    if (phi.rows() != A.dim() || phi.cols() != A.dim()) throw DimensionMismatch("automorphism has wrong size");
    if (rank(phi) < A.dim()) return false;
    return preserves(phi, A, A, mode);
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "n=" << n << " ann=" << ann << " dot^2=" << dot_square << " br^2=" << bracket_square
       << " derived=" << derived << " der=" << der << " nilpotent=" << (nilpotent ? "yes" : "no");
    if (nilpotent) os << "(class " << nil_class << ")";
    os << " dot-nilpotent=" << (dot_nilpotent ? "yes" : "no") << " bracket-nilpotent=" << (bracket_nilpotent ? "yes" : "no")
       << " perfect(dot,br)=" << dot_perfect << "," << bracket_perfect;
    return os.str();
}

Fingerprint fingerprint(const AlgebraPair& A) {
    Fingerprint f;
    f.n = A.dim();
    f.ann = annihilator(A).dim();
    f.dot_square = square_dot(A).dim();
    f.bracket_square = square_bracket(A).dim();
    f.derived = derived(A).dim();
    f.der = derivation_dim(A);
    auto nil = is_nilpotent(A);
    f.nilpotent = nil.nilpotent;
    f.nil_class = nil.nil_class;
    f.dot_nilpotent = is_nilpotent(A, ProductMode::Dot).nilpotent;
    f.bracket_nilpotent = is_nilpotent(A, ProductMode::Bracket).nilpotent;
    auto perf = perfectness_checks(A);
    f.bracket_perfect = perf.bracket_perfect;
    f.dot_perfect = perf.dot_perfect;
    return f;
}

bool fingerprint_separates(const AlgebraPair& A, const AlgebraPair& B) { return !(fingerprint(A) == fingerprint(B)); }

bool SemicontinuityReport::any_violated() const {
    for (const auto& c : conditions)
        if (!c.holds) return true;
    return false;
}

std::vector<std::string> SemicontinuityReport::violated() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
        if (!c.holds) out.push_back(c.name);
    return out;
}

AlgebraPair dot_part(const AlgebraPair& A) { return AlgebraPair(A.C, Tensor(A.dim()), A.label + ".dot"); }

AlgebraPair bracket_part(const AlgebraPair& A) { return AlgebraPair(Tensor(A.dim()), A.D, A.label + ".bracket"); }

SemicontinuityReport semicontinuity_check(const AlgebraPair& source, const AlgebraPair& target) {
    if (source.dim() != target.dim()) throw DimensionMismatch("degeneration endpoints differ in dimension");
    SemicontinuityReport rep;
    Fingerprint s = fingerprint(source);
    Fingerprint t = fingerprint(target);
    auto num = [](std::size_t a, std::size_t b, const char* rel) {
        return std::to_string(a) + " " + rel + " " + std::to_string(b);
    };
    rep.conditions.push_back({"derivations", s.der <= t.der, num(s.der, t.der, "<=")});
    rep.conditions.push_back({"dot_square", s.dot_square >= t.dot_square, num(s.dot_square, t.dot_square, ">=")});
    rep.conditions.push_back(
        {"bracket_square", s.bracket_square >= t.bracket_square, num(s.bracket_square, t.bracket_square, ">=")});
    rep.conditions.push_back({"derived", s.derived >= t.derived, num(s.derived, t.derived, ">=")});
    rep.conditions.push_back({"annihilator", s.ann <= t.ann, num(s.ann, t.ann, "<=")});
    rep.conditions.push_back({"nilpotent", !s.nilpotent || t.nilpotent, "source nilpotent implies target nilpotent"});
    rep.conditions.push_back(
        {"dot_nilpotent", !s.dot_nilpotent || t.dot_nilpotent, "nilpotent dot in source implies nilpotent dot in target"});
    rep.conditions.push_back({"bracket_nilpotent", !s.bracket_nilpotent || t.bracket_nilpotent,
                              "nilpotent bracket in source implies nilpotent bracket in target"});
    if (s.nilpotent && t.nilpotent)
        rep.conditions.push_back(
            {"nilpotency_class", t.nil_class <= s.nil_class, num(t.nil_class, s.nil_class, "<=") + " (target vs source)"});
    std::size_t sd = derivation_dim(dot_part(source)), td = derivation_dim(dot_part(target));
    rep.conditions.push_back({"dot_component_derivations", sd <= td, num(sd, td, "<=")});
    std::size_t sb = derivation_dim(bracket_part(source)), tb = derivation_dim(bracket_part(target));
    rep.conditions.push_back({"bracket_component_derivations", sb <= tb, num(sb, tb, "<=")});
    return rep;
}

}  // namespace cpa
