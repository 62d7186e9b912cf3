#include "cpa/exactfield.hpp"

#include <algorithm>
#include <sstream>

namespace cpa {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
    if (sgn(q.get_den()) == 0) throw DivisionByZero();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- GaussRational

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussRational::to_string() const {
    if (sgn(im_) == 0) return cpa::to_string(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = cpa::to_string(im_) + "*i";
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + cpa::to_string(re_);
    if (sgn(im_) > 0) out += "+";
    return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(GaussRational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRational UPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return {};
    return c_[d];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& x, const UPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<GaussRational> r(x.c_.size() + y.c_.size() - 1);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const GaussRational& s) const {
    if (s.is_zero()) return {};
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inverse());
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& x, const UPoly& y) {
    if (y.is_zero()) throw DivisionByZero();
    if (x.degree() < y.degree()) return {UPoly(), x};
    std::vector<GaussRational> q(x.degree() - y.degree() + 1);
    std::vector<GaussRational> r = x.c_;
    GaussRational inv = y.lead().inverse();
    for (int k = x.degree() - y.degree(); k >= 0; --k) {
        GaussRational f = r[k + y.degree()] * inv;
        if (f.is_zero()) continue;
        for (int j = 0; j <= y.degree(); ++j) r[k + j] -= f * y.c_[j];
        q[k] = std::move(f);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(UPoly x, UPoly y) {
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly UPoly::divexact(const UPoly& x, const UPoly& y) {
    auto [q, r] = divmod(x, y);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(const GaussRational& c) {
    if (!c.is_zero()) c_.emplace_back(c);
}

Poly2::Poly2(const UPoly& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly2 Poly2::var_a() { return Poly2(UPoly::var()); }

Poly2 Poly2::var_t() { return monomial(GaussRational(1), 0, 1); }

Poly2 Poly2::monomial(const GaussRational& c, int deg_a, int deg_t) {
    if (c.is_zero()) return {};
    std::vector<GaussRational> a(deg_a + 1);
    a[deg_a] = c;
    std::vector<UPoly> r(deg_t + 1);
    r[deg_t] = UPoly(std::move(a));
    return Poly2(std::move(r));
}

void Poly2::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly2::is_one() const { return c_.size() == 1 && c_[0].degree() == 0 && c_[0].lead().is_one(); }

bool Poly2::is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].degree() == 0); }

bool Poly2::depends_on_a() const {
    return std::any_of(c_.begin(), c_.end(), [](const UPoly& u) { return u.degree() > 0; });
}

int Poly2::deg_a() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
}

int Poly2::ord_t() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    throw UndefinedValuation();
}

GaussRational Poly2::coeff(int deg_a, int deg_t) const {
    if (deg_t < 0 || deg_t >= static_cast<int>(c_.size())) return {};
    return c_[deg_t].coeff(deg_a);
}

const UPoly& Poly2::t_coeff(int deg_t) const {
    static const UPoly zero;
    if (deg_t < 0 || deg_t >= static_cast<int>(c_.size())) return zero;
    return c_[deg_t];
}

std::vector<Term> Poly2::terms() const {
    std::vector<Term> out;
    for (int dt = deg_t(); dt >= 0; --dt)
        for (int da = c_[dt].degree(); da >= 0; --da)
            if (!c_[dt].coeff(da).is_zero()) out.push_back({da, dt, c_[dt].coeff(da)});
    return out;
}

GaussRational Poly2::leading_coeff() const {
    if (c_.empty()) return {};
    return c_.back().lead();
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& u : r.c_) u = -u;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<UPoly> r(x.c_.size() + y.c_.size() - 1);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < y.c_.size(); ++j)
            if (!y.c_[j].is_zero()) r[i + j] += x.c_[i] * y.c_[j];
    }
    return Poly2(std::move(r));
}

Poly2 Poly2::scaled(const GaussRational& s) const {
    if (s.is_zero()) return {};
    Poly2 r = *this;
    for (auto& u : r.c_) u = u.scaled(s);
    return r;
}

Poly2 Poly2::scaled(const UPoly& s) const {
    if (s.is_zero()) return {};
    Poly2 r = *this;
    for (auto& u : r.c_) u = u * s;
    return r;
}

Poly2 Poly2::shift_t(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<UPoly> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly2(std::move(r));
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 result(1);
    Poly2 base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

UPoly Poly2::content() const {
    UPoly g;
    for (const auto& u : c_) {
        if (u.is_zero()) continue;
        g = UPoly::gcd(g, u);
        if (g.degree() == 0) break;
    }
    return g;
}

Poly2 Poly2::divide_content(const UPoly& c) const {
    if (c.degree() == 0) return scaled(c.lead().inverse());
    Poly2 r = *this;
    for (auto& u : r.c_)
        if (!u.is_zero()) u = UPoly::divexact(u, c);
    return r;
}

Poly2 Poly2::pseudo_remainder(Poly2 x, const Poly2& y) {
    if (y.is_zero()) throw DivisionByZero();
    const int dy = y.deg_t();
    const UPoly& lc = y.c_.back();
    while (!x.is_zero() && x.deg_t() >= dy) {
        UPoly lx = x.c_.back();
        int shift = x.deg_t() - dy;
        x = x.scaled(lc) - y.scaled(lx).shift_t(shift);
    }
    return x;
}

Poly2 Poly2::gcd(const Poly2& x, const Poly2& y) {
    if (x.is_zero() && y.is_zero()) return {};
    if (x.is_zero()) return y.scaled(y.leading_coeff().inverse());
    if (y.is_zero()) return x.scaled(x.leading_coeff().inverse());
    if (x.is_constant() || y.is_constant()) return Poly2(1);

    UPoly cx = x.content();
    UPoly cy = y.content();
    UPoly cg = UPoly::gcd(cx, cy);
    Poly2 p = x.divide_content(cx);
    Poly2 q = y.divide_content(cy);
    if (p.deg_t() < q.deg_t()) std::swap(p, q);

    Poly2 g(1);
    while (true) {
        if (q.deg_t() == 0) break;
        Poly2 r = pseudo_remainder(p, q);
        if (r.is_zero()) {
            g = q;
            break;
        }
        p = std::move(q);
        q = r.divide_content(r.content());
    }
    Poly2 out = g.scaled(cg);
    return out.scaled(out.leading_coeff().inverse());
}

Poly2 Poly2::divexact(Poly2 x, const Poly2& y) {
    if (y.is_zero()) throw DivisionByZero();
    if (y.is_constant()) return x.scaled(y.leading_coeff().inverse());
    const int dy = y.deg_t();
    const UPoly& ly = y.c_.back();
    std::vector<UPoly> q;
    while (!x.is_zero()) {
        int shift = x.deg_t() - dy;
        if (shift < 0) throw std::logic_error("inexact polynomial division");
        UPoly lq = UPoly::divexact(x.c_.back(), ly);
        if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1);
        q[shift] += lq;
        x -= y.scaled(lq).shift_t(shift);
    }
    return Poly2(std::move(q));
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms()) {
        GaussRational c = term.coeff;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (!c.is_real() && sgn(c.re()) == 0 && sgn(c.im()) < 0) negative = true;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string mono;
        auto append = [&](const std::string& s) { mono += mono.empty() ? s : "*" + s; };
        if (term.deg_a == 1) append("a");
        if (term.deg_a > 1) append("a^" + std::to_string(term.deg_a));
        if (term.deg_t == 1) append("t");
        if (term.deg_t > 1) append("t^" + std::to_string(term.deg_t));
        if (mono.empty())
            os << c.to_string();
        else if (c.is_one())
            os << mono;
        else
            os << c.to_string() << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly2 g = Poly2::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly2::divexact(num_, g);
            den_ = Poly2::divexact(den_, g);
        }
    }
    GaussRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

GaussRational RatFun::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
    return num_.constant_term();
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero();
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    GaussRational lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRational inv = lc.inverse();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly2 g1 = Poly2::gcd(num_, o.den_);
    Poly2 g2 = Poly2::gcd(o.num_, den_);
    Poly2 n1 = g1.is_one() ? num_ : Poly2::divexact(num_, g1);
    Poly2 d2 = g1.is_one() ? o.den_ : Poly2::divexact(o.den_, g1);
    Poly2 n2 = g2.is_one() ? o.num_ : Poly2::divexact(o.num_, g2);
    Poly2 d1 = g2.is_one() ? den_ : Poly2::divexact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    GaussRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

namespace {

RatFun eval_upoly(const UPoly& u, const RatFun& x) {
    RatFun acc;
    for (int d = u.degree(); d >= 0; --d) {
        acc *= x;
        acc += RatFun(u.coeff(d));
    }
    return acc;
}

GaussRational eval_upoly(const UPoly& u, const GaussRational& x) {
    GaussRational acc;
    for (int d = u.degree(); d >= 0; --d) {
        acc *= x;
        acc += u.coeff(d);
    }
    return acc;
}

RatFun eval_in_a(const Poly2& p, const RatFun& x) {
    if (x.is_constant()) {
        GaussRational v = x.constant_value();
        Poly2 out;
        for (int dt = 0; dt <= p.deg_t(); ++dt)
            out += Poly2::monomial(eval_upoly(p.t_coeff(dt), v), 0, dt);
        return RatFun(out);
    }
    RatFun out;
    RatFun tp(1);
    for (int dt = 0; dt <= p.deg_t(); ++dt) {
        if (!p.t_coeff(dt).is_zero()) out += eval_upoly(p.t_coeff(dt), x) * tp;
        if (dt < p.deg_t()) tp *= RatFun::t();
    }
    return out;
}

RatFun eval_in_t(const Poly2& p, const RatFun& x) {
    RatFun out;
    for (int dt = p.deg_t(); dt >= 0; --dt) {
        out *= x;
        out += RatFun(Poly2(p.t_coeff(dt)));
    }
    return out;
}

}  // namespace

RatFun RatFun::substitute_a(const RatFun& value) const {
    if (!depends_on_a()) return *this;
    RatFun n = eval_in_a(num_, value);
    RatFun d = eval_in_a(den_, value);
    return n / d;
}

RatFun RatFun::substitute_t(const RatFun& value) const {
    if (!depends_on_t()) return *this;
    return eval_in_t(num_, value) / eval_in_t(den_, value);
}

std::string RatFun::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const Poly2& p) {
        std::string s = p.to_string();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

int valuation_t(const RatFun& f) {
    if (f.is_zero()) throw UndefinedValuation();
    return f.num().ord_t() - f.den().ord_t();
}

RatFun limit_t0(const RatFun& f) {
    if (f.is_zero()) return {};
    int v = valuation_t(f);
    if (v > 0) return {};
    if (v < 0) throw NegativeValuation(v);
    return RatFun(Poly2(f.num().t_coeff(0)), Poly2(f.den().t_coeff(0)));
}

}  // namespace cpa
