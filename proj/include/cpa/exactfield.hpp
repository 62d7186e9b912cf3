#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpa {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class UndefinedValuation : public std::domain_error {
public:
    UndefinedValuation() : std::domain_error("valuation of the zero function is undefined") {}
};

class NegativeValuation : public std::domain_error {
public:
    explicit NegativeValuation(int v)
        : std::domain_error("limit at t = 0 diverges (valuation " + std::to_string(v) + ")"), valuation(v) {}
    int valuation;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational x, const GaussRational& y) { return x += y; }
    friend GaussRational operator-(GaussRational x, const GaussRational& y) { return x -= y; }
    friend GaussRational operator*(GaussRational x, const GaussRational& y) { return x *= y; }
    friend GaussRational operator/(GaussRational x, const GaussRational& y) { return x /= y; }
    friend bool operator==(const GaussRational& x, const GaussRational& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// Dense univariate polynomial in a over Q(i); index = degree.
class UPoly {
public:
    UPoly() = default;
    UPoly(GaussRational c);
    explicit UPoly(std::vector<GaussRational> coeffs);

    static UPoly var() { return UPoly(std::vector<GaussRational>{GaussRational(0), GaussRational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GaussRational& lead() const { return c_.back(); }
    GaussRational coeff(int d) const;
    const std::vector<GaussRational>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly x, const UPoly& y) { return x += y; }
    friend UPoly operator-(UPoly x, const UPoly& y) { return x -= y; }
    friend UPoly operator*(const UPoly& x, const UPoly& y);
    UPoly scaled(const GaussRational& s) const;
    friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

    UPoly monic() const;
    static std::pair<UPoly, UPoly> divmod(const UPoly& x, const UPoly& y);
    static UPoly gcd(UPoly x, UPoly y);
    static UPoly divexact(const UPoly& x, const UPoly& y);

private:
    void trim();
    std::vector<GaussRational> c_;
};

struct Term {
    int deg_a;
    int deg_t;
    GaussRational coeff;
};

// Polynomial in a and t over Q(i), stored as a list of coefficients in a per power of t.
class Poly2 {
public:
    Poly2() = default;
    Poly2(long c) : Poly2(GaussRational(c)) {}
    Poly2(const Rational& c) : Poly2(GaussRational(c)) {}
    Poly2(const GaussRational& c);
    Poly2(const UPoly& c);

    static Poly2 var_a();
    static Poly2 var_t();
    static Poly2 monomial(const GaussRational& c, int deg_a, int deg_t);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool depends_on_a() const;
    bool depends_on_t() const { return c_.size() > 1; }
    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    int deg_a() const;
    int ord_t() const;
    GaussRational coeff(int deg_a, int deg_t) const;
    const UPoly& t_coeff(int deg_t) const;
    const std::vector<UPoly>& t_coeffs() const { return c_; }
    std::vector<Term> terms() const;
    // Coefficient of the lex-largest monomial (highest t power, then highest a power).
    GaussRational leading_coeff() const;
    GaussRational constant_term() const { return coeff(0, 0); }

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 x, const Poly2& y) { return x += y; }
    friend Poly2 operator-(Poly2 x, const Poly2& y) { return x -= y; }
    friend Poly2 operator*(const Poly2& x, const Poly2& y);
    Poly2 scaled(const GaussRational& s) const;
    Poly2 scaled(const UPoly& s) const;
    Poly2 shift_t(int k) const;
    Poly2 pow(unsigned e) const;
    friend bool operator==(const Poly2& x, const Poly2& y) { return x.c_ == y.c_; }

    UPoly content() const;
    Poly2 divide_content(const UPoly& c) const;
    static Poly2 pseudo_remainder(Poly2 x, const Poly2& y);
    static Poly2 gcd(const Poly2& x, const Poly2& y);
    static Poly2 divexact(Poly2 x, const Poly2& y);

    std::string to_string() const;

private:
    explicit Poly2(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }
    void trim();
    std::vector<UPoly> c_;
};

// Reduced quotient of two Poly2 values with a normalized denominator.
class RatFun {
public:
    RatFun() = default;
    RatFun(long c) : num_(c) {}
    RatFun(const Rational& c) : num_(c) {}
    RatFun(const GaussRational& c) : num_(c) {}
    RatFun(Poly2 p) : num_(std::move(p)) {}
    RatFun(Poly2 num, Poly2 den);

    static RatFun a() { return RatFun(Poly2::var_a()); }
    static RatFun t() { return RatFun(Poly2::var_t()); }
    static RatFun i() { return RatFun(GaussRational::i()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    bool depends_on_a() const { return num_.depends_on_a() || den_.depends_on_a(); }
    bool depends_on_t() const { return num_.depends_on_t() || den_.depends_on_t(); }
    // Value of a constant function; throws std::logic_error otherwise.
    GaussRational constant_value() const;

    RatFun inverse() const;
    RatFun pow(int e) const;
    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
    friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
    friend RatFun operator*(RatFun x, const RatFun& y) { return x *= y; }
    friend RatFun operator/(RatFun x, const RatFun& y) { return x /= y; }
    friend bool operator==(const RatFun& x, const RatFun& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

    // Composition a := value (value may involve t).
    RatFun substitute_a(const RatFun& value) const;
    RatFun substitute_a(const GaussRational& value) const { return substitute_a(RatFun(value)); }
    // Composition t := value.
    RatFun substitute_t(const RatFun& value) const;

    std::string to_string() const;

private:
    void normalize();
    Poly2 num_{};
    Poly2 den_{1};
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

int valuation_t(const RatFun& f);
RatFun limit_t0(const RatFun& f);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool is_zero(const RatFun& x) { return x.is_zero(); }

}  // namespace cpa
