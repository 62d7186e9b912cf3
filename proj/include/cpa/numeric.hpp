#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <stdexcept>
#include <string>

#include "cpa/exactfield.hpp"
#include "cpa/exprlang.hpp"

namespace cpa {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) for values created in this scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long v) : re(v) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(Complex x, const Complex& y) { return x += y; }
    friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
    friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
    friend Complex operator/(Complex x, const Complex& y) { return x /= y; }

    bool is_zero() const { return re == 0 && im == 0; }
    std::string to_string(int digits = 20) const;
};

Real abs(const Complex& z);
Real to_real(const Rational& q);
Complex to_complex(const GaussRational& z);
Complex parse_complex(const std::string& text);

enum class Branch { Principal, RealOddRoots };

class DivideByZeroAtPoint : public std::domain_error {
public:
    explicit DivideByZeroAtPoint(const std::string& subtree)
        : std::domain_error("division by zero at the sample point in " + subtree), subtree(subtree) {}
    std::string subtree;
};

struct NumericContext {
    Complex value_a;
    Complex value_t;
    unsigned precision = 60;
    Branch branch = Branch::Principal;
};

struct EvalStats {
    int real_root_substitutions = 0;
};

// Fractional power z^q; RealOddRoots takes the real root of a negative real base when q has odd denominator.
Complex power(const Complex& z, const Rational& q, Branch branch, EvalStats* stats = nullptr);

// The caller sets the precision (PrecisionScope) before building ctx values.
Complex eval_numeric(const Expr& e, const NumericContext& ctx, EvalStats* stats = nullptr);
Complex eval_numeric(const RatFun& f, const Complex& a, const Complex& t);

}  // namespace cpa
