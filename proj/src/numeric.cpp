#include "cpa/numeric.hpp"

#include <sstream>

namespace cpa {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    if (o.is_zero()) throw DivisionByZero();
    Real n = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / n;
    Real i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string Complex::to_string(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << re;
    if (im != 0) os << (im < 0 ? " - " : " + ") << boost::multiprecision::abs(im) << "*i";
    return os.str();
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Complex to_complex(const GaussRational& z) { return {to_real(z.re()), to_real(z.im())}; }

Complex parse_complex(const std::string& text) {
    auto plus = text.find_first_of("+-", 1);
    if (!text.empty() && text.back() == 'i' && plus != std::string::npos)
        return {Real(text.substr(0, plus)), Real(text.substr(plus, text.size() - plus - 1))};
    return {Real(text), Real(0)};
}

namespace {

Complex exp_c(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log_c(const Complex& z) { return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)}; }

Complex int_power(Complex z, long e) {
    if (e < 0) return Complex(1) / int_power(z, -e);
    Complex r(1);
    while (e > 0) {
        if (e & 1) r *= z;
        e >>= 1;
        if (e > 0) z *= z;
    }
    return r;
}

bool is_negative_real(const Complex& z) {
    if (z.re >= 0) return false;
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<long>(Real::default_precision()) + 5);
    return boost::multiprecision::abs(z.im) <= eps * boost::multiprecision::abs(z.re);
}

}  // namespace

Complex power(const Complex& z, const Rational& q, Branch branch, EvalStats* stats) {
    if (q.get_den() == 1) return int_power(z, q.get_num().get_si());
    if (z.is_zero()) {
        if (sgn(q) < 0) throw DivisionByZero();
        return Complex(0);
    }
    long p = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (branch == Branch::RealOddRoots && d % 2 == 1 && is_negative_real(z)) {
        if (stats) ++stats->real_root_substitutions;
        Real mag = boost::multiprecision::pow(boost::multiprecision::abs(z.re), to_real(q));
        return {p % 2 == 0 ? mag : Real(-mag), Real(0)};
    }
    Complex l = log_c(z);
    Real r = to_real(q);
    return exp_c({l.re * r, l.im * r});
}

Complex eval_numeric(const Expr& e, const NumericContext& ctx, EvalStats* stats) {
    switch (e.kind()) {
        case Expr::Kind::Const:
            return to_complex(e.value());
        case Expr::Kind::Var:
            if (e.name() == "a") return ctx.value_a;
            if (e.name() == "t") return ctx.value_t;
            throw std::invalid_argument("no numeric value for variable " + e.name());
        case Expr::Kind::Neg:
            return -eval_numeric(e.operand(), ctx, stats);
        case Expr::Kind::Pow: {
            Complex b = eval_numeric(e.lhs(), ctx, stats);
            if (b.is_zero() && sgn(e.exponent()) < 0) throw DivideByZeroAtPoint(print(e));
            return power(b, e.exponent(), ctx.branch, stats);
        }
        default: {
            Complex l = eval_numeric(e.lhs(), ctx, stats);
            Complex r = eval_numeric(e.rhs(), ctx, stats);
            switch (e.kind()) {
                case Expr::Kind::Add:
                    return l + r;
                case Expr::Kind::Sub:
                    return l - r;
                case Expr::Kind::Mul:
                    return l * r;
                default:
                    if (r.is_zero()) throw DivideByZeroAtPoint(print(e.rhs()));
                    return l / r;
            }
        }
    }
}

namespace {

Complex eval_poly(const Poly2& p, const Complex& a, const Complex& t) {
    Complex acc;
    for (int dt = p.deg_t(); dt >= 0; --dt) {
        acc *= t;
        const UPoly& u = p.t_coeff(dt);
        Complex inner;
        for (int da = u.degree(); da >= 0; --da) {
            inner *= a;
            inner += to_complex(u.coeff(da));
        }
        acc += inner;
    }
    return acc;
}

}  // namespace

Complex eval_numeric(const RatFun& f, const Complex& a, const Complex& t) {
    Complex d = eval_poly(f.den(), a, t);
    if (d.is_zero()) throw DivideByZeroAtPoint(f.to_string());
    return eval_poly(f.num(), a, t) / d;
}

}  // namespace cpa
