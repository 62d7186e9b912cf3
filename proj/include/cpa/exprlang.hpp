#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "cpa/exactfield.hpp"

namespace cpa {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

class UnknownIdentifier : public ParseError {
public:
    UnknownIdentifier(const std::string& name, std::size_t offset)
        : ParseError("unknown identifier '" + name + "'", offset), name(name) {}
    std::string name;
};

class NotRationalError : public std::domain_error {
public:
    NotRationalError() : std::domain_error("expression contains a fractional power") {}
};

class Expr {
public:
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow };

    static Expr constant(const GaussRational& v);
    static Expr var(const std::string& name);
    static Expr binary(Kind k, Expr lhs, Expr rhs);
    static Expr neg(Expr operand);
    static Expr pow(Expr base, const Rational& exponent);

    Kind kind() const;
    const GaussRational& value() const;
    const std::string& name() const;
    Expr lhs() const;
    Expr rhs() const;
    Expr operand() const;
    const Rational& exponent() const;

    bool uses(const std::string& var) const;
    bool has_fractional_power() const;

    friend Expr operator+(Expr x, Expr y) { return binary(Kind::Add, std::move(x), std::move(y)); }
    friend Expr operator-(Expr x, Expr y) { return binary(Kind::Sub, std::move(x), std::move(y)); }
    friend Expr operator*(Expr x, Expr y) { return binary(Kind::Mul, std::move(x), std::move(y)); }
    friend Expr operator/(Expr x, Expr y) { return binary(Kind::Div, std::move(x), std::move(y)); }
    Expr operator-() const { return neg(*this); }
    friend bool operator==(const Expr& x, const Expr& y);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct ParseOptions {
    // Accepts identifiers beyond a, t, i (e.g. structure-constant names).
    std::function<bool(const std::string&)> extra_identifier;
};

Expr parse(const std::string& text, const ParseOptions& options = {});
// Canonical printer; parse(print(e)) == e for constants that are rational or i.
std::string print(const Expr& e);

// Exact value, or nullopt when a fractional power remains.
std::optional<RatFun> lower(const Expr& e);
// Exact evaluation with variables bound to rational functions; throws NotRationalError.
RatFun evaluate(const Expr& e, const std::map<std::string, RatFun>& env);

Expr substitute(const Expr& e, const std::string& var, const Expr& value);
Expr reparametrize(const Expr& e, unsigned m);

}  // namespace cpa
