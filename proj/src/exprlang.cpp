#include "cpa/exprlang.hpp"

#include <cctype>
#include <vector>

namespace cpa {

struct Expr::Node {
    Kind kind;
    GaussRational value;
    std::string name;
    Rational exponent;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

Expr Expr::constant(const GaussRational& v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = v;
    return Expr(n);
}

Expr Expr::var(const std::string& name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = name;
    return Expr(n);
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return Expr(n);
}

Expr Expr::neg(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = std::move(operand.node_);
    return Expr(n);
}

Expr Expr::pow(Expr base, const Rational& exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->a = std::move(base.node_);
    n->exponent = exponent;
    return Expr(n);
}

Expr::Kind Expr::kind() const { return node_->kind; }
const GaussRational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const Rational& Expr::exponent() const { return node_->exponent; }

Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }
Expr Expr::operand() const { return Expr(node_->a); }

bool operator==(const Expr& x, const Expr& y) {
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case Expr::Kind::Const:
            return x.value() == y.value();
        case Expr::Kind::Var:
            return x.name() == y.name();
        case Expr::Kind::Neg:
            return x.operand() == y.operand();
        case Expr::Kind::Pow:
            return x.exponent() == y.exponent() && x.lhs() == y.lhs();
        default:
            return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    }
}

bool Expr::uses(const std::string& var) const {
    switch (kind()) {
        case Kind::Const:
            return false;
        case Kind::Var:
            return name() == var;
        case Kind::Neg:
        case Kind::Pow:
            return Expr(node_->a).uses(var);
        default:
            return Expr(node_->a).uses(var) || Expr(node_->b).uses(var);
    }
}

bool Expr::has_fractional_power() const {
    switch (kind()) {
        case Kind::Const:
        case Kind::Var:
            return false;
        case Kind::Neg:
            return Expr(node_->a).has_fractional_power();
        case Kind::Pow:
            return exponent().get_den() != 1 || Expr(node_->a).has_fractional_power();
        default:
            return Expr(node_->a).has_fractional_power() || Expr(node_->b).has_fractional_power();
    }
}

// ---------------------------------------------------------------- parser

namespace {

struct Token {
    enum class Type { Number, Ident, Op, End } type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        unsigned char ch = s[k];
        if (std::isspace(ch)) {
            ++k;
            continue;
        }
        std::size_t start = k;
        if (std::isdigit(ch)) {
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k + 1 < s.size() && s[k] == '/' && std::isdigit(static_cast<unsigned char>(s[k + 1]))) {
                ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            }
            out.push_back({Token::Type::Number, s.substr(start, k - start), start});
        } else if (std::isalpha(ch) || ch == '_') {
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
            out.push_back({Token::Type::Ident, s.substr(start, k - start), start});
        } else if (std::string("+-*/^()").find(static_cast<char>(ch)) != std::string::npos) {
            out.push_back({Token::Type::Op, std::string(1, static_cast<char>(ch)), start});
            ++k;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", start);
        }
    }
    out.push_back({Token::Type::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const ParseOptions& options) : toks_(tokenize(text)), options_(options) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().type != Token::Type::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* op) const { return peek().type == Token::Type::Op && peek().text == op; }
    void expect(const char* op) {
        if (!is_op(op)) throw ParseError(std::string("expected '") + op + "'", peek().offset);
        ++pos_;
    }

    Expr expr() {
        Expr e = term();
        while (is_op("+") || is_op("-")) {
            bool plus = is_op("+");
            ++pos_;
            Expr r = term();
            e = Expr::binary(plus ? Expr::Kind::Add : Expr::Kind::Sub, e, r);
        }
        return e;
    }

    bool starts_base() const {
        return peek().type == Token::Type::Number || peek().type == Token::Type::Ident || is_op("(");
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            if (is_op("*") || is_op("/")) {
                bool mul = is_op("*");
                ++pos_;
                Expr r = factor();
                e = Expr::binary(mul ? Expr::Kind::Mul : Expr::Kind::Div, e, r);
            } else if (starts_base()) {
                Expr r = factor();
                e = Expr::binary(Expr::Kind::Mul, e, r);
            } else {
                return e;
            }
        }
    }

    Expr factor() {
        if (is_op("-")) {
            ++pos_;
            if (peek().type == Token::Type::Number &&
                !(toks_[pos_ + 1].type == Token::Type::Op && toks_[pos_ + 1].text == "^")) {
                Rational q = number();
                return Expr::constant(GaussRational(-q));
            }
            return Expr::neg(factor());
        }
        Expr b = base();
        if (is_op("^")) {
            ++pos_;
            return Expr::pow(b, exponent());
        }
        return b;
    }

    Rational number() {
        const Token& tk = peek();
        if (tk.type != Token::Type::Number) throw ParseError("expected a number", tk.offset);
        ++pos_;
        Rational q = parse_rational(tk.text);
        return q;
    }

    Rational exponent() {
        if (is_op("(")) {
            ++pos_;
            bool negative = false;
            if (is_op("-")) {
                negative = true;
                ++pos_;
            }
            Rational q = number();
            if (is_op("/")) {
                ++pos_;
                Rational d = number();
                if (sgn(d) == 0) throw ParseError("zero denominator in exponent", peek().offset);
                q /= d;
            }
            expect(")");
            return negative ? Rational(-q) : q;
        }
        bool negative = false;
        if (is_op("-")) {
            negative = true;
            ++pos_;
        }
        std::size_t at = peek().offset;
        Rational q = number();
        if (q.get_den() != 1) throw ParseError("fractional exponents must be parenthesized", at);
        return negative ? Rational(-q) : q;
    }

    Expr base() {
        const Token tk = peek();
        if (tk.type == Token::Type::Number) return Expr::constant(GaussRational(number()));
        if (tk.type == Token::Type::Op && tk.text == "(") {
            ++pos_;
            Expr e = expr();
            expect(")");
            return e;
        }
        if (tk.type == Token::Type::Ident) {
            ++pos_;
            if (tk.text == "sqrt" || tk.text == "cbrt") {
                expect("(");
                Expr e = expr();
                expect(")");
                return Expr::pow(e, tk.text == "sqrt" ? Rational(1, 2) : Rational(1, 3));
            }
            if (tk.text == "i") return Expr::constant(GaussRational::i());
            if (tk.text == "a" || tk.text == "t") return Expr::var(tk.text);
            if (options_.extra_identifier && options_.extra_identifier(tk.text)) return Expr::var(tk.text);
            throw UnknownIdentifier(tk.text, tk.offset);
        }
        if (tk.type == Token::Type::End) throw ParseError("unexpected end of input", tk.offset);
        throw ParseError("unexpected '" + tk.text + "'", tk.offset);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& options_;
};

}  // namespace

Expr parse(const std::string& text, const ParseOptions& options) {
    Parser p(text, options);
    return p.parse_all();
}

std::string print(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Const: {
            const GaussRational& v = e.value();
            if (v.is_real()) {
                std::string s = to_string(v.re());
                return sgn(v.re()) < 0 ? "(" + s + ")" : s;
            }
            return "(" + v.to_string() + ")";
        }
        case Expr::Kind::Var:
            return e.name();
        case Expr::Kind::Neg:
            return "(-(" + print(e.operand()) + "))";
        case Expr::Kind::Pow: {
            Rational q = e.exponent();
            std::string b = "(" + print(e.lhs()) + ")^";
            if (q.get_den() == 1 && sgn(q) >= 0) return b + to_string(q);
            return b + "(" + to_string(q) + ")";
        }
        default: {
            const char* op = e.kind() == Expr::Kind::Add   ? " + "
                             : e.kind() == Expr::Kind::Sub ? " - "
                             : e.kind() == Expr::Kind::Mul ? " * "
                                                           : " / ";
            Expr l = e.lhs();
            Expr r = e.rhs();
            return "(" + print(l) + op + print(r) + ")";
        }
    }
}

RatFun evaluate(const Expr& e, const std::map<std::string, RatFun>& env) {
    switch (e.kind()) {
        case Expr::Kind::Const:
            return RatFun(e.value());
        case Expr::Kind::Var: {
            auto it = env.find(e.name());
            if (it == env.end()) throw std::invalid_argument("unbound variable " + e.name());
            return it->second;
        }
        case Expr::Kind::Neg:
            return -evaluate(e.operand(), env);
        case Expr::Kind::Pow: {
            const Rational& q = e.exponent();
            if (q.get_den() != 1) throw NotRationalError();
            RatFun b = evaluate(e.lhs(), env);
            return b.pow(static_cast<int>(q.get_num().get_si()));
        }
        default: {
            Expr le = e.lhs();
            Expr re = e.rhs();
            RatFun l = evaluate(le, env);
            RatFun r = evaluate(re, env);
            switch (e.kind()) {
                case Expr::Kind::Add:
                    return l + r;
                case Expr::Kind::Sub:
                    return l - r;
                case Expr::Kind::Mul:
                    return l * r;
                default:
                    return l / r;
            }
        }
    }
}

std::optional<RatFun> lower(const Expr& e) {
    if (e.has_fractional_power()) return std::nullopt;
    static const std::map<std::string, RatFun> env = {{"a", RatFun::a()}, {"t", RatFun::t()}};
    return evaluate(e, env);
}

namespace {

Expr rebuild_pow(const Expr& base, const Rational& q) {
    if (base.kind() == Expr::Kind::Pow && base.lhs().kind() == Expr::Kind::Var && base.lhs().name() == "t") {
        Rational combined = base.exponent() * q;
        if (combined == 1) return Expr::var("t");
        return Expr::pow(Expr::var("t"), combined);
    }
    return Expr::pow(base, q);
}

Expr subst_impl(const Expr& e, const std::string& var, const Expr& value, bool fold) {
    switch (e.kind()) {
        case Expr::Kind::Const:
            return e;
        case Expr::Kind::Var:
            return e.name() == var ? value : e;
        case Expr::Kind::Neg:
            return Expr::neg(subst_impl(e.operand(), var, value, fold));
        case Expr::Kind::Pow: {
            Expr b = subst_impl(e.lhs(), var, value, fold);
            return fold ? rebuild_pow(b, e.exponent()) : Expr::pow(b, e.exponent());
        }
        default: {
            Expr l = e.lhs();
            Expr r = e.rhs();
            return Expr::binary(e.kind(), subst_impl(l, var, value, fold), subst_impl(r, var, value, fold));
        }
    }
}

}  // namespace

Expr substitute(const Expr& e, const std::string& var, const Expr& value) {
    return subst_impl(e, var, value, false);
}

Expr reparametrize(const Expr& e, unsigned m) {
    if (m == 0) throw std::invalid_argument("reparametrization exponent must be positive");
    if (m == 1) return e;
    return subst_impl(e, "t", Expr::pow(Expr::var("t"), Rational(m)), true);
}

}  // namespace cpa
