#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mero/ratfun.hpp"

namespace mero {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Syntax tree of one matrix entry.
struct Expr {
    enum class Kind { Integer, Unit, Var, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Integer;
    BigInt value;  // Integer literal, or the exponent of Pow
    ExprPtr lhs, rhs;
};

namespace detail {

inline std::shared_ptr<Expr> make_node(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

// Precedence, loosest first:  + -   then  * / (and juxtaposition)   then unary -   then ^
class Parser {
public:
    explicit Parser(std::string_view src) : s_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ < s_.size()) fail("operator or end of input", "unexpected character");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected, const std::string& what) const {
        throw ParseError(pos_, expected, what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        while (true) {
            if (eat('+')) e = make_node(Expr::Kind::Add, e, product());
            else if (eat('-')) e = make_node(Expr::Kind::Sub, e, product());
            else return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (true) {
            const char c = peek();
            if (eat('*')) e = make_node(Expr::Kind::Mul, e, unary());
            else if (eat('/')) e = make_node(Expr::Kind::Div, e, unary());
            else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) e = make_node(Expr::Kind::Mul, e, power());
            else return e;
        }
    }

    ExprPtr unary() {
        if (eat('-')) return make_node(Expr::Kind::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!eat('^')) return base;
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("integer exponent", "bad exponent");
        auto e = make_node(Expr::Kind::Pow, base);
        e->value = digits();
        if (negative) e->value = -e->value;
        if (abs(e->value) > 4096) fail("exponent of magnitude at most 4096", "exponent too large");
        if (peek() == '^') fail("operator or end of input", "chained exponent");
        return e;
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    ExprPtr primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!eat(')')) fail("')'", "unbalanced parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = make_node(Expr::Kind::Integer);
            e->value = digits();
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (id == "z") return make_node(Expr::Kind::Var);
            if (id == "i") return make_node(Expr::Kind::Unit);
            pos_ = start;
            fail("'z' or 'i'", "unknown identifier '" + std::string(id) + "'");
        }
        fail(c == '\0' ? "operand" : "number, 'z', 'i' or '('", c == '\0' ? "unexpected end of input" : "unexpected character");
    }
};

} // namespace detail

inline ExprPtr parse_entry(std::string_view src) { return detail::Parser(src).parse(); }

inline RatFun evaluate(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Integer: return RatFun(GaussRat(Rat(e.value)));
    case Expr::Kind::Unit: return RatFun(GaussRat::i());
    case Expr::Kind::Var: return RatFun(Poly::z());
    case Expr::Kind::Neg: return -evaluate(*e.lhs);
    case Expr::Kind::Add: return evaluate(*e.lhs) + evaluate(*e.rhs);
    case Expr::Kind::Sub: return evaluate(*e.lhs) - evaluate(*e.rhs);
    case Expr::Kind::Mul: return evaluate(*e.lhs) * evaluate(*e.rhs);
    case Expr::Kind::Div: {
        const RatFun d = evaluate(*e.rhs);
        if (d.is_zero()) throw Error(Errc::InvalidInput, "division by zero in expression");
        return evaluate(*e.lhs) / d;
    }
    case Expr::Kind::Pow: {
        const RatFun b = evaluate(*e.lhs);
        const long k = e.value.get_si();
        if (k < 0 && b.is_zero()) throw Error(Errc::InvalidInput, "zero to a negative power");
        return pow(b, static_cast<int>(k));
    }
    }
    return {};
}

inline RatFun parse_ratfun(std::string_view src) { return evaluate(*parse_entry(src)); }

/// Fully parenthesized rendering of the tree; parsing it gives back the same tree.
inline std::string to_string(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Integer: return e.value.get_str();
    case Expr::Kind::Unit: return "i";
    case Expr::Kind::Var: return "z";
    case Expr::Kind::Neg: return "(-" + to_string(*e.lhs) + ")";
    case Expr::Kind::Add: return "(" + to_string(*e.lhs) + "+" + to_string(*e.rhs) + ")";
    case Expr::Kind::Sub: return "(" + to_string(*e.lhs) + "-" + to_string(*e.rhs) + ")";
    case Expr::Kind::Mul: return "(" + to_string(*e.lhs) + "*" + to_string(*e.rhs) + ")";
    case Expr::Kind::Div: return "(" + to_string(*e.lhs) + "/" + to_string(*e.rhs) + ")";
    case Expr::Kind::Pow: return "(" + to_string(*e.lhs) + ")^" + e.value.get_str();
    }
    return "";
}

/// A point given as "inf" or as a constant expression such as "1/2-3i".
struct PointSpec {
    bool infinity = false;
    GaussRat value;
};

inline PointSpec parse_point(std::string_view src) {
    std::string_view t = src;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t == "inf" || t == "infinity") return {true, {}};
    const RatFun f = parse_ratfun(src);
    if (!f.is_constant()) throw ParseError(0, "constant", "point must not depend on z");
    return {false, f.num().coeff(0)};
}

} // namespace mero
