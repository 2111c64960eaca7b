#include "gfadm/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace gfadm {

namespace {

using Node = Expression::Node;
using Kind = Expression::Kind;

std::shared_ptr<const Node> leaf_node(Kind kind, double value = 0.0) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->value = value;
    return n;
}

bool contains_division(const Node& n) {
    if (n.kind == Kind::div) return true;
    if (n.lhs && contains_division(*n.lhs)) return true;
    return n.rhs && contains_division(*n.rhs);
}

std::string format_constant(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    return v < 0 ? "(" + s + ")" : s;
}

std::string print(const Node& n) {
    switch (n.kind) {
        case Kind::constant: return format_constant(n.value);
        case Kind::var_x: return "x";
        case Kind::var_y1: return "y1";
        case Kind::var_y2: return "y2";
        case Kind::add: return "(" + print(*n.lhs) + " + " + print(*n.rhs) + ")";
        case Kind::sub: return "(" + print(*n.lhs) + " - " + print(*n.rhs) + ")";
        case Kind::mul: return "(" + print(*n.lhs) + " * " + print(*n.rhs) + ")";
        case Kind::div: return "(" + print(*n.lhs) + " / " + print(*n.rhs) + ")";
        case Kind::neg: return "(-" + print(*n.lhs) + ")";
        case Kind::pow_int: return "(" + print(*n.lhs) + ")^" + std::to_string(n.exponent);
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expression parse_expr() {
        Expression lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = lhs + parse_term();
            } else if (accept('-')) {
                lhs = lhs - parse_term();
            } else {
                return lhs;
            }
        }
    }

    Expression parse_term() {
        Expression lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = lhs * parse_unary();
            } else if (accept('/')) {
                lhs = lhs / parse_unary();
            } else {
                return lhs;
            }
        }
    }

    Expression parse_unary() {
        if (accept('-')) return Expression::negate(parse_unary());
        return parse_power();
    }

    Expression parse_power() {
        Expression base = parse_primary();
        if (accept('^')) return Expression::power(base, parse_exponent());
        return base;
    }

    unsigned parse_exponent() {
        skip_space();
        if (accept('(')) {
            unsigned e = parse_exponent();
            if (!accept(')')) fail("expected ')' after exponent");
            return e;
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            fail("negative exponent; only non-negative integer powers are allowed");
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a non-negative integer exponent");
        }
        unsigned long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (value > 1000) fail("exponent too large");
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            pos_ = start;
            fail("non-integer exponent; only non-negative integer powers are allowed");
        }
        auto e = static_cast<unsigned>(value);
        if (accept('^')) {
            const unsigned inner = parse_exponent();
            unsigned long r = 1;
            for (unsigned k = 0; k < inner; ++k) {
                r *= e;
                if (r > 1000) fail("exponent too large");
            }
            e = static_cast<unsigned>(r);
        }
        return e;
    }

    Expression parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expression inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view ident = text_.substr(start, pos_ - start);
            if (ident == "x") return Expression::var_x();
            if (ident == "y1") return Expression::var_y1();
            if (ident == "y2") return Expression::var_y2();
            pos_ = start;
            fail("unknown identifier '" + std::string(ident) + "'");
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Expression parse_number() {
        const std::string rest(text_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        if (!std::isfinite(v)) fail("number out of range");
        return Expression::constant(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::constant(double v) { return Expression(leaf_node(Kind::constant, v)); }
Expression Expression::var_x() { return Expression(leaf_node(Kind::var_x)); }
Expression Expression::var_y1() { return Expression(leaf_node(Kind::var_y1)); }
Expression Expression::var_y2() { return Expression(leaf_node(Kind::var_y2)); }

Expression Expression::binary(Kind kind, const Expression& lhs, const Expression& rhs) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = lhs.root_;
    n->rhs = rhs.root_;
    return Expression(std::move(n));
}

Expression Expression::negate(const Expression& operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::neg;
    n->lhs = operand.root_;
    return Expression(std::move(n));
}

Expression Expression::power(const Expression& base, unsigned exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::pow_int;
    n->exponent = exponent;
    n->lhs = base.root_;
    return Expression(std::move(n));
}

bool Expression::is_polynomial() const noexcept { return !contains_division(*root_); }

std::string Expression::to_string() const { return print(*root_); }

Expression operator+(const Expression& a, const Expression& b) {
    return Expression::binary(Kind::add, a, b);
}
Expression operator-(const Expression& a, const Expression& b) {
    return Expression::binary(Kind::sub, a, b);
}
Expression operator*(const Expression& a, const Expression& b) {
    return Expression::binary(Kind::mul, a, b);
}
Expression operator/(const Expression& a, const Expression& b) {
    return Expression::binary(Kind::div, a, b);
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

double eval_scalar(const Expression& e, double x, double y1, double y2) {
    auto leaf = [&](const Node& n) -> double {
        switch (n.kind) {
            case Kind::constant: return n.value;
            case Kind::var_x: return x;
            case Kind::var_y1: return y1;
            default: return y2;
        }
    };
    const double v = detail::evaluate<double>(e.root(), leaf);
    if (!std::isfinite(v)) throw Error(ErrorKind::evaluation, "non-finite value of f");
    return v;
}

TruncatedSeries eval_series(const Expression& e, double x, const TruncatedSeries& y1,
                            const TruncatedSeries& y2) {
    return eval_series_in<double>(e, x, y1, y2);
}

}  // namespace gfadm
