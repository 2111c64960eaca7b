#pragma once

#include "gfadm/error.hpp"
#include "gfadm/series.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace gfadm {

/// Immutable expression tree for a right-hand side f(x, y1, y2).
///
/// Grammar (standard precedence, `^` binds tightest and is right-associative):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' exponent)?
///     exponent:= uint ('^' exponent)? | '(' exponent ')'
///     primary := number | 'x' | 'y1' | 'y2' | '(' expr ')'
///
/// Exponents must be non-negative integer literals.
class Expression {
public:
    enum class Kind { constant, var_x, var_y1, var_y2, add, sub, mul, div, neg, pow_int };

    struct Node {
        Kind kind = Kind::constant;
        double value = 0.0;     // constant
        unsigned exponent = 0;  // pow_int
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;  // binary only
    };

    Expression() : Expression(constant(0.0)) {}

    static Expression constant(double v);
    static Expression var_x();
    static Expression var_y1();
    static Expression var_y2();
    static Expression binary(Kind kind, const Expression& lhs, const Expression& rhs);
    static Expression negate(const Expression& operand);
    static Expression power(const Expression& base, unsigned exponent);

    [[nodiscard]] const Node& root() const noexcept { return *root_; }

    /// True when the tree contains no division node (the exact backend's requirement).
    [[nodiscard]] bool is_polynomial() const noexcept;

    /// Fully parenthesised text that parses back to an equivalent expression.
    [[nodiscard]] std::string to_string() const;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);

[[nodiscard]] Expression parse_expression(std::string_view text);

[[nodiscard]] double eval_scalar(const Expression& e, double x, double y1, double y2);

/// Lambda-Taylor expansion of f(x, y1(lambda), y2(lambda)) truncated at the common order.
[[nodiscard]] TruncatedSeries eval_series(const Expression& e, double x, const TruncatedSeries& y1,
                                          const TruncatedSeries& y2);

namespace detail {

inline double divide(double a, double b) {
    if (b == 0.0) throw Error(ErrorKind::evaluation, "division by zero");
    return a / b;
}

template <class T>
BasicSeries<T> divide(const BasicSeries<T>& a, const BasicSeries<T>& b) {
    return a / b;
}

inline double int_pow(double base, unsigned p) {
    double r = 1.0;
    while (p != 0) {
        if (p & 1U) r *= base;
        p >>= 1U;
        if (p != 0) base *= base;
    }
    return r;
}

template <class T>
BasicSeries<T> int_pow(const BasicSeries<T>& base, unsigned p) {
    return pow(base, p);
}

template <class V, class Leaf>
V evaluate(const Expression::Node& n, const Leaf& leaf) {
    using K = Expression::Kind;
    switch (n.kind) {
        case K::constant:
        case K::var_x:
        case K::var_y1:
        case K::var_y2: return leaf(n);
        case K::add: return evaluate<V>(*n.lhs, leaf) + evaluate<V>(*n.rhs, leaf);
        case K::sub: return evaluate<V>(*n.lhs, leaf) - evaluate<V>(*n.rhs, leaf);
        case K::mul: return evaluate<V>(*n.lhs, leaf) * evaluate<V>(*n.rhs, leaf);
        case K::div: return divide(evaluate<V>(*n.lhs, leaf), evaluate<V>(*n.rhs, leaf));
        case K::neg: return -evaluate<V>(*n.lhs, leaf);
        case K::pow_int: return int_pow(evaluate<V>(*n.lhs, leaf), n.exponent);
    }
    throw Error(ErrorKind::usage, "corrupt expression node");
}

}  // namespace detail

/// Series evaluation over an arbitrary coefficient ring (`double` or `Polynomial`).
/// `x` enters as the constant series [x, 0, ...].
template <class T>
[[nodiscard]] BasicSeries<T> eval_series_in(const Expression& e, const T& x,
                                            const BasicSeries<T>& y1, const BasicSeries<T>& y2) {
    if (y1.order() != y2.order()) {
        throw Error(ErrorKind::usage, "eval_series: y1 and y2 orders differ");
    }
    const std::size_t order = y1.order();
    using S = BasicSeries<T>;
    auto leaf = [&](const Expression::Node& n) -> S {
        switch (n.kind) {
            case Expression::Kind::constant: return S::constant(T(n.value), order);
            case Expression::Kind::var_x: return S::constant(x, order);
            case Expression::Kind::var_y1: return y1;
            default: return y2;
        }
    };
    return detail::evaluate<S>(e.root(), leaf);
}

}  // namespace gfadm
