#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gfadm {

/// Dense polynomial in x with monomial coefficients p0 + p1 x + ... + pd x^d.
/// Trailing zero coefficients are dropped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(double constant);  // NOLINT: implicit, acts as a ring scalar
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial monomial(std::size_t power, double coeff = 1.0);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return c_; }
    /// Coefficient of x^k; zero beyond the degree.
    [[nodiscard]] double coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0.0; }

    [[nodiscard]] double operator()(double x) const noexcept;
    [[nodiscard]] Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= -1.0; }

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<double> c_;
};

[[nodiscard]] bool is_finite(const Polynomial& p) noexcept;

/// Division by a polynomial-valued series coefficient is not representable; always throws.
[[noreturn]] Polynomial reciprocal(const Polynomial& p);

}  // namespace gfadm
