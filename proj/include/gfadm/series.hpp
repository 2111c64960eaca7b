#pragma once

#include "gfadm/error.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gfadm {

inline bool is_finite(double v) noexcept { return std::isfinite(v); }

/// Constant terms with magnitude at or below this are treated as zero divisors.
inline constexpr double kSingularDivisorTolerance = 1e-14;

inline double reciprocal(double v) {
    if (std::abs(v) <= kSingularDivisorTolerance) {
        throw Error(ErrorKind::singular_division,
                    "series division by a divisor with vanishing constant term");
    }
    return 1.0 / v;
}

/// Power series in the formal parameter lambda, truncated at a fixed order N
/// (N + 1 stored coefficients). The coefficient ring is `T`: `double` for the
/// pointwise Adomian machinery, `Polynomial` for the exact backend.
///
/// All binary operations require equal orders; mixing orders is a usage error.
template <class T>
class BasicSeries {
public:
    explicit BasicSeries(std::size_t order) : c_(order + 1, T(0.0)) {}

    explicit BasicSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) {
            throw Error(ErrorKind::usage, "a truncated series needs at least one coefficient");
        }
        check_finite();
    }

    static BasicSeries constant(T value, std::size_t order) {
        BasicSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }
    [[nodiscard]] std::span<const T> coeffs() const noexcept { return c_; }
    [[nodiscard]] const T& operator[](std::size_t k) const { return c_.at(k); }
    [[nodiscard]] T& operator[](std::size_t k) { return c_.at(k); }

    friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
        require_same_order(a, b, "+");
        BasicSeries r(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        r.check_finite();
        return r;
    }

    friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
        require_same_order(a, b, "-");
        BasicSeries r(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        r.check_finite();
        return r;
    }

    friend BasicSeries operator-(const BasicSeries& a) {
        BasicSeries r(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = -a.c_[k];
        return r;
    }

    /// Truncated Cauchy product.
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
        require_same_order(a, b, "*");
        const std::size_t n = a.c_.size();
        BasicSeries r(a.order());
        for (std::size_t k = 0; k < n; ++k) {
            T acc(0.0);
            for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
            r.c_[k] = std::move(acc);
        }
        r.check_finite();
        return r;
    }

    /// Long division by forward substitution: q_k = (a_k - sum_{j<k} q_j b_{k-j}) / b_0.
    friend BasicSeries operator/(const BasicSeries& a, const BasicSeries& b) {
        require_same_order(a, b, "/");
        const T inv_b0 = reciprocal(b.c_[0]);
        const std::size_t n = a.c_.size();
        BasicSeries q(a.order());
        for (std::size_t k = 0; k < n; ++k) {
            T acc = a.c_[k];
            for (std::size_t j = 0; j < k; ++j) acc -= q.c_[j] * b.c_[k - j];
            q.c_[k] = acc * inv_b0;
        }
        q.check_finite();
        return q;
    }

private:
    static void require_same_order(const BasicSeries& a, const BasicSeries& b, const char* op) {
        if (a.order() != b.order()) {
            throw Error(ErrorKind::usage, std::string("series order mismatch in '") + op +
                                              "': " + std::to_string(a.order()) + " vs " +
                                              std::to_string(b.order()));
        }
    }

    void check_finite() const {
        for (const T& v : c_) {
            if (!is_finite(v)) {
                throw Error(ErrorKind::numeric, "non-finite series coefficient");
            }
        }
    }

    std::vector<T> c_;
};

/// Integer power by binary exponentiation; p = 0 yields the unit series.
template <class T>
[[nodiscard]] BasicSeries<T> pow(const BasicSeries<T>& a, unsigned p) {
    auto result = BasicSeries<T>::constant(T(1.0), a.order());
    auto base = a;
    while (p != 0) {
        if (p & 1U) result = result * base;
        p >>= 1U;
        if (p != 0) base = base * base;
    }
    return result;
}

using TruncatedSeries = BasicSeries<double>;

}  // namespace gfadm
