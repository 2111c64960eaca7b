#pragma once

#include "gfadm/expr.hpp"
#include "gfadm/series.hpp"

#include <span>
#include <vector>

namespace gfadm {

/// Adomian polynomial values A_0..A_n of f at one point.
///
/// Term j of each list is the lambda^j coefficient of the decomposition, so
/// A_k = (1/k!) d^k/dlambda^k f(x, sum y1_j lambda^j, sum y2_j lambda^j) at lambda = 0,
/// which is exactly coefficient k of the truncated series evaluation of f.
/// Singular divisions are rethrown with the location x attached.
[[nodiscard]] std::vector<double> adomian_coefficients(const Expression& f, double x,
                                                       std::span<const double> y1_terms,
                                                       std::span<const double> y2_terms);

/// Same over an arbitrary coefficient ring; used by the exact backend with T = Polynomial.
template <class T>
[[nodiscard]] std::vector<T> adomian_coefficients_in(const Expression& f, const T& x,
                                                     std::span<const T> y1_terms,
                                                     std::span<const T> y2_terms) {
    if (y1_terms.size() != y2_terms.size() || y1_terms.empty()) {
        throw Error(ErrorKind::usage, "adomian_coefficients: term lists must be non-empty and equal length");
    }
    const BasicSeries<T> y1(std::vector<T>(y1_terms.begin(), y1_terms.end()));
    const BasicSeries<T> y2(std::vector<T>(y2_terms.begin(), y2_terms.end()));
    const auto a = eval_series_in<T>(f, x, y1, y2);
    return {a.coeffs().begin(), a.coeffs().end()};
}

}  // namespace gfadm
