#pragma once

#include "gfadm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <span>
#include <vector>

namespace gfadm {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

[[nodiscard]] GaussLegendreRule make_gauss_legendre(std::size_t n);

/// The 32-point rule used by every panel; built once.
[[nodiscard]] const GaussLegendreRule& gauss_legendre32();

template <class F>
[[nodiscard]] double gauss_legendre_panel(const F& f, double a, double b) {
    const auto& rule = gauss_legendre32();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return half * acc;
}

struct QuadratureOptions {
    double tolerance = 1e-13;  // per panel, scaled by max(1, |panel value|)
    int max_depth = 40;
    double fail_threshold = 1e-9;  // unresolved estimate above this is an error
};

namespace detail {

template <class F>
double adaptive_panel(const F& f, double a, double b, double whole, double tol, int depth,
                      const QuadratureOptions& opt, double& error_estimate) {
    const double m = 0.5 * (a + b);
    const double left = gauss_legendre_panel(f, a, m);
    const double right = gauss_legendre_panel(f, m, b);
    const double refined = left + right;
    const double diff = std::abs(refined - whole);
    if (diff <= tol * std::max(1.0, std::abs(refined)) || depth >= opt.max_depth || m == a || m == b) {
        error_estimate += diff;
        return refined;
    }
    return adaptive_panel(f, a, m, left, 0.5 * tol, depth + 1, opt, error_estimate) +
           adaptive_panel(f, m, b, right, 0.5 * tol, depth + 1, opt, error_estimate);
}

}  // namespace detail

/// Composite Gauss-Legendre over the given breakpoints with adaptive bisection of each panel.
/// Throws a numeric error carrying the achieved estimate when the panels cannot be resolved.
template <class F>
[[nodiscard]] double integrate_panels(const F& f, std::span<const double> breakpoints,
                                      const QuadratureOptions& opt = {}) {
    double total = 0.0;
    double error_estimate = 0.0;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        const double a = breakpoints[k];
        const double b = breakpoints[k + 1];
        if (!(b > a)) continue;
        const double whole = gauss_legendre_panel(f, a, b);
        total += detail::adaptive_panel(f, a, b, whole, opt.tolerance, 0, opt, error_estimate);
    }
    if (!std::isfinite(total) || error_estimate > opt.fail_threshold * std::max(1.0, std::abs(total))) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "quadrature did not converge (estimate %.3e, value %.6e)",
                      error_estimate, total);
        throw Error(ErrorKind::numeric, buf);
    }
    return total;
}

}  // namespace gfadm
