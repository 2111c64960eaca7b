#pragma once

#include "gfadm/chebyshev.hpp"
#include "gfadm/polynomial.hpp"

#include <functional>

namespace gfadm {

/// Green's kernel family of one component.
///
/// lane_emden: operator y'' + (alpha/x) y', y'(0) = 0, y(1) + robin_shift * y'(1) = 0;
///   G(x,s) = v(max(x,s)) - robin_shift with v(t) = ln t (alpha = 1) or
///   (t^(1-alpha) - 1)/(1 - alpha) otherwise (alpha = 0 gives v(t) = t - 1).
/// dirichlet_dirichlet: operator y'', zero values at both ends;
///   G(x,s) = s(x-1) for s <= x and x(s-1) for x <= s. The boundary values are carried for
///   the solver's affine baseline only.
struct KernelSpec {
    enum class Family { lane_emden, dirichlet_dirichlet };

    Family family = Family::lane_emden;
    double alpha = 0.0;
    double robin_shift = 0.0;
    double left_value = 0.0;
    double right_value = 0.0;

    static KernelSpec lane_emden(double alpha, double robin_shift = 0.0);
    static KernelSpec dirichlet_dirichlet(double left_value, double right_value);

    /// Exponent of the weight s^alpha in the integral operator.
    [[nodiscard]] double weight_exponent() const noexcept {
        return family == Family::lane_emden ? alpha : 0.0;
    }
};

[[nodiscard]] double kernel_eval(const KernelSpec& k, double x, double s);

/// Integral of G(x,s) s^alpha g(s) over [0,1], split at the kink s = x.
[[nodiscard]] double kernel_apply(const KernelSpec& k, const GridFunction& g, double x);
[[nodiscard]] double kernel_apply(const KernelSpec& k, const std::function<double(double)>& g, double x);

/// Closed form of x -> integral of G(x,s) s^(alpha+m) ds.
[[nodiscard]] Polynomial kernel_monomial_image(const KernelSpec& k, unsigned m);

/// max over x in [0,1] of |integral of G(x,s) s^alpha ds|.
[[nodiscard]] double kernel_bound_m(const KernelSpec& k);

}  // namespace gfadm
