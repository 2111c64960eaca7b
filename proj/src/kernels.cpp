#include "gfadm/kernels.hpp"

#include "gfadm/error.hpp"
#include "gfadm/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>

namespace gfadm {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::usage, std::string("kernel argument ") + name + " outside [0,1]: " +
                                          std::to_string(v));
    }
}

bool is_log_branch(const KernelSpec& k) { return k.alpha == 1.0; }

double lane_emden_v(const KernelSpec& k, double t) {
    if (is_log_branch(k)) return std::log(t);
    return (std::pow(t, 1.0 - k.alpha) - 1.0) / (1.0 - k.alpha);
}

/// s^alpha * v(s), written without the s^(1-alpha) blow-up for alpha > 1.
double weighted_v(const KernelSpec& k, double s) {
    if (s == 0.0) return 0.0;
    if (is_log_branch(k)) return s * std::log(s);
    return (s - std::pow(s, k.alpha)) / (1.0 - k.alpha);
}

template <class G>
double apply_impl(const KernelSpec& k, const G& g, double x) {
    require_unit_interval(x, "x");
    if (k.family == KernelSpec::Family::dirichlet_dirichlet) {
        const auto left = [&](double s) { return s * (x - 1.0) * g(s); };
        const auto right = [&](double s) { return x * (s - 1.0) * g(s); };
        const std::array<double, 3> lb{0.0, 0.5 * x, x};
        const std::array<double, 3> rb{x, 0.5 * (x + 1.0), 1.0};
        return integrate_panels(left, lb) + integrate_panels(right, rb);
    }

    const double alpha = k.alpha;
    const auto weight = [alpha](double s) { return alpha == 0.0 ? 1.0 : std::pow(s, alpha); };
    double total = 0.0;
    if (x > 0.0) {
        // G is constant in s on [0, x]; the panel nearest 0 is refined geometrically.
        const auto inner = [&](double s) { return weight(s) * g(s); };
        const std::array<double, 6> lb{0.0, x / 16.0, x / 8.0, x / 4.0, x / 2.0, x};
        total += (lane_emden_v(k, x) - k.robin_shift) * integrate_panels(inner, lb);
    }
    if (x < 1.0) {
        const auto outer = [&](double s) { return (weighted_v(k, s) - k.robin_shift * weight(s)) * g(s); };
        const double w = 1.0 - x;
        const std::array<double, 6> rb{x, x + w / 16.0, x + w / 8.0, x + w / 4.0, x + w / 2.0, 1.0};
        total += integrate_panels(outer, rb);
    }
    return total;
}

}  // namespace

KernelSpec KernelSpec::lane_emden(double alpha, double robin_shift) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorKind::usage, "lane_emden kernel needs alpha >= 0");
    }
    if (!(robin_shift >= 0.0) || !std::isfinite(robin_shift)) {
        throw Error(ErrorKind::usage, "lane_emden kernel needs robin_shift >= 0");
    }
    KernelSpec k;
    k.family = Family::lane_emden;
    k.alpha = alpha;
    k.robin_shift = robin_shift;
    return k;
}

KernelSpec KernelSpec::dirichlet_dirichlet(double left_value, double right_value) {
    KernelSpec k;
    k.family = Family::dirichlet_dirichlet;
    k.left_value = left_value;
    k.right_value = right_value;
    return k;
}

double kernel_eval(const KernelSpec& k, double x, double s) {
    require_unit_interval(x, "x");
    require_unit_interval(s, "s");
    if (k.family == KernelSpec::Family::dirichlet_dirichlet) {
        return s <= x ? s * (x - 1.0) : x * (s - 1.0);
    }
    const double t = std::max(x, s);
    if (k.alpha >= 1.0 && t == 0.0) {
        throw Error(ErrorKind::usage, "lane_emden kernel with alpha >= 1 is unbounded at s = x = 0");
    }
    return lane_emden_v(k, t) - k.robin_shift;
}

double kernel_apply(const KernelSpec& k, const GridFunction& g, double x) {
    return apply_impl(k, g, x);
}

double kernel_apply(const KernelSpec& k, const std::function<double(double)>& g, double x) {
    return apply_impl(k, g, x);
}

Polynomial kernel_monomial_image(const KernelSpec& k, unsigned m) {
    const auto md = static_cast<double>(m);
    if (k.family == KernelSpec::Family::dirichlet_dirichlet) {
        // u'' = x^m, u(0) = u(1) = 0
        const double c = 1.0 / ((md + 1.0) * (md + 2.0));
        return Polynomial::monomial(m + 2, c) - Polynomial::monomial(1, c);
    }
    if (is_log_branch(k)) {
        throw Error(ErrorKind::unsupported_backend,
                    "exact polynomial images are not provided for the logarithmic kernel (alpha = 1)");
    }
    // u'' + (alpha/x) u' = x^m, u'(0) = 0, u(1) + shift u'(1) = 0
    const double d = md + k.alpha + 1.0;
    const double c = 1.0 / (d * (md + 2.0));
    return Polynomial::monomial(m + 2, c) - Polynomial(c + k.robin_shift / d);
}

double kernel_bound_m(const KernelSpec& k) {
    const std::function<double(double)> one = [](double) { return 1.0; };
    const auto value = [&](double x) { return std::abs(kernel_apply(k, one, x)); };

    constexpr int kSamples = 1001;
    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < kSamples; ++i) {
        const double v = value(static_cast<double>(i) / (kSamples - 1));
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    // Golden-section refinement inside the bracket around the best sample.
    double a = static_cast<double>(std::max(best - 1, 0)) / (kSamples - 1);
    double b = static_cast<double>(std::min(best + 1, kSamples - 1)) / (kSamples - 1);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = value(c);
    double fd = value(d);
    for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = value(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = value(d);
        }
    }
    return std::max({best_value, fc, fd});
}

}  // namespace gfadm
