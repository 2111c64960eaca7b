#include "gfadm/quadrature.hpp"

#include <numbers>

namespace gfadm {

GaussLegendreRule make_gauss_legendre(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::usage, "Gauss-Legendre rule needs at least one node");
    GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
    const auto nd = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                const auto kd = static_cast<double>(k);
                p0 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p2) / kd;
            }
            dp = nd * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendreRule& gauss_legendre32() {
    static const GaussLegendreRule rule = make_gauss_legendre(32);
    return rule;
}

}  // namespace gfadm
