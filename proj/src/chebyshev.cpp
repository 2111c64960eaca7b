#include "gfadm/chebyshev.hpp"

#include "gfadm/error.hpp"

#include <cmath>
#include <numbers>

namespace gfadm {

ChebyshevGrid::ChebyshevGrid(std::size_t degree) {
    if (degree < 2) throw Error(ErrorKind::usage, "Chebyshev grid needs degree >= 2");
    const std::size_t n = degree;
    nodes_.resize(n + 1);
    weights_.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        // (1 - cos(j pi / n)) / 2 written as sin^2 keeps the nodes near 0 accurate.
        const double s = std::sin(static_cast<double>(j) * std::numbers::pi / (2.0 * static_cast<double>(n)));
        nodes_[j] = s * s;
        weights_[j] = ((j % 2 == 0) ? 1.0 : -1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
    }
    nodes_[0] = 0.0;
    nodes_[n] = 1.0;

    const std::size_t m = n + 1;
    diff_.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double diag = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const double d = (weights_[j] / weights_[i]) / (nodes_[i] - nodes_[j]);
            diff_[i * m + j] = d;
            diag -= d;
        }
        diff_[i * m + i] = diag;
    }
}

double ChebyshevGrid::interpolate(std::span<const double> values, double x) const noexcept {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        const double d = x - nodes_[j];
        if (d == 0.0) return values[j];
        const double t = weights_[j] / d;
        num += t * values[j];
        den += t;
    }
    return num / den;
}

void ChebyshevGrid::differentiate(std::span<const double> values, std::span<double> out) const {
    const std::size_t m = nodes_.size();
    if (values.size() != m || out.size() != m) {
        throw Error(ErrorKind::usage, "differentiate: size mismatch with grid");
    }
    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += diff_[i * m + j] * values[j];
        out[i] = acc;
    }
}

GridFunction::GridFunction(std::shared_ptr<const ChebyshevGrid> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_ || values_.size() != grid_->size()) {
        throw Error(ErrorKind::usage, "grid function values do not match the grid");
    }
}

GridFunction GridFunction::derivative() const {
    std::vector<double> d(values_.size());
    grid_->differentiate(values_, d);
    return GridFunction(grid_, std::move(d));
}

}  // namespace gfadm
