#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace gfadm {

/// Chebyshev-Lobatto nodes mapped to [0, 1] (ascending, endpoints included) together with
/// barycentric weights and the first-derivative differentiation matrix.
class ChebyshevGrid {
public:
    /// `degree` + 1 nodes; degree >= 2.
    explicit ChebyshevGrid(std::size_t degree);

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

    /// Barycentric interpolation of node values at x.
    [[nodiscard]] double interpolate(std::span<const double> values, double x) const noexcept;

    /// out = D * values (spectral derivative at the nodes).
    void differentiate(std::span<const double> values, std::span<double> out) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> diff_;  // row-major (n x n)
};

/// Values of a function at the nodes of a shared Chebyshev grid.
class GridFunction {
public:
    GridFunction(std::shared_ptr<const ChebyshevGrid> grid, std::vector<double> values);

    template <class F>
    static GridFunction sample(std::shared_ptr<const ChebyshevGrid> grid, F&& f) {
        std::vector<double> v(grid->size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(grid->nodes()[k]);
        return GridFunction(std::move(grid), std::move(v));
    }

    [[nodiscard]] double operator()(double x) const noexcept { return grid_->interpolate(values_, x); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::shared_ptr<const ChebyshevGrid>& grid() const noexcept { return grid_; }
    [[nodiscard]] GridFunction derivative() const;

private:
    std::shared_ptr<const ChebyshevGrid> grid_;
    std::vector<double> values_;
};

}  // namespace gfadm
