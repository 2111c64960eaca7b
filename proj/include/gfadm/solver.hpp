#pragma once

#include "gfadm/chebyshev.hpp"
#include "gfadm/execution.hpp"
#include "gfadm/polynomial.hpp"
#include "gfadm/problem.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace gfadm {

enum class Backend { grid, exact_polynomial };

/// Exact-backend terms above this degree are an error rather than silently truncated.
inline constexpr int kMaxExactDegree = 60;

struct SolveOptions {
    int n_terms = 5;
    Backend backend = Backend::grid;
    std::size_t grid_size = 64;  // Chebyshev degree; grid_size + 1 nodes
    ExecutionPolicy execution = ExecutionPolicy::parallel;
};

/// Value and first two derivatives of an approximant at a point.
struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// One component's partial sum psi_n together with its derivatives, ready for point evaluation.
class Approximant {
public:
    explicit Approximant(const GridFunction& values);
    explicit Approximant(Polynomial p);

    [[nodiscard]] Jet operator()(double x) const;
    [[nodiscard]] double value(double x) const;

private:
    std::vector<GridFunction> grid_;  // psi, psi', psi'' (grid backend)
    std::array<Polynomial, 3> poly_;  // psi, psi', psi'' (exact backend)
    bool is_grid_ = false;
};

/// Terms y_{i,0..n} of both components plus the Adomian rows A_{i,0..n-1} they were built from.
/// Components are indexed 0 and 1.
class SolutionSeries {
public:
    [[nodiscard]] Backend backend() const noexcept { return backend_; }
    [[nodiscard]] const ProblemSpec& problem() const noexcept { return problem_; }
    /// Highest term index n (terms 0..n are stored).
    [[nodiscard]] int n_terms() const noexcept { return n_terms_; }
    /// Grid backend only; null for the exact backend.
    [[nodiscard]] const std::shared_ptr<const ChebyshevGrid>& grid() const noexcept { return grid_; }

    [[nodiscard]] const std::vector<GridFunction>& grid_terms(int component) const;
    [[nodiscard]] const std::vector<GridFunction>& grid_adomian_rows(int component) const;
    [[nodiscard]] const std::vector<Polynomial>& poly_terms(int component) const;
    [[nodiscard]] const std::vector<Polynomial>& poly_adomian_rows(int component) const;

    /// y_{component, j}(x)
    [[nodiscard]] double term(int component, int j, double x) const;

    /// psi_{component, n} as an evaluable approximant.
    [[nodiscard]] Approximant partial_sum(int component, int n) const;

    /// psi_{component, n}(x); exact backend only returns the polynomial directly.
    [[nodiscard]] Polynomial partial_sum_polynomial(int component, int n) const;

private:
    friend SolutionSeries gfadm_solve(const ProblemSpec& p, const SolveOptions& options);

    void require_index(int component, int n) const;

    Backend backend_ = Backend::grid;
    ProblemSpec problem_;
    int n_terms_ = 0;
    std::shared_ptr<const ChebyshevGrid> grid_;
    std::array<std::vector<GridFunction>, 2> grid_terms_;
    std::array<std::vector<GridFunction>, 2> grid_rows_;
    std::array<std::vector<Polynomial>, 2> poly_terms_;
    std::array<std::vector<Polynomial>, 2> poly_rows_;
};

/// Zeroth terms: c/a for components with y'(0) = 0, the affine interpolant of the
/// boundary values for two-sided Dirichlet components.
[[nodiscard]] std::array<Polynomial, 2> build_baseline(const ProblemSpec& p);

/// y_{i,j}(x) = integral of G_i(x,s) s^alpha_i A_{i,j-1}(s) ds for j = 1..n_terms.
[[nodiscard]] SolutionSeries gfadm_solve(const ProblemSpec& p, const SolveOptions& options);

/// (psi_{1n}(x), psi_{2n}(x))
[[nodiscard]] std::array<double, 2> evaluate_partial_sum(const SolutionSeries& sol, int n, double x);

}  // namespace gfadm
