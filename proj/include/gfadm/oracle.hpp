#pragma once

#include "gfadm/problem.hpp"

#include <vector>

namespace gfadm {

/// Finite-difference reference solution on the uniform grid x_k = k/M.
struct OracleSolution {
    std::vector<double> nodes;
    std::vector<double> y1;
    std::vector<double> y2;
    int iterations = 0;
    double residual_norm = 0.0;  // max norm of the h^2-scaled discrete residual

    /// Piecewise-cubic (Lagrange, 4 nearest nodes) interpolation of a component.
    [[nodiscard]] double interpolate(int component, double x) const;
};

/// Second-order central differences with a damped Newton iteration started from the
/// GF-ADM baseline. The singular row at x = 0 uses (1+alpha) y''(0) with the ghost value
/// y_{-1} = y_1; a Robin right end uses a one-sided second-order derivative.
/// Interior rows are multiplied by h^2 before the convergence test.
[[nodiscard]] OracleSolution fd_solve(const ProblemSpec& p, int M, double newton_tol = 1e-13,
                                      int max_iters = 50);

}  // namespace gfadm
