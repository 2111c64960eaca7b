#pragma once

#include "gfadm/expr.hpp"
#include "gfadm/problem.hpp"
#include "gfadm/solver.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

namespace gfadm {

/// How the defect L psi - f(psi) is obtained.
///  spectral: differentiate the partial-sum interpolant (or polynomial) twice.
///  adomian_identity: sum_{j<n} A_j - f(psi_n), using L y_j = A_{j-1} for every term.
enum class ResidualMethod { spectral, adomian_identity };

/// standard: |psi'' + (alpha/x) psi' - f|.
/// divergence: x^alpha times the standard residual, i.e. the defect of (x^alpha psi')' = x^alpha f.
enum class ResidualForm { standard, divergence };

struct ResidualPoint {
    double x = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
};

struct ResidualReport {
    int n = 0;
    ResidualMethod method = ResidualMethod::adomian_identity;
    ResidualForm form = ResidualForm::standard;
    std::vector<ResidualPoint> points;
    double maxr1 = 0.0;  // over the points, or over the search grid when produced by max_residual
    double maxr2 = 0.0;
};

/// Residual is |L psi - f| with f exactly the problem's right-hand side. At x = 0 the singular
/// term uses the regularity limit (1 + alpha) psi''(0).
[[nodiscard]] ResidualReport residual(const ProblemSpec& p, const SolutionSeries& sol, int n,
                                      std::span<const double> xs,
                                      ResidualMethod method = ResidualMethod::adomian_identity,
                                      ResidualForm form = ResidualForm::standard);

/// (maxr_1n, maxr_2n): 901 uniform points on [0.001, 0.999], then golden-section refinement
/// around the best sample of each component.
[[nodiscard]] std::array<double, 2> max_residual(const ProblemSpec& p, const SolutionSeries& sol, int n,
                                                 ResidualMethod method = ResidualMethod::adomian_identity,
                                                 ResidualForm form = ResidualForm::standard);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct Box {
    Range x{0.0, 1.0};
    Range y1;
    Range y2;
};

struct LipschitzConstants {
    double l1 = 0.0;  // bound on |df_i/dy1|
    double l2 = 0.0;  // bound on |df_i/dy2|
    [[nodiscard]] double l() const noexcept { return l1 > l2 ? l1 : l2; }
};

/// Central differences (h = 1e-6 * range) on a samples^3 lattice over the box, max over both
/// right-hand sides, inflated by 10%.
[[nodiscard]] LipschitzConstants lipschitz_estimate(const Expression& f1, const Expression& f2,
                                                    const Box& box, int samples = 21);

/// gamma^n * m / (1 - gamma) * max_f0 with gamma = 2 m l; bound_inapplicable when gamma >= 1.
[[nodiscard]] double error_bound(double m, double l, double max_f0, int n);

struct ConvergenceEstimate {
    double m = 0.0;
    LipschitzConstants lipschitz;
    double gamma = 0.0;
    double max_f0 = 0.0;
    Box box;
    [[nodiscard]] bool bound_applicable() const noexcept { return gamma < 1.0; }
};

/// Padded (10%) rectangle spanned by all partial sums psi_0..psi_n on a fine grid.
[[nodiscard]] Box solution_box(const SolutionSeries& sol, double padding = 0.1);

/// m from the kernels, l from the solution box, gamma = 2 m l, and
/// max_f0 = max over x of max_i |f_i(x, y10(x), y20(x))|.
[[nodiscard]] ConvergenceEstimate estimate_convergence(const ProblemSpec& p, const SolutionSeries& sol,
                                                       int samples = 21);

/// Sup-norm distance max_i max_x |psi_{i,a}(x) - psi_{i,b}(x)| on a fine uniform grid.
[[nodiscard]] double partial_sum_distance(const SolutionSeries& sol, int a, int b);

/// CSV "x,r1,r2" rows (scientific, 6 significant digits).
void write_points_csv(std::ostream& out, const ResidualReport& report);
/// CSV "n,maxr1,maxr2" rows.
void write_summary_csv(std::ostream& out, std::span<const ResidualReport> reports);

}  // namespace gfadm
