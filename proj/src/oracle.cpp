#include "gfadm/oracle.hpp"

#include "gfadm/error.hpp"
#include "gfadm/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <string>

namespace gfadm {

namespace {

constexpr int kMaxHalvings = 20;

struct Partials {
    double value = 0.0;
    double d1 = 0.0;  // df/dy1
    double d2 = 0.0;  // df/dy2
};

Partials partials(const Expression& f, double x, double y1, double y2) {
    // first-order lambda series: the lambda coefficient is the directional derivative
    const TruncatedSeries dy1 = eval_series(f, x, TruncatedSeries({y1, 1.0}), TruncatedSeries({y2, 0.0}));
    const TruncatedSeries dy2 = eval_series(f, x, TruncatedSeries({y1, 0.0}), TruncatedSeries({y2, 1.0}));
    return {dy1[0], dy1[1], dy2[1]};
}

class System {
public:
    System(const ProblemSpec& p, int M) : p_(p), m_(M), h_(1.0 / M) {}

    [[nodiscard]] int size() const { return 2 * (m_ + 1); }
    [[nodiscard]] int index(int i, int k) const { return i * (m_ + 1) + k; }

    /// Residual vector, optionally with the Jacobian triplets.
    Eigen::VectorXd evaluate(const Eigen::VectorXd& y, std::vector<Eigen::Triplet<double>>* jac) const {
        Eigen::VectorXd r(size());
        const double h2 = h_ * h_;
        auto add = [&](int row, int col, double v) {
            if (jac != nullptr && v != 0.0) jac->emplace_back(row, col, v);
        };
        for (int i = 0; i < 2; ++i) {
            const ComponentSpec& c = p_.components[static_cast<std::size_t>(i)];
            const double alpha = c.shape();
            const auto at = [&](int k) { return y[index(i, k)]; };

            // x = 0
            const int r0 = index(i, 0);
            if (c.left.kind == LeftCondition::Kind::dirichlet) {
                r[r0] = at(0) - c.left.value;
                add(r0, r0, 1.0);
            } else {
                const Partials f = partials(c.rhs, 0.0, y[index(0, 0)], y[index(1, 0)]);
                r[r0] = (1.0 + alpha) * 2.0 * (at(1) - at(0)) - h2 * f.value;
                add(r0, index(i, 1), 2.0 * (1.0 + alpha));
                add(r0, r0, -2.0 * (1.0 + alpha));
                add(r0, index(0, 0), -h2 * f.d1);
                add(r0, index(1, 0), -h2 * f.d2);
            }

            for (int k = 1; k < m_; ++k) {
                const double x = k * h_;
                const int row = index(i, k);
                const double drift = alpha * h_ / (2.0 * x);
                const Partials f = partials(c.rhs, x, y[index(0, k)], y[index(1, k)]);
                r[row] = at(k + 1) - 2.0 * at(k) + at(k - 1) + drift * (at(k + 1) - at(k - 1)) - h2 * f.value;
                add(row, index(i, k + 1), 1.0 + drift);
                add(row, index(i, k - 1), 1.0 - drift);
                add(row, row, -2.0);
                add(row, index(0, k), -h2 * f.d1);
                add(row, index(1, k), -h2 * f.d2);
            }

            // x = 1: a y + b y' = c, y' one-sided second order, scaled by h
            const int rm = index(i, m_);
            const auto& rc = c.right;
            if (rc.b == 0.0) {
                r[rm] = rc.a * at(m_) - rc.c;
                add(rm, rm, rc.a);
            } else {
                r[rm] = h_ * (rc.a * at(m_) - rc.c) + rc.b * (1.5 * at(m_) - 2.0 * at(m_ - 1) + 0.5 * at(m_ - 2));
                add(rm, rm, h_ * rc.a + 1.5 * rc.b);
                add(rm, index(i, m_ - 1), -2.0 * rc.b);
                add(rm, index(i, m_ - 2), 0.5 * rc.b);
            }
        }
        return r;
    }

private:
    const ProblemSpec& p_;
    int m_;
    double h_;
};

double max_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

double OracleSolution::interpolate(int component, double x) const {
    if (component < 0 || component > 1) throw Error(ErrorKind::usage, "component index must be 0 or 1");
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::usage, "x outside [0,1]");
    const std::vector<double>& y = component == 0 ? y1 : y2;
    const int m = static_cast<int>(nodes.size()) - 1;
    const int k = std::clamp(static_cast<int>(std::floor(x * m)) - 1, 0, m - 3);
    double sum = 0.0;
    for (int a = k; a < k + 4; ++a) {
        double w = 1.0;
        for (int b = k; b < k + 4; ++b) {
            if (b != a) w *= (x - nodes[static_cast<std::size_t>(b)]) / (nodes[static_cast<std::size_t>(a)] - nodes[static_cast<std::size_t>(b)]);
        }
        sum += w * y[static_cast<std::size_t>(a)];
    }
    return sum;
}

OracleSolution fd_solve(const ProblemSpec& p, int M, double newton_tol, int max_iters) {
    if (M < 16) throw Error(ErrorKind::usage, "fd_solve needs M >= 16");
    if (!(newton_tol > 0.0) || max_iters < 1) throw Error(ErrorKind::usage, "fd_solve: bad Newton settings");
    p.validate();

    const System sys(p, M);
    const auto baseline = build_baseline(p);
    Eigen::VectorXd y(sys.size());
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k <= M; ++k) y[sys.index(i, k)] = baseline[static_cast<std::size_t>(i)](static_cast<double>(k) / M);
    }

    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd r = sys.evaluate(y, &triplets);
    double norm = max_norm(r);
    int iter = 0;
    while (norm > newton_tol) {
        if (iter == max_iters) {
            throw Error(ErrorKind::no_convergence, "Newton did not converge in " + std::to_string(max_iters) +
                                                       " iterations; last residual " + std::to_string(norm));
        }
        ++iter;
        Eigen::SparseMatrix<double> J(sys.size(), sys.size());
        J.setFromTriplets(triplets.begin(), triplets.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(J);
        if (lu.info() != Eigen::Success) throw Error(ErrorKind::no_convergence, "singular Newton Jacobian");
        const Eigen::VectorXd step = lu.solve(-r);
        if (lu.info() != Eigen::Success || !step.allFinite()) {
            throw Error(ErrorKind::no_convergence, "singular Newton Jacobian");
        }

        double t = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving, t *= 0.5) {
            const Eigen::VectorXd trial = y + t * step;
            Eigen::VectorXd rt;
            try {
                rt = sys.evaluate(trial, nullptr);
            } catch (const Error&) {
                continue;  // pole hit by the trial point: shorten the step
            }
            const double nt = max_norm(rt);
            if (nt < norm || nt <= newton_tol) {
                y = trial;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // no decrease possible: accept if the step is at rounding level
            if (max_norm(step) <= 1e-13 * (1.0 + max_norm(y))) break;
            throw Error(ErrorKind::no_convergence,
                        "Newton line search failed after " + std::to_string(kMaxHalvings) +
                            " halvings; residual " + std::to_string(norm));
        }
        triplets.clear();
        r = sys.evaluate(y, &triplets);
        norm = max_norm(r);
    }

    OracleSolution out;
    out.iterations = iter;
    out.residual_norm = norm;
    out.nodes.resize(static_cast<std::size_t>(M) + 1);
    out.y1.resize(out.nodes.size());
    out.y2.resize(out.nodes.size());
    for (int k = 0; k <= M; ++k) {
        out.nodes[static_cast<std::size_t>(k)] = static_cast<double>(k) / M;
        out.y1[static_cast<std::size_t>(k)] = y[sys.index(0, k)];
        out.y2[static_cast<std::size_t>(k)] = y[sys.index(1, k)];
    }
    return out;
}

}  // namespace gfadm
