#include "gfadm/solver.hpp"

#include "gfadm/adomian.hpp"
#include "gfadm/error.hpp"
#include "gfadm/kernels.hpp"

#include <cmath>
#include <string>

namespace gfadm {

namespace {

constexpr double kBoundaryTolerance = 1e-10;

std::vector<double> column(const std::vector<GridFunction>& terms, std::size_t node, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = terms[static_cast<std::size_t>(j)].values()[node];
    return out;
}

void solve_on_grid(const ProblemSpec& p, const std::array<KernelSpec, 2>& kernels,
                   const std::array<Polynomial, 2>& baseline, const SolveOptions& opt,
                   std::shared_ptr<const ChebyshevGrid> grid,
                   std::array<std::vector<GridFunction>, 2>& terms,
                   std::array<std::vector<GridFunction>, 2>& rows) {
    const std::size_t npts = grid->size();
    const auto nodes = grid->nodes();
    for (int i = 0; i < 2; ++i) {
        terms[i].push_back(GridFunction::sample(grid, [&](double x) { return baseline[i](x); }));
    }

    for (int j = 1; j <= opt.n_terms; ++j) {
        std::array<std::vector<double>, 2> a{std::vector<double>(npts), std::vector<double>(npts)};
        for_each_index(opt.execution, npts, [&](std::size_t k) {
            const auto y1 = column(terms[0], k, j);
            const auto y2 = column(terms[1], k, j);
            for (int i = 0; i < 2; ++i) {
                a[i][k] = adomian_coefficients(p.components[i].rhs, nodes[k], y1, y2)[static_cast<std::size_t>(j - 1)];
            }
        });
        for (int i = 0; i < 2; ++i) rows[i].emplace_back(grid, std::move(a[i]));

        std::array<std::vector<double>, 2> y{std::vector<double>(npts), std::vector<double>(npts)};
        for_each_index(opt.execution, npts, [&](std::size_t k) {
            for (int i = 0; i < 2; ++i) y[i][k] = kernel_apply(kernels[i], rows[i].back(), nodes[k]);
        });
        for (int i = 0; i < 2; ++i) terms[i].emplace_back(grid, std::move(y[i]));
    }
}

void solve_exact(const ProblemSpec& p, const std::array<KernelSpec, 2>& kernels,
                 const std::array<Polynomial, 2>& baseline, const SolveOptions& opt,
                 std::array<std::vector<Polynomial>, 2>& terms,
                 std::array<std::vector<Polynomial>, 2>& rows) {
    for (int i = 0; i < 2; ++i) {
        if (!p.components[i].rhs.is_polynomial()) {
            throw Error(ErrorKind::unsupported_backend,
                        "exact polynomial backend needs polynomial right-hand sides (no division)");
        }
        if (kernels[i].family == KernelSpec::Family::lane_emden && kernels[i].alpha == 1.0) {
            throw Error(ErrorKind::unsupported_backend,
                        "exact polynomial backend does not support the logarithmic kernel (alpha = 1)");
        }
        terms[i].push_back(baseline[i]);
    }

    const Polynomial x = Polynomial::monomial(1);
    for (int j = 1; j <= opt.n_terms; ++j) {
        std::array<Polynomial, 2> a;
        for (int i = 0; i < 2; ++i) {
            a[i] = adomian_coefficients_in<Polynomial>(p.components[i].rhs, x, terms[0], terms[1])
                       [static_cast<std::size_t>(j - 1)];
        }
        for (int i = 0; i < 2; ++i) {
            Polynomial y;
            for (std::size_t m = 0; m < a[i].coeffs().size(); ++m) {
                const double c = a[i].coeffs()[m];
                if (c != 0.0) y += c * kernel_monomial_image(kernels[i], static_cast<unsigned>(m));
            }
            if (y.degree() > kMaxExactDegree) {
                throw Error(ErrorKind::numeric, "exact backend term y_" + std::to_string(i + 1) + "," +
                                                    std::to_string(j) + " exceeds the degree cap " +
                                                    std::to_string(kMaxExactDegree));
            }
            rows[i].push_back(std::move(a[i]));
            terms[i].push_back(std::move(y));
        }
    }
}

}  // namespace

Approximant::Approximant(const GridFunction& values) : is_grid_(true) {
    grid_.push_back(values);
    grid_.push_back(grid_[0].derivative());
    grid_.push_back(grid_[1].derivative());
}

Approximant::Approximant(Polynomial p) {
    poly_[0] = std::move(p);
    poly_[1] = poly_[0].derivative();
    poly_[2] = poly_[1].derivative();
}

Jet Approximant::operator()(double x) const {
    if (is_grid_) return {grid_[0](x), grid_[1](x), grid_[2](x)};
    return {poly_[0](x), poly_[1](x), poly_[2](x)};
}

double Approximant::value(double x) const { return is_grid_ ? grid_[0](x) : poly_[0](x); }

void SolutionSeries::require_index(int component, int n) const {
    if (component < 0 || component > 1) throw Error(ErrorKind::usage, "component index must be 0 or 1");
    if (n < 0 || n > n_terms_) {
        throw Error(ErrorKind::usage, "term index " + std::to_string(n) + " outside 0.." +
                                          std::to_string(n_terms_));
    }
}

const std::vector<GridFunction>& SolutionSeries::grid_terms(int component) const {
    require_index(component, 0);
    if (backend_ != Backend::grid) throw Error(ErrorKind::usage, "solution was not computed on a grid");
    return grid_terms_[static_cast<std::size_t>(component)];
}

const std::vector<GridFunction>& SolutionSeries::grid_adomian_rows(int component) const {
    require_index(component, 0);
    if (backend_ != Backend::grid) throw Error(ErrorKind::usage, "solution was not computed on a grid");
    return grid_rows_[static_cast<std::size_t>(component)];
}

const std::vector<Polynomial>& SolutionSeries::poly_terms(int component) const {
    require_index(component, 0);
    if (backend_ != Backend::exact_polynomial) throw Error(ErrorKind::usage, "solution has no polynomial terms");
    return poly_terms_[static_cast<std::size_t>(component)];
}

const std::vector<Polynomial>& SolutionSeries::poly_adomian_rows(int component) const {
    require_index(component, 0);
    if (backend_ != Backend::exact_polynomial) throw Error(ErrorKind::usage, "solution has no polynomial terms");
    return poly_rows_[static_cast<std::size_t>(component)];
}

double SolutionSeries::term(int component, int j, double x) const {
    require_index(component, j);
    const auto c = static_cast<std::size_t>(component);
    const auto jj = static_cast<std::size_t>(j);
    return backend_ == Backend::grid ? grid_terms_[c][jj](x) : poly_terms_[c][jj](x);
}

Approximant SolutionSeries::partial_sum(int component, int n) const {
    require_index(component, n);
    const auto c = static_cast<std::size_t>(component);
    if (backend_ == Backend::exact_polynomial) return Approximant(partial_sum_polynomial(component, n));
    std::vector<double> sum(grid_->size(), 0.0);
    for (int j = 0; j <= n; ++j) {
        const auto v = grid_terms_[c][static_cast<std::size_t>(j)].values();
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
    }
    return Approximant(GridFunction(grid_, std::move(sum)));
}

Polynomial SolutionSeries::partial_sum_polynomial(int component, int n) const {
    require_index(component, n);
    if (backend_ != Backend::exact_polynomial) throw Error(ErrorKind::usage, "solution has no polynomial terms");
    Polynomial sum;
    for (int j = 0; j <= n; ++j) sum += poly_terms_[static_cast<std::size_t>(component)][static_cast<std::size_t>(j)];
    return sum;
}

std::array<Polynomial, 2> build_baseline(const ProblemSpec& p) {
    std::array<Polynomial, 2> out;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& c = p.components[i];
        const KernelSpec k = c.kernel();
        const double right = c.right.c / c.right.a;
        if (k.family == KernelSpec::Family::dirichlet_dirichlet) {
            out[i] = Polynomial{c.left.value, right - c.left.value};
        } else {
            out[i] = Polynomial(right);
        }
    }
    return out;
}

SolutionSeries gfadm_solve(const ProblemSpec& p, const SolveOptions& options) {
    if (options.n_terms < 0) throw Error(ErrorKind::usage, "n_terms must be >= 0");
    p.validate();
    const std::array<KernelSpec, 2> kernels{p.components[0].kernel(), p.components[1].kernel()};
    const auto baseline = build_baseline(p);

    SolutionSeries sol;
    sol.backend_ = options.backend;
    sol.problem_ = p;
    sol.n_terms_ = options.n_terms;
    if (options.backend == Backend::grid) {
        sol.grid_ = std::make_shared<const ChebyshevGrid>(options.grid_size);
        solve_on_grid(p, kernels, baseline, options, sol.grid_, sol.grid_terms_, sol.grid_rows_);
        for (int i = 0; i < 2; ++i) {
            const auto& c = p.components[static_cast<std::size_t>(i)];
            if (c.right.b != 0.0) continue;
            for (int j = 1; j <= options.n_terms; ++j) {
                const double at_one = sol.grid_terms_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].values().back();
                if (std::abs(at_one) > kBoundaryTolerance) {
                    throw Error(ErrorKind::numeric, "term does not vanish at x = 1");
                }
            }
        }
    } else {
        solve_exact(p, kernels, baseline, options, sol.poly_terms_, sol.poly_rows_);
    }
    return sol;
}

std::array<double, 2> evaluate_partial_sum(const SolutionSeries& sol, int n, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::usage, "x outside [0,1]");
    std::array<double, 2> out{0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(i)] += sol.term(i, j, x);
    }
    return out;
}

}  // namespace gfadm
