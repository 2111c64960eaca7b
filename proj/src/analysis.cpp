#include "gfadm/analysis.hpp"

#include "gfadm/adomian.hpp"
#include "gfadm/error.hpp"
#include "gfadm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

namespace gfadm {

namespace {

constexpr int kSearchPoints = 901;
constexpr double kSearchLo = 0.001;
constexpr double kSearchHi = 0.999;

/// Pointwise residual of psi_n for both components.
class ResidualEvaluator {
public:
    ResidualEvaluator(const ProblemSpec& p, const SolutionSeries& sol, int n, ResidualMethod method,
                      ResidualForm form)
        : p_(p), sol_(sol), n_(n), method_(method), form_(form) {
        if (n < 0 || n > sol.n_terms()) {
            throw Error(ErrorKind::usage, "residual: n outside the stored terms");
        }
        if (method == ResidualMethod::spectral) {
            approximants_.emplace(std::array<Approximant, 2>{sol.partial_sum(0, n), sol.partial_sum(1, n)});
        }
    }

    std::array<double, 2> operator()(double x) const {
        if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::usage, "residual abscissa outside [0,1]");
        std::array<double, 2> defect = method_ == ResidualMethod::spectral ? spectral(x) : identity(x);
        for (std::size_t i = 0; i < 2; ++i) {
            defect[i] = std::abs(defect[i]);
            if (form_ == ResidualForm::divergence) {
                const double alpha = p_.components[i].shape();
                if (alpha != 0.0) defect[i] *= std::pow(x, alpha);
            }
        }
        return defect;
    }

private:
    std::array<double, 2> spectral(double x) const {
        const Jet j1 = (*approximants_)[0](x);
        const Jet j2 = (*approximants_)[1](x);
        const std::array<Jet, 2> jets{j1, j2};
        std::array<double, 2> out{};
        for (std::size_t i = 0; i < 2; ++i) {
            const double alpha = p_.components[i].shape();
            const Jet& j = jets[i];
            const double lpsi = x == 0.0 ? (1.0 + alpha) * j.d2 : j.d2 + alpha / x * j.d1;
            out[i] = lpsi - eval_scalar(p_.components[i].rhs, x, j1.value, j2.value);
        }
        return out;
    }

    std::array<double, 2> identity(double x) const {
        std::vector<double> y1(static_cast<std::size_t>(n_) + 1);
        std::vector<double> y2(static_cast<std::size_t>(n_) + 1);
        double psi1 = 0.0;
        double psi2 = 0.0;
        for (int j = 0; j <= n_; ++j) {
            y1[static_cast<std::size_t>(j)] = sol_.term(0, j, x);
            y2[static_cast<std::size_t>(j)] = sol_.term(1, j, x);
            psi1 += y1[static_cast<std::size_t>(j)];
            psi2 += y2[static_cast<std::size_t>(j)];
        }
        std::array<double, 2> out{};
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& f = p_.components[i].rhs;
            double lpsi = 0.0;
            if (n_ > 0) {
                const std::span<const double> t1(y1.data(), static_cast<std::size_t>(n_));
                const std::span<const double> t2(y2.data(), static_cast<std::size_t>(n_));
                for (double a : adomian_coefficients(f, x, t1, t2)) lpsi += a;
            }
            out[i] = lpsi - eval_scalar(f, x, psi1, psi2);
        }
        return out;
    }

    const ProblemSpec& p_;
    const SolutionSeries& sol_;
    int n_;
    ResidualMethod method_;
    ResidualForm form_;
    std::optional<std::array<Approximant, 2>> approximants_;
};

double golden_max(const std::function<double(double)>& f, double a, double b) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 50 && b - a > 1e-10; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

ResidualReport residual(const ProblemSpec& p, const SolutionSeries& sol, int n, std::span<const double> xs,
                        ResidualMethod method, ResidualForm form) {
    const ResidualEvaluator eval(p, sol, n, method, form);
    ResidualReport report;
    report.n = n;
    report.method = method;
    report.form = form;
    for (double x : xs) {
        const auto r = eval(x);
        report.points.push_back({x, r[0], r[1]});
        report.maxr1 = std::max(report.maxr1, r[0]);
        report.maxr2 = std::max(report.maxr2, r[1]);
    }
    return report;
}

std::array<double, 2> max_residual(const ProblemSpec& p, const SolutionSeries& sol, int n,
                                   ResidualMethod method, ResidualForm form) {
    const ResidualEvaluator eval(p, sol, n, method, form);
    const double h = (kSearchHi - kSearchLo) / (kSearchPoints - 1);
    std::vector<std::array<double, 2>> samples(kSearchPoints);
    for (int k = 0; k < kSearchPoints; ++k) samples[static_cast<std::size_t>(k)] = eval(kSearchLo + h * k);

    std::array<double, 2> out{};
    for (std::size_t i = 0; i < 2; ++i) {
        int best = 0;
        for (int k = 1; k < kSearchPoints; ++k) {
            if (samples[static_cast<std::size_t>(k)][i] > samples[static_cast<std::size_t>(best)][i]) best = k;
        }
        const double a = kSearchLo + h * std::max(best - 1, 0);
        const double b = kSearchLo + h * std::min(best + 1, kSearchPoints - 1);
        const double refined = golden_max([&](double x) { return eval(x)[i]; }, a, b);
        out[i] = std::max(samples[static_cast<std::size_t>(best)][i], refined);
    }
    return out;
}

LipschitzConstants lipschitz_estimate(const Expression& f1, const Expression& f2, const Box& box, int samples) {
    if (samples < 2) throw Error(ErrorKind::usage, "lipschitz_estimate needs at least 2 samples per axis");
    for (const Range* r : {&box.x, &box.y1, &box.y2}) {
        if (!(r->hi >= r->lo)) throw Error(ErrorKind::usage, "lipschitz_estimate: empty box");
    }
    const auto step = [](const Range& r) { return 1e-6 * std::max(r.hi - r.lo, 1.0e-3); };
    const double h1 = step(box.y1);
    const double h2 = step(box.y2);
    const auto at = [samples](const Range& r, int k) {
        return r.lo + (r.hi - r.lo) * static_cast<double>(k) / (samples - 1);
    };

    LipschitzConstants out;
    for (int a = 0; a < samples; ++a) {
        const double x = at(box.x, a);
        for (int b = 0; b < samples; ++b) {
            const double y1 = at(box.y1, b);
            for (int c = 0; c < samples; ++c) {
                const double y2 = at(box.y2, c);
                try {
                    for (const Expression* f : {&f1, &f2}) {
                        const double d1 = (eval_scalar(*f, x, y1 + h1, y2) - eval_scalar(*f, x, y1 - h1, y2)) / (2 * h1);
                        const double d2 = (eval_scalar(*f, x, y1, y2 + h2) - eval_scalar(*f, x, y1, y2 - h2)) / (2 * h2);
                        if (!std::isfinite(d1) || !std::isfinite(d2)) {
                            throw Error(ErrorKind::evaluation, "non-finite derivative");
                        }
                        out.l1 = std::max(out.l1, std::abs(d1));
                        out.l2 = std::max(out.l2, std::abs(d2));
                    }
                } catch (const Error& e) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, " (pole inside the Lipschitz box near x=%.6g, y1=%.6g, y2=%.6g)",
                                  x, y1, y2);
                    throw Error(ErrorKind::evaluation, e.what() + std::string(buf));
                }
            }
        }
    }
    out.l1 *= 1.1;
    out.l2 *= 1.1;
    return out;
}

double error_bound(double m, double l, double max_f0, int n) {
    if (n < 0) throw Error(ErrorKind::usage, "error_bound: n must be >= 0");
    if (max_f0 < 0.0) throw Error(ErrorKind::usage, "error_bound: max_f0 must be >= 0");
    const double gamma = 2.0 * m * l;
    if (!(gamma < 1.0)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "convergence bound inapplicable: gamma = 2 m l = %.6g >= 1", gamma);
        throw Error(ErrorKind::bound_inapplicable, buf);
    }
    return std::pow(gamma, n) * m / (1.0 - gamma) * max_f0;
}

Box solution_box(const SolutionSeries& sol, double padding) {
    constexpr int kPoints = 201;
    std::array<Range, 2> r{Range{INFINITY, -INFINITY}, Range{INFINITY, -INFINITY}};
    for (int i = 0; i < 2; ++i) {
        for (int n = 0; n <= sol.n_terms(); ++n) {
            const Approximant psi = sol.partial_sum(i, n);
            for (int k = 0; k < kPoints; ++k) {
                const double v = psi.value(static_cast<double>(k) / (kPoints - 1));
                r[static_cast<std::size_t>(i)].lo = std::min(r[static_cast<std::size_t>(i)].lo, v);
                r[static_cast<std::size_t>(i)].hi = std::max(r[static_cast<std::size_t>(i)].hi, v);
            }
        }
    }
    for (auto& range : r) {
        const double width = range.hi - range.lo;
        const double pad = padding * (width > 0.0 ? width : std::max(1.0, std::abs(range.lo)));
        range.lo -= pad;
        range.hi += pad;
    }
    return Box{Range{0.0, 1.0}, r[0], r[1]};
}

ConvergenceEstimate estimate_convergence(const ProblemSpec& p, const SolutionSeries& sol, int samples) {
    ConvergenceEstimate est;
    est.m = std::max(kernel_bound_m(p.components[0].kernel()), kernel_bound_m(p.components[1].kernel()));
    est.box = solution_box(sol);
    est.lipschitz = lipschitz_estimate(p.components[0].rhs, p.components[1].rhs, est.box, samples);
    est.gamma = 2.0 * est.m * est.lipschitz.l();

    const auto baseline = build_baseline(p);
    constexpr int kPoints = 201;
    for (int k = 0; k < kPoints; ++k) {
        const double x = static_cast<double>(k) / (kPoints - 1);
        for (const auto& c : p.components) {
            est.max_f0 = std::max(est.max_f0, std::abs(eval_scalar(c.rhs, x, baseline[0](x), baseline[1](x))));
        }
    }
    return est;
}

double partial_sum_distance(const SolutionSeries& sol, int a, int b) {
    constexpr int kPoints = 401;
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        const Approximant pa = sol.partial_sum(i, a);
        const Approximant pb = sol.partial_sum(i, b);
        for (int k = 0; k < kPoints; ++k) {
            const double x = static_cast<double>(k) / (kPoints - 1);
            d = std::max(d, std::abs(pa.value(x) - pb.value(x)));
        }
    }
    return d;
}

void write_points_csv(std::ostream& out, const ResidualReport& report) {
    out << "x,r1,r2\n";
    char buf[96];
    for (const auto& pt : report.points) {
        std::snprintf(buf, sizeof buf, "%.7g,%.5e,%.5e\n", pt.x, pt.r1, pt.r2);
        out << buf;
    }
}

void write_summary_csv(std::ostream& out, std::span<const ResidualReport> reports) {
    out << "n,maxr1,maxr2\n";
    char buf[96];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%d,%.5e,%.5e\n", r.n, r.maxr1, r.maxr2);
        out << buf;
    }
}

}  // namespace gfadm
