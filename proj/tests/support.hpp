#pragma once

// Shared helpers for the unit and acceptance tests.

#include "gfadm/kernels.hpp"
#include "gfadm/problem.hpp"
#include "gfadm/problem_file.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

inline std::string problem_path(const std::string& name) { return std::string(GFADM_PROBLEMS) + "/" + name; }

inline gfadm::ProblemFile bundled(const std::string& name) { return gfadm::load_problem_file(problem_path(name)); }

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// Term c * y1^p1 * y2^p2 of a bivariate polynomial.
struct Monomial {
    double c;
    unsigned p1;
    unsigned p2;
};

inline std::string to_text(const std::vector<Monomial>& f) {
    std::string s;
    char buf[64];
    for (const auto& m : f) {
        std::snprintf(buf, sizeof buf, "%s(%.17g)*y1^%u*y2^%u", s.empty() ? "" : " + ", m.c, m.p1, m.p2);
        s += buf;
    }
    return s.empty() ? "0" : s;
}

/// Plain untruncated product of coefficient vectors.
inline std::vector<double> full_product(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Expands f(sum y1_j L^j, sum y2_j L^j) completely as a polynomial in L and returns the first
/// `count` coefficients. Independent of the series module.
inline std::vector<double> brute_force_adomian(const std::vector<Monomial>& f, const std::vector<double>& y1,
                                               const std::vector<double>& y2) {
    std::vector<double> total(1, 0.0);
    for (const auto& m : f) {
        std::vector<double> term{m.c};
        for (unsigned k = 0; k < m.p1; ++k) term = full_product(term, y1);
        for (unsigned k = 0; k < m.p2; ++k) term = full_product(term, y2);
        if (term.size() > total.size()) total.resize(term.size(), 0.0);
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    }
    total.resize(y1.size(), 0.0);
    return total;
}

inline std::vector<Monomial> random_bivariate(std::mt19937_64& rng, unsigned max_degree) {
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::bernoulli_distribution keep(0.6);
    std::vector<Monomial> f;
    for (unsigned p1 = 0; p1 <= max_degree; ++p1) {
        for (unsigned p2 = 0; p1 + p2 <= max_degree; ++p2) {
            if (keep(rng)) f.push_back({coef(rng), p1, p2});
        }
    }
    if (f.empty()) f.push_back({coef(rng), 1, 0});
    return f;
}

/// Dirichlet problem on both components with the given right-hand sides.
inline gfadm::ProblemSpec lane_emden_pair(double alpha, double c1, double c2, const std::string& f1,
                                          const std::string& f2) {
    gfadm::ProblemSpec p;
    p.name = "pair";
    const double cs[2] = {c1, c2};
    const std::string fs[2] = {f1, f2};
    for (std::size_t i = 0; i < 2; ++i) {
        auto& c = p.components[i];
        c.op = gfadm::OperatorKind::lane_emden;
        c.alpha = alpha;
        c.right = {1.0, 0.0, cs[i]};
        c.rhs = gfadm::parse_expression(fs[i]);
    }
    return p;
}

/// Defects of u(x) = integral of G(x,s) s^alpha g(s) ds in the boundary value problem it should
/// solve: max ODE defect over interior points (five-point differences), the left condition, and
/// u(1) + shift u'(1).
struct DefiningProperty {
    double ode = 0.0;
    double left = 0.0;
    double right = 0.0;
};

inline DefiningProperty defining_property(const gfadm::KernelSpec& k, const std::function<double(double)>& g) {
    const double alpha = k.weight_exponent();
    const auto u = [&](double x) { return gfadm::kernel_apply(k, g, x); };
    DefiningProperty d;
    const double h = 1e-3;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double um2 = u(x - 2 * h), um1 = u(x - h), u0 = u(x), up1 = u(x + h), up2 = u(x + 2 * h);
        const double d2 = (-up2 + 16 * up1 - 30 * u0 + 16 * um1 - um2) / (12 * h * h);
        const double d1 = (-up2 + 8 * up1 - 8 * um1 + um2) / (12 * h);
        d.ode = std::max(d.ode, std::abs(d2 + alpha / x * d1 - g(x)));
    }
    const double hl = 1e-4;
    d.left = k.family == gfadm::KernelSpec::Family::lane_emden
                 ? std::abs((-3 * u(0.0) + 4 * u(hl) - u(2 * hl)) / (2 * hl))
                 : std::abs(u(0.0));
    const double hr = 0.002;  // six-point backward difference
    const double du1 = (137.0 / 60 * u(1.0) - 5 * u(1 - hr) + 5 * u(1 - 2 * hr) - 10.0 / 3 * u(1 - 3 * hr) +
                        1.25 * u(1 - 4 * hr) - 0.2 * u(1 - 5 * hr)) / hr;
    d.right = std::abs(u(1.0) + k.robin_shift * du1);
    return d;
}

inline std::vector<std::pair<gfadm::KernelSpec, std::string>> kernel_families() {
    std::vector<std::pair<gfadm::KernelSpec, std::string>> out;
    for (double a : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        for (double shift : {0.0, 0.5}) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "lane_emden alpha=%g shift=%g", a, shift);
            out.emplace_back(gfadm::KernelSpec::lane_emden(a, shift), buf);
        }
    }
    out.emplace_back(gfadm::KernelSpec::dirichlet_dirichlet(0.0, 0.0), "dirichlet_dirichlet");
    return out;
}

inline gfadm::Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, 6);
    std::vector<double> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return gfadm::Polynomial(v);
}

}  // namespace testsupport
