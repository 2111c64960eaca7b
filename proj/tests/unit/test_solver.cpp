#include "gfadm/solver.hpp"
#include "gfadm/adomian.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfadm;
using testsupport::bundled;

TEST_CASE("baselines") {
    auto b = build_baseline(bundled("example1_k1.cfg").spec);
    CHECK(b[0].coeff(0) == 1.0);
    CHECK(b[1].coeff(0) == 2.0);
    b = build_baseline(bundled("example2_alpha2.cfg").spec);
    CHECK(b[0].coeff(0) == 1.0);
    CHECK(b[1].coeff(0) == 1.0);
    b = build_baseline(bundled("example3.cfg").spec);
    CHECK(b[0].coeff(0) == 1.0);
    CHECK(b[0].coeff(1) == -0.5);
    CHECK(b[1].coeff(0) == 1.0);
}

TEST_CASE("first iterate with the operator sign as written") {
    // L y = -y1^2 - 0.4 y1 y2: A_{1,0} = -1.8, image of 1 is (x^2 - 1)/6
    const auto p = testsupport::lane_emden_pair(2.0, 1.0, 2.0, "-1*y1^2-0.4*y1*y2", "-0.5*y1^2-y1*y2");
    for (Backend be : {Backend::grid, Backend::exact_polynomial}) {
        SolveOptions opt;
        opt.n_terms = 1;
        opt.backend = be;
        const auto sol = gfadm_solve(p, opt);
        for (double x : {0.0, 0.25, 0.5, 1.0}) CHECK(sol.term(0, 1, x) == doctest::Approx(0.3 * (1 - x * x)).epsilon(1e-12));
    }
}

TEST_CASE("bundled problems: first iterate and printed values") {
    SolveOptions opt;
    opt.n_terms = 10;
    const auto e1 = bundled("example1_k1.cfg").spec;
    const auto sol = gfadm_solve(e1, opt);
    CHECK(sol.term(0, 1, 0.5) == doctest::Approx(-0.3 * 0.75).epsilon(1e-12));
    CHECK(std::abs(evaluate_partial_sum(sol, 10, 0.9)[0] - 0.9536120) < 5e-7);

    opt.n_terms = 4;
    const auto e2 = gfadm_solve(bundled("example2_alpha2.cfg").spec, opt);
    const auto psi = evaluate_partial_sum(e2, 4, 0.5);
    CHECK(std::abs(psi[0] - 1.4998959) < 5e-7);
    CHECK(std::abs(psi[1] - 1.0187468) < 5e-7);

    CHECK_THROWS_AS((void)evaluate_partial_sum(e2, 5, 0.5), Error);
    CHECK_THROWS_AS((void)evaluate_partial_sum(e2, 4, 1.5), Error);
}

TEST_CASE("symmetric case keeps psi2 - psi1 = 1") {
    SolveOptions opt;
    opt.n_terms = 11;
    const auto sol = gfadm_solve(bundled("example1_sym.cfg").spec, opt);
    for (int n = 0; n <= 11; ++n) {
        const auto a = sol.partial_sum(0, n);
        const auto b = sol.partial_sum(1, n);
        for (double x : sol.grid()->nodes()) CHECK(std::abs(b.value(x) - a.value(x) - 1.0) < 1e-10);
    }
}

TEST_CASE("boundary exactness and the term ODE property") {
    for (const char* name : {"example1_k1.cfg", "example2_alpha1.cfg", "example2_alpha3.cfg", "example3.cfg"}) {
        CAPTURE(name);
        const auto pf = bundled(name);
        SolveOptions opt;
        opt.n_terms = 6;
        const auto sol = gfadm_solve(pf.spec, opt);
        for (int i = 0; i < 2; ++i) {
            const auto& c = pf.spec.components[static_cast<std::size_t>(i)];
            for (int n = 0; n <= 6; ++n) {
                const Jet at1 = sol.partial_sum(i, n)(1.0);
                CHECK(std::abs(at1.value - c.right.c / c.right.a) < 1e-9);
                if (c.left.kind == LeftCondition::Kind::neumann0) {
                    CHECK(std::abs(sol.partial_sum(i, n)(0.0).d1) < 1e-6);
                } else {
                    CHECK(std::abs(sol.partial_sum(i, n)(0.0).value - c.left.value) < 1e-9);
                }
            }
            const auto& terms = sol.grid_terms(i);
            const auto& rows = sol.grid_adomian_rows(i);
            const double alpha = c.shape();
            for (std::size_t j = 1; j < terms.size(); ++j) {
                const auto d1 = terms[j].derivative();
                const auto d2 = d1.derivative();
                for (std::size_t k = 0; k < sol.grid()->size(); ++k) {
                    const double x = sol.grid()->nodes()[k];
                    const double ly = x == 0.0 ? (1 + alpha) * d2.values()[k] : d2.values()[k] + alpha / x * d1.values()[k];
                    CHECK(std::abs(ly - rows[j - 1].values()[k]) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("grid and exact backends agree") {
    const auto p = bundled("example1_k1.cfg").spec;
    SolveOptions opt;
    opt.n_terms = 10;
    const auto g = gfadm_solve(p, opt);
    opt.backend = Backend::exact_polynomial;
    const auto e = gfadm_solve(p, opt);
    for (int n = 0; n <= 10; ++n) {
        for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            const auto a = evaluate_partial_sum(g, n, x);
            const auto b = evaluate_partial_sum(e, n, x);
            CHECK(std::abs(a[0] - b[0]) < 1e-9);
            CHECK(std::abs(a[1] - b[1]) < 1e-9);
        }
    }
    // exact degree: 2 j for quadratic f
    CHECK(e.poly_terms(0)[5].degree() == 10);
}

TEST_CASE("serial and parallel paths match bitwise") {
    for (const char* name : {"example2_alpha1.cfg", "example3.cfg"}) {
        const auto p = bundled(name).spec;
        SolveOptions opt;
        opt.n_terms = 5;
        opt.execution = ExecutionPolicy::serial;
        const auto s = gfadm_solve(p, opt);
        opt.execution = ExecutionPolicy::parallel;
        const auto q = gfadm_solve(p, opt);
        for (int i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j <= 5; ++j) {
                const auto a = s.grid_terms(i)[j].values();
                const auto b = q.grid_terms(i)[j].values();
                for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
            }
        }
    }
}

TEST_CASE("zero right-hand side and Robin condition") {
    auto p = testsupport::lane_emden_pair(2.0, 3.0, -1.0, "0", "0");
    SolveOptions opt;
    opt.n_terms = 3;
    auto sol = gfadm_solve(p, opt);
    for (double x : {0.0, 0.3, 1.0}) {
        CHECK(evaluate_partial_sum(sol, 3, x)[0] == doctest::Approx(3.0));
        CHECK(evaluate_partial_sum(sol, 3, x)[1] == doctest::Approx(-1.0));
    }

    // 2 y(1) + y'(1) = 4
    p = testsupport::lane_emden_pair(1.0, 4.0, 4.0, "y1*y2/4", "1");
    for (auto& c : p.components) c.right = {2.0, 1.0, 4.0};
    opt.n_terms = 6;
    sol = gfadm_solve(p, opt);
    for (int i = 0; i < 2; ++i) {
        const Jet j = sol.partial_sum(i, 6)(1.0);
        CHECK(std::abs(2 * j.value + j.d1 - 4.0) < 1e-8);
    }
}

TEST_CASE("solver errors") {
    SolveOptions opt;
    opt.n_terms = 2;
    opt.backend = Backend::exact_polynomial;
    try {
        (void)gfadm_solve(bundled("example3.cfg").spec, opt);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_backend);
    }
    try {
        (void)gfadm_solve(testsupport::lane_emden_pair(1.0, 1.0, 1.0, "y1", "y2"), opt);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_backend);
    }
    opt.n_terms = 8;
    try {
        (void)gfadm_solve(testsupport::lane_emden_pair(2.0, 1.0, 1.0, "x^10*y1", "y2"), opt);
        FAIL("expected degree cap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::numeric);
    }

    opt.backend = Backend::grid;
    opt.n_terms = 2;
    try {
        (void)gfadm_solve(testsupport::lane_emden_pair(2.0, 0.0, 1.0, "1/y1", "y2"), opt);
        FAIL("expected singular division");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::singular_division);
    }

    auto bad = testsupport::lane_emden_pair(2.0, 1.0, 1.0, "y1", "y2");
    bad.components[0].left = {LeftCondition::Kind::dirichlet, 1.0};
    CHECK_THROWS_AS((void)gfadm_solve(bad, opt), Error);
    bad = testsupport::lane_emden_pair(2.0, 1.0, 1.0, "y1", "y2");
    bad.components[1].right.a = 0.0;
    CHECK_THROWS_AS((void)gfadm_solve(bad, opt), Error);
}
