#include "gfadm/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace gfadm;

TEST_CASE("Gauss-Legendre rule") {
    const auto& r = gauss_legendre32();
    REQUIRE(r.nodes.size() == 32);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    // exact through degree 63
    for (int d : {0, 1, 10, 31, 62, 63}) {
        const double got = gauss_legendre_panel([d](double x) { return std::pow(x, d); }, 0.0, 1.0);
        CHECK(got == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
    }
    const auto r3 = make_gauss_legendre(3);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)));
    CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("adaptive panels") {
    const std::vector<double> bp{0.0, 0.5, 1.0};
    CHECK(integrate_panels([](double s) { return std::sqrt(s); }, bp) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_panels([](double s) { return s * std::log(s); }, std::vector<double>{1e-300, 1.0}) ==
          doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("unresolvable integrand reports the estimate") {
    QuadratureOptions opt;
    opt.max_depth = 2;
    try {
        (void)integrate_panels([](double s) { return std::sin(1.0 / (s + 1e-4)); }, std::vector<double>{0.0, 1.0}, opt);
        FAIL("expected numeric error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::numeric);
        CHECK(std::string(e.what()).find("estimate") != std::string::npos);
    }
}
