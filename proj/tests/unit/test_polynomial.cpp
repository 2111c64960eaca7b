#include "gfadm/polynomial.hpp"
#include "gfadm/error.hpp"

#include <doctest.h>

using gfadm::Polynomial;

TEST_CASE("polynomial basics") {
    const Polynomial p{1.0, -2.0, 3.0};
    CHECK(p.degree() == 2);
    CHECK(p(2.0) == doctest::Approx(9.0));
    CHECK(p.derivative().coeff(0) == -2.0);
    CHECK(p.derivative().coeff(1) == 6.0);
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{1.0, 0.0, 0.0}.degree() == 0);
    CHECK((p - p).is_zero());
    CHECK(Polynomial::monomial(3, 2.0)(0.5) == doctest::Approx(0.25));
}

TEST_CASE("polynomial product") {
    const Polynomial a{1.0, 1.0};
    const Polynomial sq = a * a;
    REQUIRE(sq.degree() == 2);
    CHECK(sq.coeff(0) == 1.0);
    CHECK(sq.coeff(1) == 2.0);
    CHECK(sq.coeff(2) == 1.0);
    CHECK((2.0 * a).coeff(1) == 2.0);
    CHECK((-a).coeff(0) == -1.0);
}

TEST_CASE("polynomial reciprocal is unsupported") {
    try {
        (void)gfadm::reciprocal(Polynomial{1.0, 1.0});
        FAIL("expected throw");
    } catch (const gfadm::Error& e) {
        CHECK(e.kind() == gfadm::ErrorKind::unsupported_backend);
    }
}
