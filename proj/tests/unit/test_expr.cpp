#include "gfadm/expr.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gfadm;

TEST_CASE("parse and evaluate the spec examples") {
    CHECK(eval_scalar(parse_expression("-1*y1^2 - 0.4*y1*y2"), 0.0, 1.0, 2.0) == doctest::Approx(-1.8));
    CHECK(eval_scalar(parse_expression("x"), 0.3, 9.0, 9.0) == 0.3);
    CHECK(eval_scalar(parse_expression("y1/(1+y1+3*y2)"), 0.0, 1.0, 1.0) == doctest::Approx(0.2));
    const auto f2 = parse_expression("0.1*y1*y2/((0.0001+y1)*(0.0001+y2)) + 0.05*y1*y2/((0.0001+y1)*(0.0001+y2))");
    CHECK(eval_scalar(f2, 0.0, 1.0, 1.0) == doctest::Approx(0.15 / (1.0001 * 1.0001)).epsilon(1e-14));
    CHECK(eval_scalar(f2, 0.0, 1.0, 1.0) == doctest::Approx(0.149970).epsilon(1e-6));
    CHECK(eval_scalar(parse_expression("2.5"), 0.7, 3.0, -1.0) == 2.5);
    CHECK(eval_scalar(parse_expression("y1*y2"), 0.1, 0.0, 7.0) == 0.0);
}

TEST_CASE("precedence and associativity") {
    CHECK(eval_scalar(parse_expression("2^3^2"), 0, 0, 0) == 512.0);
    CHECK(eval_scalar(parse_expression("-x^2"), 3.0, 0, 0) == -9.0);
    CHECK(eval_scalar(parse_expression("1 - 2 - 3"), 0, 0, 0) == -4.0);
    CHECK(eval_scalar(parse_expression("8/4/2"), 0, 0, 0) == 1.0);
    CHECK(eval_scalar(parse_expression("1 + 2*3"), 0, 0, 0) == 7.0);
    CHECK(eval_scalar(parse_expression("(1 + 2)*3"), 0, 0, 0) == 9.0);
    CHECK(eval_scalar(parse_expression("y1^(2)"), 0, 3.0, 0) == 9.0);
    CHECK(eval_scalar(parse_expression("y2^0"), 0, 3.0, 5.0) == 1.0);
    CHECK(eval_scalar(parse_expression("1e-4*y1"), 0, 2.0, 0) == doctest::Approx(2e-4));
}

TEST_CASE("parse errors carry a position") {
    const char* bad[] = {"y1^0.5", "y1^-1", "y1 +", "(y1", "z", "y3", "2 y1", "y1^y2", ""};
    for (const char* text : bad) {
        CAPTURE(text);
        try {
            (void)parse_expression(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ErrorKind::parse);
        }
    }
    try {
        (void)parse_expression("y1 + * 2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("division by zero") {
    try {
        (void)eval_scalar(parse_expression("1/(y1-1)"), 0.0, 1.0, 0.0);
        FAIL("expected evaluation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::evaluation);
    }
}

TEST_CASE("series evaluation examples") {
    const TruncatedSeries any({5.0, 1.0, 2.0});
    auto r = eval_series(parse_expression("y1^2"), 0.0, TruncatedSeries({1.0, 0.3, 0.0}), any);
    CHECK(r[0] == doctest::Approx(1.0));
    CHECK(r[1] == doctest::Approx(0.6));
    CHECK(r[2] == doctest::Approx(0.09));

    const double a = 0.7, b = -1.3;
    r = eval_series(parse_expression("y1*y2"), 0.0, TruncatedSeries({1.0, a, 0.0}), TruncatedSeries({2.0, b, 0.0}));
    CHECK(r[0] == doctest::Approx(2.0));
    CHECK(r[1] == doctest::Approx(2 * a + b));
    CHECK(r[2] == doctest::Approx(a * b));

    const double t = 0.37;
    r = eval_series(parse_expression("y1/(1+y1)"), 0.0, TruncatedSeries({1.0, t, 0.0, 0.0}),
                    TruncatedSeries({0.0, 0.0, 0.0, 0.0}));
    CHECK(r[0] == doctest::Approx(0.5));
    CHECK(r[1] == doctest::Approx(t / 4));
    CHECK(r[2] == doctest::Approx(-t * t / 8));
    CHECK(r[3] == doctest::Approx(t * t * t / 16));

    r = eval_series(parse_expression("x*y1"), 0.5, TruncatedSeries({2.0, 4.0}), TruncatedSeries({0.0, 0.0}));
    CHECK(r[0] == 1.0);
    CHECK(r[1] == 2.0);

    CHECK_THROWS_AS((void)eval_series(parse_expression("y1"), 0.0, TruncatedSeries(std::vector<double>{1.0}), TruncatedSeries({1.0, 2.0})),
                    Error);
}

TEST_CASE("series evaluation is consistent with scalar evaluation and finite differences") {
    const char* exprs[] = {"y1^2 + 0.4*y1*y2", "y1*y2/(1 + y1 + 3*y2)", "x*y1 - y2^3/(2 + y1^2)",
                           "1 - 5*y1*y2/((0.0001+y1)*(0.0001+y2))", "(y1 - y2)^4 + x^2"};
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.2, 1.5), v(-0.5, 0.5), xs(0.0, 1.0);
    for (const char* text : exprs) {
        const Expression e = parse_expression(text);
        for (int trial = 0; trial < 20; ++trial) {
            const double x = xs(rng), a0 = u(rng), b0 = u(rng), a1 = v(rng), b1 = v(rng);
            const auto s = eval_series(e, x, TruncatedSeries({a0, a1, 0.0}), TruncatedSeries({b0, b1, 0.0}));
            CHECK(std::abs(s[0] - eval_scalar(e, x, a0, b0)) <= 1e-14 * std::max(1.0, std::abs(s[0])));
            const double h = 1e-5;
            const double fd = (eval_scalar(e, x, a0 + h * a1, b0 + h * b1) - eval_scalar(e, x, a0 - h * a1, b0 - h * b1)) / (2 * h);
            CHECK(std::abs(s[1] - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("printing round trip") {
    const char* exprs[] = {"-1*y1^2 - 0.4*y1*y2", "y1*y2/(1 + y1 + 3*y2)", "-(x - -y2)^3 / (2 + y1^2)",
                           "0.1 - -0.2*x", "2^3^2*y1"};
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const char* text : exprs) {
        const Expression e = parse_expression(text);
        const Expression back = parse_expression(e.to_string());
        CAPTURE(e.to_string());
        for (int k = 0; k < 100; ++k) {
            const double x = u(rng), y1 = u(rng), y2 = u(rng);
            double want = 0.0;
            try {
                want = eval_scalar(e, x, y1, y2);
            } catch (const Error&) {
                continue;
            }
            CHECK(std::abs(eval_scalar(back, x, y1, y2) - want) <= 1e-14 * std::max(1.0, std::abs(want)));
        }
    }
    CHECK(parse_expression("y1*y2").is_polynomial());
    CHECK_FALSE(parse_expression("y1/y2").is_polynomial());
}
