#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/gap.hpp"

using namespace qrmt;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gap probability: range, monotonicity, node stability") {
    QParams p = QParams::from_cNL(1, 1.0, 2 * kPi);
    double prev = 1.0;
    for (double s : {-3.0, -1.0, 0.0, 1.0, 2.0}) {
        const double e = gap_probability(s, p);
        CHECK(e > 0.0);
        CHECK(e <= 1.0);
        CHECK(e < prev);
        prev = e;
    }
    FredholmConfig lo, hi;
    lo.nodes = 60;
    hi.nodes = 120;
    for (double s : {-1.0, 1.0})
        CHECK(gap_probability(s, p, lo) ==
              Approx(gap_probability(s, p, hi)).epsilon(1e-10));
    CHECK_THROWS_AS(gap_probability(0.0, p, FredholmConfig{1, 0, true}),
                    std::domain_error);
}

TEST_CASE("leftmost pdf integrates the gap derivative") {
    QParams p = QParams::from_cNL(1, 1.0, 2 * kPi);
    // -d/ds E at s: compare against a coarse secant of E itself
    const double h = 0.05;
    const double secant =
        -(gap_probability(0.0 + h, p) - gap_probability(0.0 - h, p)) /
        (2 * h);
    CHECK(leftmost_pdf(0.0, p) == Approx(secant).epsilon(1e-3));
    CHECK(leftmost_pdf(0.0, p) > 0.0);
}

TEST_CASE("gap2d equals the explicit erfc product") {
    const double L = 1.8, s = 4.0;
    double ref = 1.0;
    for (int l = 0; l < 200; ++l)
        ref *= 0.5 * std::erfc((s - 2 * kPi * (2 * l + 1) / L) /
                               std::sqrt(2.0));
    CHECK(gap2d_product(s, L) == Approx(ref).epsilon(1e-13));
    // s -> -inf: no constraint, probability 1
    CHECK(gap2d_product(-50.0, L) == Approx(1.0).epsilon(1e-14));
    // truncation control agrees with the adaptive tail
    CHECK(gap2d_product(s, L, 200) == Approx(ref).epsilon(1e-13));
    CHECK_THROWS_AS(gap2d_product(1.0, -2.0), std::domain_error);
}

TEST_CASE("right tail exponent approaches L/(24 pi)") {
    for (double L : {1.6, 2.0}) {
        const TailFit f = right_tail_exponent(L, 10.0, 20.0);
        CHECK_FALSE(f.inconclusive);
        CHECK(f.coefficient ==
              Approx(L / (24.0 * kPi)).epsilon(0.05));
    }
    CHECK_THROWS_AS(right_tail_exponent(2.0, 5.0, 4.0), std::domain_error);
}
