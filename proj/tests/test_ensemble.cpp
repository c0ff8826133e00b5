#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/ensemble.hpp"
#include "qrmt/quadrature.hpp"

using namespace qrmt;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("parameter factories are consistent") {
    QParams p = QParams::from_qN(3, 0.5);
    CHECK(p.q() == 0.5);
    CHECK(p.N() == 3);
    // q = e^{-1/(2 k^2)}, k^2 = c L^2/(2 pi)^2
    CHECK(std::exp(-1.0 / (2.0 * p.k2())) == Approx(0.5).epsilon(1e-15));
    CHECK(p.k2() == Approx(p.c() * p.L() * p.L() / (4 * kPi * kPi)).epsilon(1e-15));

    QParams pl = QParams::from_lambdaN(8, 2.0);
    CHECK(pl.q() == Approx(std::exp(-0.25)).epsilon(1e-15));
    CHECK(pl.lambda().value() == 2.0);

    CHECK_THROWS_AS(QParams::from_qN(2, 1.5), std::domain_error);
}

TEST_CASE("u(x) round trip") {
    QParams p = QParams::from_cNL(5, 0.7, 4.0);
    for (double x : {-3.0, 0.0, 2.5}) {
        CHECK(p.x_of_u(p.u_of_x(x)) == Approx(x).epsilon(1e-13));
        CHECK(p.log_u_of_x(x) ==
              Approx(-p.N() * std::log(p.q()) + 2 * kPi * x / p.L())
                  .epsilon(1e-14));
    }
}

TEST_CASE("log-normal weight moments") {
    QParams p = QParams::from_qN(1, 0.45);
    for (int n : {0, 1, 2, 5}) {
        const double quad = gl_integrate_panels(
            [&](double t) {
                return std::exp((n + 1.0) * t) * weight_sw(std::exp(t), p);
            },
            30, -40.0, 40.0, 40);
        CHECK(lognormal_moment(n, p).to_double() ==
              Approx(quad).epsilon(1e-12));
        CHECK(lognormal_moment(n, p).to_double() ==
              Approx(std::pow(0.45, -0.5 * (n + 1.0) * (n + 1.0)))
                  .epsilon(1e-13));
    }
}

TEST_CASE("norm_sw pinned value") {
    // N = 2, q = 0.5: C = 2! q^{-10} (1-q) = 2 * 1024 * 1/2 / 32 ... direct:
    QParams p = QParams::from_qN(2, 0.5);
    const double ref = 2.0 * std::pow(0.5, -2.0 * 3.0 * 5.0 / 6.0) * 0.5;
    CHECK(norm_sw(p).to_double() == Approx(ref).epsilon(1e-13));
    CHECK(ref == 32.0);
}

TEST_CASE("norm_swe against 2D quadrature") {
    // N = 2, c = 1, L = 2 pi: int exp(-sum x^2) 4 sinh^2((x1-x2)/2) dx
    //                        = pi (sqrt(e) - 1) / 2 ... times 2! ordering:
    QParams p = QParams::from_cNL(2, 1.0, 2 * kPi);
    const double ref = kPi * (std::sqrt(std::numbers::e) - 1.0) / 2.0;
    CHECK(norm_swe(p).to_double() == Approx(ref).epsilon(1e-12));
}

TEST_CASE("log_density_swe basics") {
    QParams p = QParams::from_cNL(3, 1.0, 2 * kPi);
    Configuration xs = {-1.0, 0.2, 1.4};
    double ref = 0;
    for (double x : xs) ref -= p.c() * x * x;
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            ref += 2.0 * std::log(std::abs(
                       std::sinh(kPi * (xs[k] - xs[j]) / p.L())));
    CHECK(log_density_swe(xs, p) == Approx(ref).epsilon(1e-14));
    CHECK(std::isinf(log_density_swe({0.5, 0.5, 1.0}, p)));
}

TEST_CASE("mean square displacement closed form") {
    // N = 1: <x^2> of sqrt(c/pi) e^{-c x^2} is 1/(2c).
    CHECK(mean_square_displacement(1, 0.8) == Approx(1.0 / 1.6).epsilon(1e-14));
    // N = 2, c = 1: finite difference of log norm_swe in c.
    const double h = 1e-5;
    auto lz = [&](double c) {
        return norm_swe(QParams::from_cNL(2, c, 2 * kPi)).logmag;
    };
    const double fd = -(lz(1.0 + h) - lz(1.0 - h)) / (2 * h);
    CHECK(mean_square_displacement(2, 1.0) == Approx(fd).epsilon(1e-8));
}
