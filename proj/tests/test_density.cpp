#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qrmt/density.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/quadrature.hpp"

using namespace qrmt;
using doctest::Approx;

TEST_CASE("support endpoints") {
    const Support s = support(1.0);
    CHECK(s.z_minus * s.z_plus == Approx(1.0).epsilon(1e-13));
    CHECK(s.z_minus > 0.0);
    CHECK(s.z_minus < 1.0);
    CHECK(s.z_plus > 1.0);
    // endpoints solve (1+x)^2 = 4 x e^lambda
    for (double x : {s.z_minus, s.z_plus})
        CHECK((1 + x) * (1 + x) ==
              Approx(4 * x * std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("resolvent behaves as 1/y at infinity and is real off the cut") {
    const double lambda = 0.8;
    CHECK(resolvent(1e8, lambda) * 1e8 == Approx(1.0).epsilon(1e-6));
    const Support s = support(lambda);
    CHECK_THROWS_AS(resolvent(0.5 * (s.z_minus + s.z_plus), lambda),
                    std::domain_error);
    // complex extension agrees with the real branch off the cut
    const double y = s.z_plus + 1.5;
    CHECK(resolvent(std::complex<double>(y, 0.0), lambda).real() ==
          Approx(resolvent(y, lambda)).epsilon(1e-12));
}

TEST_CASE("density: mass and moments") {
    const double lambda = 1.0;
    const Support s = support(lambda);
    const double w = s.z_plus - s.z_minus;
    auto smooth_int = [&](auto f) {
        return gl_integrate(
            [&](double th) {
                const double sn = std::sin(th), cs = std::cos(th);
                const double x = s.z_minus + w * sn * sn;
                return f(x) * rho(x, lambda) * w * 2.0 * sn * cs;
            },
            200, 0.0, 0.5 * std::numbers::pi);
    };
    CHECK(smooth_int([](double) { return 1.0; }) == Approx(1.0).epsilon(1e-12));
    for (int l = 1; l <= 4; ++l)
        CHECK(smooth_int([&](double x) { return std::pow(x, l); }) ==
              Approx(mu0(l, lambda)).epsilon(1e-10));
    CHECK(rho(s.z_minus * 0.9, lambda) == 0.0);
    CHECK(rho(s.z_plus * 1.1, lambda) == 0.0);
}

TEST_CASE("Stieltjes inversion matches the closed form") {
    const double lambda = 1.4;
    const Support s = support(lambda);
    for (double f : {0.1, 0.5, 0.9}) {
        const double x = s.z_minus + f * (s.z_plus - s.z_minus);
        CHECK(stieltjes_inversion(x, lambda) ==
              Approx(rho(x, lambda)).epsilon(1e-8));
    }
}

TEST_CASE("functional equation residual inside the support") {
    const double lambda = 1.0;
    const Support s = support(lambda);
    for (double f : {0.2, 0.5, 0.8})
        CHECK(functional_eq_residual(
                  s.z_minus + f * (s.z_plus - s.z_minus), lambda) < 1e-6);
    // and outside (real resolvent branch)
    CHECK(functional_eq_residual(s.z_plus + 1.0, lambda) < 1e-10);
}

TEST_CASE("Rogers-Szego density: support, mass, symmetry") {
    const double lambda = 1.1;
    const double ctc = 2 * std::exp(-lambda / 2) - 1;  // cos(theta_c)
    const double thc = std::acos(ctc);
    CHECK(rho_rs(thc * 1.05, lambda) == 0.0);
    CHECK(rho_rs(0.3, lambda) == Approx(rho_rs(-0.3, lambda)).epsilon(1e-14));
    // theta = theta_c sin(u) makes the sqrt edge behaviour analytic.
    const double mass = gl_integrate(
        [&](double u) {
            return rho_rs(thc * std::sin(u), lambda) * thc * std::cos(u);
        },
        200, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    CHECK(mass == Approx(1.0).epsilon(1e-9));
}
