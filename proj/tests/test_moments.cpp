#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/density.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/quadrature.hpp"

using namespace qrmt;
using doctest::Approx;

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition({3, 1, 1}));
    CHECK(Partition({2, 1, 0, 0}).length() == 2);
    CHECK(Partition({2, 1}).weight() == 3);
    CHECK(Partition({2, 1}).part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({2, -1}), std::domain_error);
}

TEST_CASE("N=1 moment is the log-normal moment ratio") {
    QParams p = QParams::from_qN(1, 0.5);
    // q^{l} m_l at N=1: q^l * q^{-(l+1)^2/2} / q^{-1/2}
    for (int l = 1; l <= 4; ++l) {
        const double ref =
            std::pow(0.5, l - 0.5 * (l + 1.0) * (l + 1.0) + 0.5);
        CHECK(power_sum_moment(l, p).value.to_double() ==
              Approx(ref).epsilon(1e-13));
    }
    CHECK(power_sum_moment(1, p).value.to_double() ==
          Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("three routes and the inversion symmetry agree") {
    for (double q : {0.3, 0.8})
        for (int N : {2, 5}) {
            QParams p = QParams::from_qN(N, q);
            for (int l = 1; l <= 6; ++l) {
                const double a =
                    power_sum_moment(l, p, MomentRoute::phi21).value.to_double();
                CHECK(power_sum_moment(l, p, MomentRoute::hook)
                          .value.to_double() == Approx(a).epsilon(1e-11));
                CHECK(power_sum_moment(l, p, MomentRoute::det)
                          .value.to_double() == Approx(a).epsilon(1e-11));
                CHECK(power_sum_moment(-l, p).value.to_double() ==
                      Approx(a).epsilon(1e-11));
            }
        }
    CHECK_THROWS_AS(power_sum_moment(0, QParams::from_qN(2, 0.5)),
                    std::domain_error);
}

TEST_CASE("hook Schur averages vanish for too-long columns") {
    QParams p = QParams::from_qN(2, 0.5);
    CHECK(hook_schur_average(3, 2, p).is_zero());  // column height 3 > N
}

TEST_CASE("Schur product equals determinant for non-hook shapes") {
    QParams p = QParams::from_qN(4, 0.6);
    for (const auto& parts :
         {std::vector<int>{2, 2}, {3, 2, 1}, {2, 2, 1, 1}}) {
        Partition kappa(parts);
        const double a = schur_average_product(kappa, p).to_double();
        const double b = schur_average_det(kappa, p).to_double();
        CHECK(b == Approx(a).epsilon(1e-11));
    }
    CHECK_THROWS_AS(schur_average_det(Partition({1}), QParams::from_qN(13, 0.5)),
                    std::domain_error);
}

TEST_CASE("three-term recurrence residual") {
    CHECK(moment_recurrence_check(8, QParams::from_qN(4, 0.5)) < 1e-12);
    CHECK(moment_recurrence_check(6, QParams::from_qN(7, 0.3)) < 1e-12);
}

TEST_CASE("mu0 pinned values and density consistency") {
    CHECK(mu0(1, 1.0) == Approx(1.7182818284590452354).epsilon(1e-14));
    CHECK(mu0(2, 1.0) == Approx(6.1470204914778848701).epsilon(1e-14));
    // mu0 = lim q^{Nl} m_l / N in the scaled regime
    QParams p = QParams::from_lambdaN(400, 1.0);
    CHECK(power_sum_moment(2, p).value.to_double() / 400.0 ==
          Approx(mu0(2, 1.0)).epsilon(1e-4));
}

TEST_CASE("mu2 matches the finite-N expansion") {
    const double lambda = 0.7;
    for (int l = 1; l <= 3; ++l) {
        double e[2];
        int i = 0;
        for (int N : {100, 200}) {
            QParams p = QParams::from_lambdaN(N, lambda);
            const double m = power_sum_moment(l, p).value.to_double() / N;
            e[i++] = N * static_cast<double>(N) * (m - mu0(l, lambda));
        }
        const double coeff = (4.0 * e[1] - e[0]) / 3.0;
        CHECK(coeff == Approx(mu2(l, lambda)).epsilon(1e-5));
    }
}

TEST_CASE("Rogers-Szego moments are the Fourier modes of rho_rs") {
    const double lambda = 1.3;
    // theta = theta_c sin(u) turns the sqrt edge vanishing into an analytic
    // integrand.
    const double thc = std::acos(2 * std::exp(-lambda / 2) - 1);
    for (int l = 1; l <= 3; ++l) {
        const double quad = gl_integrate(
            [&](double u) {
                const double th = thc * std::sin(u);
                return std::cos(l * th) * rho_rs(th, lambda) * thc *
                       std::cos(u);
            },
            200, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
        CHECK(quad == Approx(rs_moment(l, lambda)).epsilon(1e-8));
    }
}
