#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/ensemble.hpp"
#include "qrmt/quadrature.hpp"
#include "qrmt/swpoly.hpp"

using namespace qrmt;
using doctest::Approx;

TEST_CASE("orthonormality under the log-normal weight") {
    QParams p = QParams::from_qN(1, 0.55);
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) {
            const double gram = gl_integrate_panels(
                [&](double t) {
                    return std::exp(t) * weight_sw(std::exp(t), p) *
                           (sw_poly_logu(a, t, p) * sw_poly_logu(b, t, p))
                               .to_double();
                },
                30, -60.0, 60.0, 60);
            CHECK(gram == Approx(a == b ? 1.0 : 0.0).epsilon(1e-11).scale(1.0));
        }
}

TEST_CASE("coefficients reproduce the polynomial and the leading term") {
    QParams p = QParams::from_qN(1, 0.4);
    const int l = 5;
    const auto coef = sw_poly_coefficients(l, p);
    REQUIRE(static_cast<int>(coef.size()) == l + 1);
    for (double u : {0.3, 1.7, 6.0}) {
        SignedLog horner = SignedLog::zero();
        for (int nu = l; nu >= 0; --nu)
            horner = horner * SignedLog::from_double(u) + coef[nu];
        CHECK(horner.to_double() ==
              Approx(sw_poly(l, u, p).to_double()).epsilon(1e-12));
    }
    CHECK((coef[l] / sw_leading_coeff(l, p)).to_double() ==
          Approx(1.0).epsilon(1e-13));
}

TEST_CASE("monic normalization") {
    QParams p = QParams::from_qN(1, 0.6);
    const int l = 4;
    const double u = 2.3;
    CHECK((sw_poly(l, u, p) / sw_leading_coeff(l, p)).to_double() ==
          Approx(sw_poly_monic(l, u, p).to_double()).epsilon(1e-13));
    CHECK(sw_poly_monic_logu(l, std::log(u), p).to_double() ==
          Approx(sw_poly_monic(l, u, p).to_double()).epsilon(1e-13));
}

TEST_CASE("q-difference equation residual") {
    QParams p = QParams::from_qN(4, 0.5);
    for (double x : {0.1, 0.7, 2.0, 10.0})
        CHECK(qdifference_residual(4, x, p) < 1e-10);
}

TEST_CASE("inversion symmetry residual") {
    for (double q : {0.3, 0.6, 0.85}) {
        QParams p = QParams::from_qN(1, q);
        for (int n : {1, 2, 3, 5})
            for (double z : {0.05, 0.4, 1.7, 2.7})
                CHECK(sw_symmetry_residual(n, z, p) < 1e-12);
    }
}

TEST_CASE("large-N expansion improves with the second term and with N") {
    const double z = 0.8;
    double prev_err = 1.0;
    for (int N : {6, 9, 12}) {
        QParams p = QParams::from_qN(N, 0.5);
        const auto ex = wigert_expansion(N, z, p);
        const double truth = sw_poly(N, z, p).to_double();
        const double err1 = std::abs(ex.leading.to_double() / truth - 1.0);
        const double err2 = std::abs(ex.corrected.to_double() / truth - 1.0);
        CHECK(err2 < err1);
        CHECK(err2 < prev_err);
        prev_err = err2;
    }
    // rate O(q^{2N}): two-term error shrinks by ~q^6 from N=6 to N=9
    QParams p6 = QParams::from_qN(6, 0.5), p9 = QParams::from_qN(9, 0.5);
    const double e6 = std::abs(
        wigert_expansion(6, z, p6).corrected.to_double() /
            sw_poly(6, z, p6).to_double() - 1.0);
    const double e9 = std::abs(
        wigert_expansion(9, z, p9).corrected.to_double() /
            sw_poly(9, z, p9).to_double() - 1.0);
    CHECK(e9 / e6 < 3.0 * std::pow(0.5, 6.0));
}
