#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/kernels.hpp"
#include "qrmt/qcore.hpp"
#include "qrmt/quadrature.hpp"

using namespace qrmt;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sum route equals Christoffel-Darboux route") {
    QParams p = QParams::from_qN(6, 0.55);
    for (auto [u, v] : {std::pair{1.3, 2.9}, {0.4, 8.0}, {20.0, 0.02}})
        CHECK(kernel_sw(u, v, p, SwKernelRoute::cd) ==
              Approx(kernel_sw(u, v, p, SwKernelRoute::sum)).epsilon(1e-11));
    CHECK_THROWS_AS(kernel_sw(-1.0, 2.0, p, SwKernelRoute::sum),
                    std::domain_error);
}

TEST_CASE("kernel_swe is the trace-preserving transform of kernel_sw") {
    QParams p = QParams::from_cNL(4, 1.0, 2 * kPi);
    for (double x : {-0.7, 0.4}) {
        const double u = p.u_of_x(x);
        CHECK(kernel_swe(x, x, p) ==
              Approx((2 * kPi / p.L()) * u *
                     kernel_sw(u, u, p, SwKernelRoute::sum)).epsilon(1e-11));
    }
}

TEST_CASE("trace equals N") {
    for (int N : {1, 3, 5}) {
        QParams p = QParams::from_cNL(N, 1.0, 2 * kPi);
        const double half = kPi * N / (p.L() * p.c());
        const double tr = gl_integrate_panels(
            [&](double x) { return kernel_swe(x, x, p); }, 30, -half - 8.0,
            half + 8.0, 40);
        CHECK(tr == Approx(static_cast<double>(N)).epsilon(1e-9));
    }
}

TEST_CASE("bulk kernel: theta3 and theta1 forms agree for both parities") {
    QParams p = QParams::from_cNL(1, 1.0, 2 * kPi);
    for (int parity : {+1, -1})
        for (auto [x, y] : {std::pair{0.37, -0.21}, {1.1, 0.6}})
            CHECK(kernel_bulk(x, y, p, BulkForm::theta1, parity) ==
                  Approx(kernel_bulk(x, y, p, BulkForm::theta3, parity))
                      .epsilon(1e-12));
    CHECK_THROWS_AS(kernel_bulk(0.1, 0.2, p, BulkForm::theta3, 0),
                    std::domain_error);
}

TEST_CASE("bulk kernel diagonal is continuous") {
    QParams p = QParams::from_cNL(1, 1.0, 2 * kPi);
    const double d = kernel_bulk(0.3, 0.3, p, BulkForm::theta1, +1);
    CHECK(kernel_bulk(0.3, 0.3 + 1e-7, p, BulkForm::theta1, +1) ==
          Approx(d).epsilon(1e-6));
}

TEST_CASE("finite-N kernel converges to the bulk kernel") {
    const double x = 0.37, y = -0.21;
    double prev = 1.0;
    for (int N : {8, 12, 16}) {
        QParams p = QParams::from_cNL(N, 1.0, 2 * kPi);
        const double err = std::abs(
            kernel_swe(x, y, p) -
            kernel_bulk(x, y, p, BulkForm::theta1, +1));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 3e-3);
}

TEST_CASE("finite-N kernel converges to the edge kernel at rate q^N") {
    const double X1 = 0.9, X2 = 0.4;
    double e8 = 0, e12 = 0;
    for (int N : {8, 12}) {
        QParams p = QParams::from_cNL(N, 1.0, 2 * kPi);
        const double off = kPi * N / (p.L() * p.c());
        const double err = std::abs(kernel_swe(X1 - off, X2 - off, p) -
                                    kernel_edge(X1, X2, p));
        (N == 8 ? e8 : e12) = err;
    }
    const double q = QParams::from_cNL(8, 1.0, 2 * kPi).q();
    // err ratio ~ q^4 between N=8 and N=12
    CHECK(e12 / e8 == Approx(std::pow(q, 4.0)).epsilon(0.5));
}

TEST_CASE("edge kernel diagonal is continuous") {
    QParams p = QParams::from_cNL(1, 1.0, 2 * kPi);
    const double d = kernel_edge(0.5, 0.5, p);
    CHECK(kernel_edge(0.5, 0.5 + 1e-7, p) == Approx(d).epsilon(1e-6));
    CHECK(kernel_edge(0.5, 0.5 + 2e-6, p) == Approx(d).epsilon(1e-4));
}

TEST_CASE("sine limit error decreases in L") {
    const auto errs = sine_limit_error({12.0, 18.0, 24.0}, 1.0);
    REQUIRE(errs.size() == 3);
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
    CHECK(errs[2] < 1e-2);
    // deficit scales like 1/(c L^2)
    CHECK(errs[0] / errs[2] == Approx(4.0).epsilon(0.1));
}

TEST_CASE("airy-rescaled edge kernel approaches the Airy kernel") {
    const double eps = 1e-3, L = 2 * kPi;
    QParams p = QParams::from_cNL(1, 2 * kPi * kPi / (eps * L * L), L);
    for (auto [x, y] : {std::pair{0.3, -0.5}, {1.0, 1.0}, {-1.2, 0.7}})
        CHECK(std::abs(airy_rescaled_edge(x, y, p) - airy_kernel(x, y)) <
              5e-4);
}
