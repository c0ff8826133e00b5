#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qrmt/qcore.hpp"

using namespace qrmt;
using doctest::Approx;

TEST_CASE("qpochhammer finite product") {
    QBase q(0.3);
    // (0.3; 0.3)_4 = (1-0.3)(1-0.09)(1-0.027)(1-0.0081)
    const double ref = 0.7 * 0.91 * 0.973 * 0.9919;
    CHECK(qpochhammer(0.3, q, 4).to_double() == Approx(ref).epsilon(1e-15));
    CHECK(qpochhammer(0.3, q, 0).to_double() == 1.0);
}

TEST_CASE("qpochhammer_inf pinned value") {
    CHECK(qpochhammer_inf(QBase(0.5)).to_double() ==
          Approx(0.28878809508660242128).epsilon(1e-15));
}

TEST_CASE("qbinomial against its defining product") {
    QBase q(0.5);
    // [5 2]_q = (1-q^4)(1-q^5)/((1-q)(1-q^2))
    const double ref = (1 - 0.0625) * (1 - 0.03125) / (0.5 * 0.75);
    CHECK(qbinomial(5, 2, q).to_double() == Approx(ref).epsilon(1e-14));
    // [n m]_{q^{-1}} = q^{-m(n-m)} [n m]_q
    CHECK(qbinomial_qinv(5, 2, q).to_double() ==
          Approx(std::pow(0.5, -6.0) * ref).epsilon(1e-14));
    CHECK_THROWS_AS(qbinomial(3, 4, q), std::domain_error);
}

TEST_CASE("theta3 pinned values and symmetry") {
    QBase q(0.4);
    CHECK(theta3(0.7, q) == Approx(1.9170735456367204914).epsilon(1e-14));
    CHECK(theta3(-0.7, q) == Approx(0.21250803417478416352).epsilon(1e-13));
    // z <-> 1/z symmetry
    CHECK(theta3(2.5, q) == Approx(theta3(1.0 / 2.5, q)).epsilon(1e-14));
    // SignedLog branch agrees with the double branch
    CHECK(theta3_sl(SignedLog::from_double(-0.7), q).to_double() ==
          Approx(0.21250803417478416352).epsilon(1e-13));
}

TEST_CASE("theta1 pinned values") {
    QBase q(0.3);
    CHECK(theta1(0.6, q) == Approx(0.70618631084180661574).epsilon(1e-14));
    CHECK(theta1_prime0(q) == Approx(1.0859105923231336945).epsilon(1e-14));
    CHECK(theta1_sl(0.6, q).to_double() ==
          Approx(0.70618631084180661574).epsilon(1e-14));
    CHECK(theta1_prime0_sl(q).to_double() ==
          Approx(1.0859105923231336945).epsilon(1e-14));
}

TEST_CASE("A_q pinned values") {
    CHECK(aq(1.3, QBase(0.5)) ==
          Approx(-0.031269413736092352651).epsilon(1e-12));
    CHECK(aq(-2.0, QBase(0.35)) ==
          Approx(2.1833173449294847905).epsilon(1e-13));
    CHECK(aq_prime(1.3, QBase(0.5)) ==
          Approx(-0.59641075243332323058).epsilon(1e-12));
    CHECK(aq(0.0, QBase(0.5)) == 1.0);
}

TEST_CASE("A_q log-argument branch matches the double branch") {
    QBase q(0.6);
    const double z = 3.7;
    CHECK(aq_sl(std::log(z), 1, q).to_double() ==
          Approx(aq(z, q)).epsilon(1e-12));
    CHECK(aq_prime_sl(std::log(z), 1, q).to_double() ==
          Approx(aq_prime(z, q)).epsilon(1e-12));
}

TEST_CASE("A_q deep-cancellation regime is finite and consistent") {
    // q -> 1 with z near 1/4: catastrophic alternating cancellation in
    // doubles; the adaptive-precision path must agree with the functional
    // relation A_q(z) = A_q(qz) - qz A_q(q^2 z) (from the defining series).
    QBase q(std::exp(-1e-3));
    const double lz = std::log(0.25);
    const SignedLog a0 = aq_sl(lz, 1, q);
    const SignedLog a1 = aq_sl(lz + std::log(q.q), 1, q);
    const SignedLog a2 = aq_sl(lz + 2 * std::log(q.q), 1, q);
    const SignedLog rhs = a1 - SignedLog::from_log(lz + std::log(q.q)) * a2;
    CHECK((a0 / rhs).to_double() == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Airy function pinned values (series and asymptotic branches)") {
    CHECK(airy_ai(1.0) == Approx(0.13529241631288141552).epsilon(1e-15));
    CHECK(airy_ai(-5.0) == Approx(0.35076100902411431979).epsilon(1e-14));
    CHECK(airy_ai(8.5) == Approx(1.0997009755195506509e-8).epsilon(1e-13));
    CHECK(airy_ai(-12.0) == Approx(-0.066555175054373129474).epsilon(1e-13));
    CHECK(airy_ai_prime(1.0) ==
          Approx(-0.15914744129679321279).epsilon(1e-14));
    CHECK(airy_ai_prime(-12.0) ==
          Approx(1.0231104533679707299).epsilon(1e-13));
}

TEST_CASE("Airy branch continuity at the series/asymptotic switch") {
    // The two branches may differ only by the genuine slope over the step.
    for (double s : {1.0, -1.0}) {
        const double a = airy_ai(s * (8.0 - 1e-9));
        const double b = airy_ai(s * (8.0 + 1e-9));
        const double slope = std::abs(airy_ai_prime(s * 8.0)) * 2e-9;
        CHECK(std::abs(a - b) < 1.5 * slope + 1e-16);
    }
}

TEST_CASE("Airy kernel diagonal") {
    // K(x,x) = Ai'(x)^2 - x Ai(x)^2
    const double x = 0.5;
    const double ref = 0.22491053266468389314 * 0.22491053266468389314 -
                       x * 0.23169360648083348977 * 0.23169360648083348977;
    CHECK(airy_kernel(x, x) == Approx(ref).epsilon(1e-12));
    // continuity across the near-diagonal switch
    CHECK(airy_kernel(x, x + 1e-8) == Approx(airy_kernel(x, x)).epsilon(1e-6));
}

TEST_CASE("phi21 terminating sum: N=1 moment example") {
    // q^{N l} m_l at l=1, N=1 equals q^{-1/2}:
    // relation: q^{Nl} m_l = -(-q^{-1/2})^l/(1-q^{-l}) phi21(l,N)
    QBase q(0.5);
    const SignedLog s = phi21_terminating(1, 1, q);
    const double m = -(-std::sqrt(2.0)) / (1.0 - 2.0) * s.to_double();
    CHECK(m == Approx(std::sqrt(2.0)).epsilon(1e-14));
}
