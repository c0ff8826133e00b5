#pragma once

// Scalar q-special functions: q-Pochhammer symbols, q-binomials, Jacobi theta
// functions, the Ramanujan (q-Airy) function A_q, terminating basic
// hypergeometric sums, and the classical Airy function.

#include <complex>
#include <stdexcept>

#include "qrmt/signed_log.hpp"

namespace qrmt {

struct QBase {
    double q;
    explicit QBase(double q_) : q(q_) {
        if (!(q > 0.0 && q < 1.0))
            throw std::domain_error("QBase: q must lie strictly inside (0,1)");
    }
};

// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j).  n = 0 gives 1.
SignedLog qpochhammer(double a, QBase q, int n);

// (q; q)_infinity, as a SignedLog (its log-magnitude ~ -pi^2/(6 eps) for
// q = e^{-eps} underflows plain doubles).
SignedLog qpochhammer_inf(QBase q);

// q-binomial [n m]_q as a finite product of ratios.
// Throws std::domain_error when m > n or m < 0.
SignedLog qbinomial(int n, int m, QBase q);

// q-binomial in base q^{-1}: [n m]_{q^{-1}} = q^{-m(n-m)} [n m]_q.
// Always a finite product in base q; never an infinite series in q^{-1}.
SignedLog qbinomial_qinv(int n, int m, QBase q);

// theta_3(z; q) = sum_{n=-inf}^{inf} q^{n^2} z^n.  z must be nonzero.
std::complex<double> theta3(std::complex<double> z, QBase q);
double theta3(double z, QBase q);
// Log-domain theta_3 for real z (z may be large negative: lattice arguments
// -q^{1/2} e^{2 pi y / L} grow exponentially in y).
SignedLog theta3_sl(SignedLog z, QBase q);

// theta_1(x | q) = -i sum_n (-1)^n q^{(n+1/2)^2} e^{2i(n+1/2)x}
//               = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1)x).
double theta1(double x, QBase q);
// d/dx theta_1(x | q) at x = 0 (term-wise differentiated series).
double theta1_prime0(QBase q);
SignedLog theta1_sl(double x, QBase q);
SignedLog theta1_prime0_sl(QBase q);

// Ramanujan / q-Airy function A_q(z) = sum_nu q^{nu^2} (-z)^nu / (q; q)_nu
// and its derivative.  The double-precision fast path monitors cancellation
// against the running-max partial sum and transparently falls back to
// arbitrary precision (MPFR) when more than 12 digits cancel.
double aq(double z, QBase q);
double aq_prime(double z, QBase q);
// Log-domain A_q / A_q' for scales like e^{beta/eps}; always exact-precision
// internally (adaptive MPFR) when cancellation demands it.
SignedLog aq_sl(double log_z, int sign_z, QBase q);
SignedLog aq_prime_sl(double log_z, int sign_z, QBase q);

// Terminating 2phi1(q^l, q^{-l}; q^{-1} | q^{-1}; q^{-(N+1)}): the l+1-term
// sum entering the exact moment evaluation.  Every base-q^{-1} Pochhammer is
// a finite product.
SignedLog phi21_terminating(int l, int N, QBase q);

// Classical Airy function: Maclaurin series pair (in __float128) for
// |x| <= 8, standard asymptotic expansions beyond; the switch point is
// continuity-tested below 1e-12.
double airy_ai(double x);
double airy_ai_prime(double x);
// Airy kernel (Ai(x)Ai'(y) - Ai(y)Ai'(x))/(x - y); diagonal handled
// analytically as Ai'(x)^2 - x Ai(x)^2.
double airy_kernel(double x, double y);

}  // namespace qrmt
