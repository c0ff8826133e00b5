#pragma once

// Stieltjes-Wigert polynomials S_l(u; q), monic normalization, and their
// identities (symmetry, q-difference equation, large-N expansion).

#include <vector>

#include "qrmt/ensemble.hpp"
#include "qrmt/signed_log.hpp"

namespace qrmt {

// S_l(u; q) = (-1)^l q^{l/2+1/4} / sqrt((q;q)_l)
//             * sum_{nu=0}^{l} [l nu]_q q^{nu^2} (-q^{1/2} u)^nu.
// Alternating-sum cancellation beyond 12 digits triggers a transparent
// arbitrary-precision (MPFR) re-evaluation.  Argument passed as log u so
// bulk/edge-scale arguments (log u ~ N) stay exact.
SignedLog sw_poly(int l, double u, const QParams& p);
SignedLog sw_poly_logu(int l, double log_u, const QParams& p);

// Leading coefficient C_l = q^{l^2 + l + 1/4} / sqrt((q;q)_l).
SignedLog sw_leading_coeff(int l, const QParams& p);

// Coefficient of u^nu in S_l.
std::vector<SignedLog> sw_poly_coefficients(int l, const QParams& p);

// Monic polynomial: S_l / C_l.
SignedLog sw_poly_monic(int l, double u, const QParams& p);
SignedLog sw_poly_monic_logu(int l, double log_u, const QParams& p);

// Residual of the second-order q-difference equation
//   f(xq) - f(x)/x + f(x/q)/x = q^N f(x)
// satisfied by f(x) = monic S_N evaluated at q^{-1/2} x, relative to the
// largest participating term.
double qdifference_residual(int l, double x, const QParams& p);

// Relative residual of the inversion symmetry
//   S_n(z;q) = q^{n/2} (-z q^n)^n S_n(1/(z q^{2n+1}); q).
double sw_symmetry_residual(int n, double z, const QParams& p);

// Two-term large-N expansion
//   S_N(z;q) ~ sqrt((q;q)_N)/(q;q)_inf (-1)^N q^{N/2+1/4}
//              (A_q(q^{1/2} z) - q^{1+N}/(1-q) A_q(q^{-1/2} z) + O(q^{2N})).
struct WigertExpansion {
    SignedLog leading;    // first term only
    SignedLog corrected;  // both terms
};
WigertExpansion wigert_expansion(int N, double z, const QParams& p);

}  // namespace qrmt
