#pragma once

// Finite-N Christoffel-Darboux kernel, change of variables to exponential
// coordinates, bulk and edge scaling-limit kernels, sine/Airy reductions.

#include <vector>

#include "qrmt/ensemble.hpp"
#include "qrmt/swpoly.hpp"

namespace qrmt {

enum class SwKernelRoute { sum, cd };

// K_N^{(SW)}(u,v) = sqrt(w(u) w(v)) sum_{j<N} S_j(u) S_j(v), or the
// Christoffel-Darboux two-term form with ratio C_{N-1}/C_N = q^{-2N} sqrt(1-q^N).
double kernel_sw(double u, double v, const QParams& p,
                 SwKernelRoute route = SwKernelRoute::sum);

// Exponential coordinates: K^{(SW_e)}(x,y) = (2 pi / L) sqrt(u v) K^{(SW)}(u,v),
// u = q^{-N} e^{2 pi x / L} (trace-preserving change of variables).
double kernel_swe(double x, double y, const QParams& p);

// Bulk scaling limit (N -> inf, L fixed).  Two printed forms:
//   theta3: (c/pi)^{1/2} (q;q)_inf^{-3}
//           [l(x)l(-y) - l(y)l(-x)] / (2 sinh(pi (x-y)/L)),
//           l(y) = e^{(xi+1) pi y/2L} e^{-c y^2/2} theta3(-q^{1/2} e^{2 pi y/L}; q)
//   theta1: (1/L) / theta1'(0 | qhat^2)
//           [lhat(x)lhat(-y) - lhat(y)lhat(-x)] / (2 sinh(pi (x-y)/L)),
//           lhat(y) = e^{-xihat pi y/2L} theta1(pi/4 + c L y / 2 | qhat),
//           qhat = e^{-c L^2 / 2}.
// `parity` is the parity of N along the finite-N approach (+1 even, -1 odd);
// the xi branches of both forms are chosen so that the finite-N kernel of
// that parity converges to the returned function (see tests).
enum class BulkForm { theta3, theta1 };
double ell(double y, const QParams& p, int xi);
double ell_hat(double y, const QParams& p, int xihat);
double kernel_bulk(double x, double y, const QParams& p,
                   BulkForm form = BulkForm::theta3, int parity = +1);

// Edge scaling limit (left edge, X = x + pi N/(L c) fixed):
// K_edge(X,Y) = sqrt(c/pi) (q;q)_inf^{-1} e^{-c(X^2+Y^2)/2}
//               [A_q(a_X)A_q(b_Y) - A_q(a_Y)A_q(b_X)] / (2 sinh(pi(X-Y)/L)),
// a_X = q^{1/2} e^{2 pi X/L}, b_X = q^{-1/2} e^{2 pi X/L}.
// Diagonal (|X-Y| < 1e-6) by the analytic derivative rule.
double kernel_edge(double X, double Y, const QParams& p);
SignedLog kernel_edge_sl(double X, double Y, const QParams& p);

// Sup-error of the rescaled bulk kernel against sinc over [-2,2]^2 for each
// L in the list (c fixed):
//   sup |(2 pi/cL) K_bulk((2 pi/cL)x, (2 pi/cL)y) - sin(pi(x-y))/(pi(x-y))|.
std::vector<double> sine_limit_error(const std::vector<double>& L_values,
                                     double c);

// Airy rescaling: with eps = 2 pi^2/(c L^2),
// X(x,L) = (L/2pi)(log(1/4) - eps^{2/3} x),
// returns (L/2pi) eps^{2/3} K_edge(X(x), X(y)) -> Airy kernel as eps -> 0.
// Evaluated in the log domain throughout (scales e^{beta/eps}).
double airy_rescaled_edge(double x, double y, const QParams& p);

}  // namespace qrmt
