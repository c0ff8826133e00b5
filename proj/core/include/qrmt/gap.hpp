#pragma once

// Edge gap probability by Fredholm determinant, the leftmost-particle
// density, tail asymptotics, and the exactly solvable 2D cylinder-gas gap.

#include "qrmt/ensemble.hpp"

namespace qrmt {

struct FredholmConfig {
    int nodes = 80;          // Gauss-Legendre order
    double T = 0;            // left truncation depth; 0 => derive from e^{-cT^2} < 1e-16
    bool richardson = true;  // Richardson-extrapolate the derivative in leftmost_pdf
};

// E(0; (-inf, s)) = det(I - W^{1/2} K W^{1/2}) with K = kernel_edge on GL
// nodes over (-T, s).  Result in (0, 1].
double gap_probability(double s, const QParams& p, const FredholmConfig& cfg = {});

// -d/ds gap_probability via 5-point central differences at step 1e-3
// (Richardson-extrapolated when cfg.richardson).
double leftmost_pdf(double s, const QParams& p, const FredholmConfig& cfg = {});

// 2D cylinder gas (c = 1/2 appendix convention):
//   E_edge^{(2d)}(s) = prod_{l>=0} (1/2) erfc((s - 2 pi (2l+1)/L)/sqrt(2)),
// truncated when the next factor differs from 1 by < 1e-16.
double gap2d_product(double s, double L, int n_factors = -1);

// Least-squares fit of -log gap2d vs s^3 over [s_min, s_max]; the
// coefficient converges to L/(24 pi).
struct TailFit {
    double coefficient;
    double residual;     // relative RMS fit residual
    bool inconclusive;   // residual > 10%
};
TailFit right_tail_exponent(double L, double s_min, double s_max, int n_pts = 21);

}  // namespace qrmt
