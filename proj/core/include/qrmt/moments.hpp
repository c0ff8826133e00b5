#pragma once

// Exact finite-N averages: Schur polynomial averages (product and
// determinant routes), hook-shape specializations, power-sum moments, scaled
// large-N moment coefficients and Rogers-Szego cross-checks.

#include <string>
#include <vector>

#include "qrmt/ensemble.hpp"
#include "qrmt/signed_log.hpp"

namespace qrmt {

// Weakly decreasing nonnegative integer parts.
class Partition {
  public:
    explicit Partition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;  // |kappa|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int j) const;  // 0-based; 0 beyond the stored length

  private:
    std::vector<int> parts_;
};

// q^{N|kappa|} <s_kappa>_{SW} via the closed product formula
//   q^{-1/2 sum kappa_l^2} prod_{j<k} (1-q^{-(kappa_j-j-kappa_k+k)}) /
//                                      (1-q^{-(k-j)}).
SignedLog schur_average_product(const Partition& kappa, const QParams& p);

// Same quantity via the determinant ratio
//   det[q^{-(j-k+kappa_k)^2/2}] / det[q^{-(j-k)^2/2}]
// (which already carries the q^{N|kappa|} factor), evaluated by Gaussian
// elimination with full pivoting in SignedLog.
// Throws std::domain_error for N > 12 and a runtime error when the pivot
// spread indicates a conditioning loss beyond 1e-8.
SignedLog schur_average_det(const Partition& kappa, const QParams& p);

// Hook shapes kappa = (l-r, 1^r):
//   q^{Nl} <s_(l-r,1^r)> = q^{-(l-r)^2/2 - r/2} [N+l-r-1, l]_{q^-1} [l-1, r]_{q^-1}.
SignedLog hook_schur_average(int l, int r, const QParams& p);

enum class MomentRoute { phi21, hook, det };

struct MomentResult {
    int l;
    SignedLog value;  // q^{N l} m_l^{(SW_e)}
    MomentRoute route;
};

// Power-sum moment q^{Nl} m_l.  l >= 1 via the terminating 2phi1 (route
// phi21) or the alternating hook sum (route hook); l < 0 by the inversion
// symmetry q^{-Nl} m_{-l} = q^{Nl} m_l.  l = 0 is a domain error.
MomentResult power_sum_moment(int l, const QParams& p,
                              MomentRoute route = MomentRoute::phi21);

// Max relative residual of the little q-Jacobi 3-term recurrence
//   -q^{-N} p_l = A_l p_{l+1} - (A_l + A_{-l}) p_l + A_{-l} p_{l-1}
// over l = 1..lmax-1, with p_l extracted from power_sum_moment.
double moment_recurrence_check(int lmax, const QParams& p);

// Scaled moment coefficients: q^{Nl} m_l / N = mu0 + mu2/N^2 + O(1/N^4)
// at q = e^{-lambda/N}.
// mu0(l, lambda) = (-1)^l / (lambda l) 2F1(-l, l; 1; e^lambda).
double mu0(int l, double lambda);
// 1/N^2 coefficient (sign-corrected double-binomial sum; see tests for the
// N-scan that pins it):
// mu2 = (-1)^l lambda^2/24 sum_p (-1)^p (e^{lambda p}-1)/(lambda p)
//       C(l,p) C(l+p-1,l) ((2p-1) l^2 - 2 p^2).
double mu2(int l, double lambda);

// Rogers-Szego scaled moment: mu0 evaluated at lambda -> -lambda/2 (prefactor included).
double rs_moment(int l, double lambda);

}  // namespace qrmt
