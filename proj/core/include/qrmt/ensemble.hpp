#pragma once

// Parameter bookkeeping, weights, exact normalizations and exact
// one-dimensional moment integrals for the SW / SW_e ensembles.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qrmt/signed_log.hpp"
#include "qrmt/qcore.hpp"

namespace qrmt {

// Coupled parameter set: q = e^{-1/(2 k^2)}, k^2 = c L^2 / (2 pi)^2.
// In the scaled regime q = e^{-lambda/N} and (c, L) are derived (L = 2 pi).
class QParams {
  public:
    static QParams from_cNL(int N, double c, double L);
    // q given directly; (c, L) derived with L = 2 pi.
    static QParams from_qN(int N, double q);
    // scaled regime q = e^{-lambda/N}; (c, L) derived with L = 2 pi.
    static QParams from_lambdaN(int N, double lambda);

    int N() const { return N_; }
    double c() const { return c_; }
    double L() const { return L_; }
    double k2() const { return k2_; }
    double q() const { return q_; }
    QBase qbase() const { return QBase(q_); }
    std::optional<double> lambda() const { return lambda_; }

    // u = q^{-N} e^{2 pi x / L} and its inverse.
    double u_of_x(double x) const;
    double x_of_u(double u) const;
    double log_u_of_x(double x) const;  // log u, exact in the exponent

  private:
    QParams() = default;
    int N_ = 1;
    double c_ = 1, L_ = 1, k2_ = 1, q_ = 0.5;
    std::optional<double> lambda_;
};

// Particle configuration in exponential (x) coordinates.
using Configuration = std::vector<double>;

// w^{(SW)}(u; q) = (k/sqrt(pi)) e^{-k^2 (log u)^2}, u > 0.
double weight_sw(double u, const QParams& p);
SignedLog weight_sw_sl(double log_u, const QParams& p);

// int_0^inf u^n w^{(SW)}(u) du = q^{-(n+1)^2/2}.
SignedLog lognormal_moment(double n, const QParams& p);

// Exact normalization of the (SW) ensemble:
//   C_N^{(SW)} = N! q^{-N(2N-1)(2N+1)/6} prod_{j=1}^{N-1} (1-q^j)^{N-j}.
SignedLog norm_sw(const QParams& p);

// Exact normalization of the (SW_e) ensemble,
//   C_{N,c}^{(SW_e)} = N! 2^{-N(N-1)} (pi/c)^{N/2} q^{-N(N^2-1)/6}
//                      prod_{j=1}^{N-1} (1-q^j)^{N-j},
// fixed against the change of variables from C_N^{(SW)} and validated by
// quadrature (see tests).
SignedLog norm_swe(const QParams& p);

// log of the unnormalized SW_e density: -2 U_L(xs) with
// U_L = (c/2) sum x_j^2 - sum_{j<k} log|sinh(pi (x_k - x_j)/L)|.
// Coincident points return -infinity.
double log_density_swe(const Configuration& xs, const QParams& p);

// <sum x_j^2>_{SW_e} at L = 2 pi: -d/dc log C_{N,c}^{(SW_e)} in closed form.
double mean_square_displacement(int N, double c);

}  // namespace qrmt
