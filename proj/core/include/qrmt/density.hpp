#pragma once

// Limiting global spectral density: closed-form resolvent, Stieltjes
// inversion, support endpoints, Rogers-Szego analogue, and the
// functional-equation verification.

#include <complex>

namespace qrmt {

// Support endpoints: with z = 1 - 2 e^lambda, z_pm = -z ± sqrt(z^2 - 1);
// 0 < z_minus < 1 < z_plus and z_minus * z_plus = 1.
struct Support {
    double z_minus;
    double z_plus;
    double lambda;
};
Support support(double lambda);

// G(y) = -(1/(lambda y)) log[(1 + y + sqrt((1+y)^2 - 4 y e^lambda)) /
//                            (2 y e^lambda)], y real outside [z-, z+].
// Branch: G(y) -> 1/y as y -> +inf.  Inside the support or y = 0: domain
// error.
double resolvent(double y, double lambda);
// Complex extension with the cut exactly on [z-, z+]:
// sqrt((1+w)^2 - 4 w e^lambda) = sqrt(w - z-) * sqrt(w - z+) (principal
// factors).
std::complex<double> resolvent(std::complex<double> w, double lambda);

// rho(x) = (1/(pi lambda x)) arctan(sqrt(4 e^lambda x - (1+x)^2)/(1+x)) on
// (z-, z+), 0 outside.
double rho(double x, double lambda);

// Sokhotski-Plemelj inversion (G(x - i eps) - G(x + i eps)) / (2 pi i),
// Richardson-extrapolated over the given eps sequence (eps halving).
double stieltjes_inversion(double x, double lambda, double eps = 1e-3);

// Rogers-Szego density on [-pi, pi], unit mass, supported on
// cos(theta) >= cos(theta_c) = 2 e^{-lambda/2} - 1.
double rho_rs(double theta, double lambda);

// |e^{-u} + e^{u-y} - e^{-lambda} - e^{-y}| with y = lambda + log x and
// u = lambda x int rho(t)/(x - t) dt (Plemelj boundary value inside the
// support: u = PV + i pi lambda x rho(x)).
double functional_eq_residual(double x, double lambda);

}  // namespace qrmt
