#include "qrmt/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrmt/quadrature.hpp"

namespace qrmt {

Support support(double lambda) {
    if (!(lambda > 0)) throw std::domain_error("support: lambda > 0 required");
    const double z = 1.0 - 2.0 * std::exp(lambda);
    const double s = std::sqrt(z * z - 1.0);
    return {-z - s, -z + s, lambda};
}

std::complex<double> resolvent(std::complex<double> w, double lambda) {
    if (w == std::complex<double>(0.0, 0.0))
        throw std::domain_error("resolvent: w = 0 is a pole of the formula");
    const Support sp = support(lambda);
    // Branch with the cut exactly on [z-, z+]:
    const std::complex<double> s =
        std::sqrt(w - sp.z_minus) * std::sqrt(w - sp.z_plus);
    const std::complex<double> num = 1.0 + w + s;
    const std::complex<double> den = 2.0 * w * std::exp(lambda);
    return -1.0 / (lambda * w) * std::log(num / den);
}

double resolvent(double y, double lambda) {
    const Support sp = support(lambda);
    if (y == 0.0 || (y >= sp.z_minus && y <= sp.z_plus))
        throw std::domain_error(
            "resolvent: real evaluation requires y outside [z-, z+] and y != 0");
    return resolvent(std::complex<double>(y, 0.0), lambda).real();
}

double rho(double x, double lambda) {
    const Support sp = support(lambda);
    if (x <= sp.z_minus || x >= sp.z_plus) return 0.0;
    const double disc = 4.0 * std::exp(lambda) * x - (1.0 + x) * (1.0 + x);
    if (disc <= 0.0) return 0.0;
    // 1 + x > 0 throughout the (positive) support, so plain atan suffices.
    return std::atan(std::sqrt(disc) / (1.0 + x)) / (std::numbers::pi * lambda * x);
}

double stieltjes_inversion(double x, double lambda, double eps) {
    if (!(eps > 0)) throw std::domain_error("stieltjes_inversion: eps > 0");
    // f(e) = Im G(x - i e) / pi = rho(x) + a1 e + a2 e^2 + ... inside the
    // support (and -> 0 outside); Richardson on an eps-halving ladder.
    constexpr int kLevels = 5;
    double t[kLevels][kLevels];
    double e = eps;
    for (int i = 0; i < kLevels; ++i, e *= 0.5) {
        const std::complex<double> gm =
            resolvent(std::complex<double>(x, -e), lambda);
        t[i][0] = gm.imag() / std::numbers::pi;
        for (int k = 1; k <= i; ++k)
            t[i][k] =
                (std::pow(2.0, k) * t[i][k - 1] - t[i - 1][k - 1]) /
                (std::pow(2.0, k) - 1.0);
    }
    return t[kLevels - 1][kLevels - 1];
}

double rho_rs(double theta, double lambda) {
    if (!(lambda > 0)) throw std::domain_error("rho_rs: lambda > 0 required");
    const double ctc = 2.0 * std::exp(-0.5 * lambda) - 1.0;
    const double ct = std::cos(theta);
    if (ct <= ctc) return 0.0;
    const double inner = (1.0 - ctc + 2.0 * ct +
                          2.0 * std::cos(0.5 * theta) *
                              std::sqrt(2.0 * ct - 2.0 * ctc)) /
                         (1.0 + ctc);
    return std::log(inner) / (std::numbers::pi * lambda);
}

double functional_eq_residual(double x, double lambda) {
    if (!(x > 0)) throw std::domain_error("functional_eq_residual: x > 0");
    const Support sp = support(lambda);
    const double y = lambda + std::log(x);
    std::complex<double> u;
    if (x < sp.z_minus || x > sp.z_plus) {
        u = lambda * x * resolvent(x, lambda);
    } else {
        // Plemelj boundary value: u = PV integral + i pi lambda x rho(x).
        // PV split: symmetric window of half-width d around x plus the two
        // outer pieces, with sin^2 substitutions absorbing the sqrt edges.
        const double d = 0.5 * std::min(x - sp.z_minus, sp.z_plus - x);
        auto sym = [&](double s) {
            return (rho(x - s, lambda) - rho(x + s, lambda)) / s;
        };
        double pv = gl_integrate(sym, 80, 0.0, d);
        auto left = [&](double th) {
            const double len = (x - d) - sp.z_minus;
            const double st = std::sin(th);
            const double t = sp.z_minus + len * st * st;
            return rho(t, lambda) / (x - t) * len * 2.0 * st * std::cos(th);
        };
        auto right = [&](double th) {
            const double len = sp.z_plus - (x + d);
            const double st = std::sin(th);
            const double t = sp.z_plus - len * st * st;
            return rho(t, lambda) / (x - t) * len * 2.0 * st * std::cos(th);
        };
        pv += gl_integrate_panels(left, 40, 0.0, 0.5 * std::numbers::pi, 4);
        pv += gl_integrate_panels(right, 40, 0.0, 0.5 * std::numbers::pi, 4);
        u = std::complex<double>(lambda * x * pv,
                                 std::numbers::pi * lambda * x * rho(x, lambda));
    }
    const std::complex<double> r = std::exp(-u) + std::exp(u - y) -
                                   std::exp(-lambda) - std::exp(-y);
    return std::abs(r);
}

}  // namespace qrmt
