#include "qrmt/ensemble.hpp"

#include <cmath>
#include <numbers>

namespace qrmt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

QParams QParams::from_cNL(int N, double c, double L) {
    if (N < 1) throw std::domain_error("QParams: N >= 1 required");
    if (!(c > 0) || !(L > 0)) throw std::domain_error("QParams: c, L > 0 required");
    QParams p;
    p.N_ = N;
    p.c_ = c;
    p.L_ = L;
    p.k2_ = c * L * L / (kTwoPi * kTwoPi);
    p.q_ = std::exp(-1.0 / (2.0 * p.k2_));
    (void)QBase(p.q_);  // validate range
    return p;
}

QParams QParams::from_qN(int N, double q) {
    (void)QBase(q);
    const double k2 = -1.0 / (2.0 * std::log(q));
    // L = 2 pi, so c = k^2.
    QParams p = from_cNL(N, k2, kTwoPi);
    p.q_ = q;  // keep the caller's q bit-exact
    return p;
}

QParams QParams::from_lambdaN(int N, double lambda) {
    if (!(lambda > 0)) throw std::domain_error("QParams: lambda > 0 required");
    QParams p = from_qN(N, std::exp(-lambda / N));
    p.lambda_ = lambda;
    return p;
}

double QParams::u_of_x(double x) const { return std::exp(log_u_of_x(x)); }

double QParams::x_of_u(double u) const {
    if (!(u > 0)) throw std::domain_error("x_of_u: u > 0 required");
    // log u = -N log q + 2 pi x / L
    return (std::log(u) + N_ * std::log(q_)) * L_ / kTwoPi;
}

double QParams::log_u_of_x(double x) const {
    return -N_ * std::log(q_) + kTwoPi * x / L_;
}

double weight_sw(double u, const QParams& p) {
    if (!(u > 0)) throw std::domain_error("weight_sw: u > 0 required");
    const double k = std::sqrt(p.k2());
    const double lu = std::log(u);
    return k / std::sqrt(std::numbers::pi) * std::exp(-p.k2() * lu * lu);
}

SignedLog weight_sw_sl(double log_u, const QParams& p) {
    const double k = std::sqrt(p.k2());
    return SignedLog::from_double(k / std::sqrt(std::numbers::pi)) *
           SignedLog::from_log(-p.k2() * log_u * log_u);
}

SignedLog lognormal_moment(double n, const QParams& p) {
    return SignedLog::from_log(-0.5 * (n + 1) * (n + 1) * std::log(p.q()));
}

namespace {

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

// log prod_{j=1}^{N-1} (1 - q^j)^{N-j}
double log_qfactor(int N, double q) {
    const double lq = std::log(q);
    double s = 0.0;
    for (int j = 1; j < N; ++j)
        s += (N - j) * std::log1p(-std::exp(j * lq));
    return s;
}

}  // namespace

SignedLog norm_sw(const QParams& p) {
    const int N = p.N();
    const double lq = std::log(p.q());
    double lg = log_factorial(N);
    lg -= static_cast<double>(N) * (2.0 * N - 1.0) * (2.0 * N + 1.0) / 6.0 * lq;
    lg += log_qfactor(N, p.q());
    return SignedLog::from_log(lg);
}

SignedLog norm_swe(const QParams& p) {
    const int N = p.N();
    const double lq = std::log(p.q());
    double lg = log_factorial(N);
    lg -= static_cast<double>(N) * (N - 1.0) * std::numbers::ln2;
    lg += 0.5 * N * std::log(std::numbers::pi / p.c());
    lg -= static_cast<double>(N) * (static_cast<double>(N) * N - 1.0) / 6.0 * lq;
    lg += log_qfactor(N, p.q());
    return SignedLog::from_log(lg);
}

double log_density_swe(const Configuration& xs, const QParams& p) {
    const double c = p.c(), L = p.L();
    double lg = 0.0;
    for (double x : xs) lg -= c * x * x;
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = j + 1; k < xs.size(); ++k) {
            const double d = std::numbers::pi * (xs[k] - xs[j]) / L;
            if (d == 0.0) return -std::numeric_limits<double>::infinity();
            lg += 2.0 * std::log(std::abs(std::sinh(d)));
        }
    return lg;
}

double mean_square_displacement(int N, double c) {
    if (N < 1 || !(c > 0))
        throw std::domain_error("mean_square_displacement: N >= 1, c > 0");
    const double q = std::exp(-1.0 / (2.0 * c));
    double s = N / (2.0 * c) +
               static_cast<double>(N) * (static_cast<double>(N) * N - 1.0) /
                   (12.0 * c * c);
    for (int j = 1; j < N; ++j) {
        const double qj = std::pow(q, j);
        s += (N - j) * static_cast<double>(j) * qj / (1.0 - qj) / (2.0 * c * c);
    }
    return s;
}

}  // namespace qrmt
