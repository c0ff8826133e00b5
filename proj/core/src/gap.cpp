#include "qrmt/gap.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrmt/kernels.hpp"
#include "qrmt/quadrature.hpp"
#include "qrmt/threading.hpp"

namespace qrmt {

namespace {

double derive_T(const QParams& p) {
    // e^{-c T^2} < 1e-16
    return std::sqrt(16.0 * std::log(10.0) / p.c()) + 1.0;
}

// log(erfc(t)/2), stable for large positive t where erfc underflows.
double log_half_erfc(double t) {
    if (t < 25.0) return std::log(0.5 * std::erfc(t));
    // erfc(t) ~ e^{-t^2}/(t sqrt(pi)) (1 - 1/(2t^2) + 3/(4t^4))
    const double t2 = t * t;
    return -t2 - std::log(t * std::sqrt(std::numbers::pi)) - std::numbers::ln2 +
           std::log1p(-0.5 / t2 + 0.75 / (t2 * t2));
}

double log_gap2d(double s, double L, int n_factors) {
    if (!(L > 0)) throw std::domain_error("gap2d_product: L > 0 required");
    double lg = 0.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int l = 0;; ++l) {
        if (n_factors >= 0 && l >= n_factors) break;
        const double t = (s - 2.0 * std::numbers::pi * (2.0 * l + 1.0) / L) *
                         inv_sqrt2;
        const double f = log_half_erfc(t);
        lg += f;
        // Once the factor is within 1e-16 of 1 the remaining tail is
        // negligible (factors increase monotonically toward 1).
        if (n_factors < 0 && -f < 1e-16) break;
        if (l > 100000000) break;
    }
    return lg;
}

}  // namespace

double gap_probability(double s, const QParams& p, const FredholmConfig& cfg) {
    if (cfg.nodes < 2) throw std::domain_error("gap_probability: nodes >= 2");
    const double T = (cfg.T > 0) ? cfg.T : derive_T(p);
    if (s <= -T) return 1.0;
    GLRule rule = gauss_legendre(cfg.nodes, -T, s);
    const int n = cfg.nodes;
    Eigen::MatrixXd m(n, n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        for (int j = static_cast<int>(i); j < n; ++j) {
            const double k = kernel_edge(rule.x[i], rule.x[j], p);
            const double v = std::sqrt(rule.w[i] * rule.w[j]) * k;
            m(static_cast<int>(i), j) = v;
            m(j, static_cast<int>(i)) = v;
        }
    });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                      Eigen::EigenvaluesOnly);
    double det = 1.0;
    for (int i = 0; i < n; ++i) det *= 1.0 - es.eigenvalues()[i];
    return det;
}

double leftmost_pdf(double s, const QParams& p, const FredholmConfig& cfg) {
    const double h = 1e-3;
    auto f = [&](double t) { return gap_probability(t, p, cfg); };
    if (cfg.richardson) {
        // 5-point stencil: O(h^4)
        return -(f(s - 2 * h) - 8 * f(s - h) + 8 * f(s + h) - f(s + 2 * h)) /
               (12 * h);
    }
    return -(f(s + h) - f(s - h)) / (2 * h);
}

double gap2d_product(double s, double L, int n_factors) {
    return std::exp(log_gap2d(s, L, n_factors));
}

TailFit right_tail_exponent(double L, double s_min, double s_max, int n_pts) {
    if (n_pts < 3 || !(s_max > s_min))
        throw std::domain_error("right_tail_exponent: bad fit window");
    // linear least squares of -log gap2d against s^3 (with intercept).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs(n_pts), ys(n_pts);
    for (int i = 0; i < n_pts; ++i) {
        const double s = s_min + (s_max - s_min) * i / (n_pts - 1);
        xs[i] = s * s * s;
        ys[i] = -log_gap2d(s, L, -1);
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double n = n_pts;
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    double rss = 0, tss = 0;
    for (int i = 0; i < n_pts; ++i) {
        const double fit = slope * xs[i] + icept;
        rss += (ys[i] - fit) * (ys[i] - fit);
        tss += ys[i] * ys[i];
    }
    TailFit out;
    out.coefficient = slope;
    out.residual = std::sqrt(rss / tss);
    out.inconclusive = out.residual > 0.10;
    return out;
}

}  // namespace qrmt
