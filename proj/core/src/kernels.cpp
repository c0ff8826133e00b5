#include "qrmt/kernels.hpp"

#include <cmath>
#include <numbers>

#include "qrmt/qcore.hpp"
#include "qrmt/threading.hpp"

namespace qrmt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2 sinh(t) as a SignedLog without overflow for large |t|.
SignedLog two_sinh_sl(double t) {
    if (t == 0.0) return SignedLog::zero();
    const double a = std::abs(t);
    // 2 sinh(a) = e^a (1 - e^{-2a})
    SignedLog r{t > 0 ? 1 : -1, a + std::log1p(-std::exp(-2.0 * a))};
    return r;
}

// phi_j(x) = sqrt((2 pi / L) u w(u)) S_j(u), u = q^{-N} e^{2 pi x / L}:
// the orthonormal SW_e frame functions, O(1) in the bulk.
SignedLog phi_swe(int j, double x, const QParams& p) {
    const double lu = p.log_u_of_x(x);
    SignedLog amp = weight_sw_sl(lu, p) * SignedLog::from_log(lu) *
                    SignedLog::from_double(kTwoPi / p.L());
    return amp.sqrt_abs() * sw_poly_logu(j, lu, p);
}

}  // namespace

double kernel_sw(double u, double v, const QParams& p, SwKernelRoute route) {
    if (!(u > 0) || !(v > 0))
        throw std::domain_error("kernel_sw: u, v > 0 required");
    const double lu = std::log(u), lv = std::log(v);
    const SignedLog amp =
        (weight_sw_sl(lu, p) * weight_sw_sl(lv, p)).sqrt_abs();
    switch (route) {
        case SwKernelRoute::sum: {
            SignedLog s = SignedLog::zero();
            for (int j = 0; j < p.N(); ++j)
                s += sw_poly_logu(j, lu, p) * sw_poly_logu(j, lv, p);
            return (amp * s).to_double();
        }
        case SwKernelRoute::cd: {
            const int N = p.N();
            // C_{N-1}/C_N = q^{-2N} sqrt(1 - q^N)
            const double lq = std::log(p.q());
            SignedLog ratio{1, -2.0 * N * lq +
                                   0.5 * std::log(-std::expm1(N * lq))};
            SignedLog num = sw_poly_logu(N, lu, p) * sw_poly_logu(N - 1, lv, p) -
                            sw_poly_logu(N - 1, lu, p) * sw_poly_logu(N, lv, p);
            SignedLog den = SignedLog::from_double(u - v);
            return (amp * ratio * num / den).to_double();
        }
    }
    return 0.0;
}

double kernel_swe(double x, double y, const QParams& p) {
    SignedLog s = SignedLog::zero();
    for (int j = 0; j < p.N(); ++j) s += phi_swe(j, x, p) * phi_swe(j, y, p);
    return s.to_double();
}

namespace {

SignedLog ell_sl(double y, const QParams& p, int xi) {
    const double L = p.L();
    const double lq = std::log(p.q());
    const SignedLog z{-1, 0.5 * lq + kTwoPi * y / L};
    SignedLog r = theta3_sl(z, p.qbase());
    r *= SignedLog::from_log((xi + 1.0) * std::numbers::pi * y / (2.0 * L) -
                             0.5 * p.c() * y * y);
    return r;
}

SignedLog ell_hat_sl(double y, const QParams& p, int xihat) {
    const double L = p.L();
    const double qhat = std::exp(-0.5 * p.c() * L * L);
    SignedLog r = theta1_sl(0.25 * std::numbers::pi + 0.5 * p.c() * L * y,
                            QBase(qhat));
    r *= SignedLog::from_log(-xihat * std::numbers::pi * y / (2.0 * L));
    return r;
}

}  // namespace

double ell(double y, const QParams& p, int xi) {
    return ell_sl(y, p, xi).to_double();
}

double ell_hat(double y, const QParams& p, int xihat) {
    return ell_hat_sl(y, p, xihat).to_double();
}

double kernel_bulk(double x, double y, const QParams& p, BulkForm form,
                   int parity) {
    if (parity != 1 && parity != -1)
        throw std::domain_error("kernel_bulk: parity must be +1 or -1");
    const double L = p.L();
    const SignedLog den = two_sinh_sl(std::numbers::pi * (x - y) / L);
    switch (form) {
        case BulkForm::theta3: {
            // Even-N finite kernels converge to the xi = -1 branch.
            const int xi = (parity == 1) ? -1 : +1;
            SignedLog pinf = qpochhammer_inf(p.qbase());
            SignedLog pref =
                SignedLog::from_double(std::sqrt(p.c() / std::numbers::pi)) /
                (pinf * pinf * pinf);
            SignedLog num = ell_sl(x, p, xi) * ell_sl(-y, p, xi) -
                            ell_sl(y, p, xi) * ell_sl(-x, p, xi);
            if (x == y) {
                // Diagonal by l'Hopital on the antisymmetric numerator.
                const double h = 1e-5;
                return 0.5 * (kernel_bulk(x - h, y + h, p, form, parity) +
                              kernel_bulk(x + h, y - h, p, form, parity));
            }
            return (pref * num / den).to_double();
        }
        case BulkForm::theta1: {
            const int xihat = (parity == 1) ? +1 : -1;
            const double qhat = std::exp(-0.5 * p.c() * L * L);
            SignedLog pref =
                SignedLog::one() /
                (SignedLog::from_double(L) * theta1_prime0_sl(QBase(qhat * qhat)));
            SignedLog num = ell_hat_sl(x, p, xihat) * ell_hat_sl(-y, p, xihat) -
                            ell_hat_sl(y, p, xihat) * ell_hat_sl(-x, p, xihat);
            if (x == y) {
                const double h = 1e-5;
                return 0.5 * (kernel_bulk(x - h, y + h, p, form, parity) +
                              kernel_bulk(x + h, y - h, p, form, parity));
            }
            return (pref * num / den).to_double();
        }
    }
    return 0.0;
}

SignedLog kernel_edge_sl(double X, double Y, const QParams& p) {
    const double L = p.L();
    const double lq = std::log(p.q());
    const QBase qb = p.qbase();
    const SignedLog pref =
        SignedLog::from_double(std::sqrt(p.c() / std::numbers::pi)) /
        qpochhammer_inf(qb);
    auto la = [&](double Z) { return 0.5 * lq + kTwoPi * Z / L; };
    auto lb = [&](double Z) { return -0.5 * lq + kTwoPi * Z / L; };
    if (std::abs(X - Y) < 1e-6) {
        const double M = 0.5 * (X + Y);
        const SignedLog a = SignedLog::from_log(la(M));
        const SignedLog b = SignedLog::from_log(lb(M));
        const SignedLog diag =
            a * aq_prime_sl(la(M), 1, qb) * aq_sl(lb(M), 1, qb) -
            b * aq_sl(la(M), 1, qb) * aq_prime_sl(lb(M), 1, qb);
        return pref * SignedLog::from_log(-p.c() * M * M) * diag;
    }
    const SignedLog gauss =
        SignedLog::from_log(-0.5 * p.c() * (X * X + Y * Y));
    const SignedLog num = aq_sl(la(X), 1, qb) * aq_sl(lb(Y), 1, qb) -
                          aq_sl(la(Y), 1, qb) * aq_sl(lb(X), 1, qb);
    const SignedLog den = two_sinh_sl(std::numbers::pi * (X - Y) / L);
    return pref * gauss * num / den;
}

double kernel_edge(double X, double Y, const QParams& p) {
    return kernel_edge_sl(X, Y, p).to_double();
}

std::vector<double> sine_limit_error(const std::vector<double>& L_values,
                                     double c) {
    std::vector<double> out(L_values.size());
    parallel_for(L_values.size(), [&](std::size_t i) {
        const double L = L_values[i];
        const QParams p = QParams::from_cNL(1, c, L);
        const double scale = kTwoPi / (c * L);
        constexpr int kGrid = 21;
        double worst = 0.0;
        for (int a = 0; a < kGrid; ++a)
            for (int b = 0; b < kGrid; ++b) {
                const double x = -2.0 + 4.0 * a / (kGrid - 1);
                const double y = -2.0 + 4.0 * b / (kGrid - 1);
                const double k =
                    scale * kernel_bulk(scale * x, scale * y, p,
                                        BulkForm::theta1, +1);
                const double d = x - y;
                const double sinc =
                    (d == 0.0) ? 1.0
                               : std::sin(std::numbers::pi * d) /
                                     (std::numbers::pi * d);
                worst = std::max(worst, std::abs(k - sinc));
            }
        out[i] = worst;
    });
    return out;
}

double airy_rescaled_edge(double x, double y, const QParams& p) {
    const double L = p.L();
    const double eps = 2.0 * std::numbers::pi * std::numbers::pi /
                       (p.c() * L * L);
    const double e23 = std::pow(eps, 2.0 / 3.0);
    auto X = [&](double t) {
        return (L / kTwoPi) * (std::log(0.25) - e23 * t);
    };
    const SignedLog k = kernel_edge_sl(X(x), X(y), p);
    return (SignedLog::from_double((L / kTwoPi) * e23) * k).to_double();
}

}  // namespace qrmt
