#include <cmath>

#include "qrmt/qcore.hpp"

// Airy Ai and Ai' on the real line.  Strategy:
//   |x| <= 8 : Maclaurin series f/g pair evaluated in __float128.  The terms
//              grow to ~ 3e7 at x = -8 while Ai(-8) ~ 0.04, so ~9 extra
//              digits are consumed; quad precision retains ~1e-24 relative.
//   x  >  8 : standard asymptotic expansion in zeta = (2/3) x^{3/2}.
//   x  < -8 : oscillatory asymptotic expansion (sin/cos pair).
// Both sides of the switch agree to ~1e-13 relative.

namespace qrmt {
namespace {

using quad = __float128;

constexpr double kAiryC1 = 0.3550280538878172392600631860041831763980;  // Ai(0)
constexpr double kAiryC2 = 0.2588194037928067984051835601892039634793;  // -Ai'(0)

struct AiPair {
    double ai;
    double aip;
};

AiPair airy_series(double x) {
    const quad xq = x;
    const quad x3 = xq * xq * xq;
    // f(x) = sum t_k, t_0 = 1,      t_{k+1} = t_k x^3 / ((3k+2)(3k+3))
    // g(x) = sum s_k, s_0 = x,      s_{k+1} = s_k x^3 / ((3k+3)(3k+4))
    // Ai  = c1 f - c2 g;  Ai' = c1 f' - c2 g' with the differentiated series:
    // f'(x) = sum t_k * 3k / x ... easier: track f' and g' term-wise.
    quad t = 1, s = xq;
    quad f = t, g = s;
    quad fp = 0, gp = 1;  // d/dx of the running terms' sums
    for (int k = 0; k < 200; ++k) {
        const quad tn = t * x3 / ((3 * k + 2) * (3 * k + 3));
        const quad sn = s * x3 / ((3 * k + 3) * (3 * k + 4));
        f += tn;
        g += sn;
        // term of f is x^{3(k+1)} * coeff -> derivative adds 3(k+1)/x * term
        fp += tn * (3 * (k + 1)) / xq;
        gp += sn * (3 * (k + 1) + 1) / xq;
        t = tn;
        s = sn;
        const double mag = std::fabs(static_cast<double>(tn)) +
                           std::fabs(static_cast<double>(sn));
        if (mag < 1e-40) break;
    }
    const quad c1 = (quad)0.3550280538878172392600631860041831763980Q;
    const quad c2 = (quad)0.2588194037928067984051835601892039634793Q;
    AiPair out;
    out.ai = static_cast<double>(c1 * f - c2 * g);
    out.aip = static_cast<double>(c1 * fp - c2 * gp);
    return out;
}

AiPair airy_asymptotic_pos(double x) {
    // Ai(x)  ~ e^{-zeta} / (2 sqrt(pi) x^{1/4}) * sum (-1)^k u_k zeta^{-k}
    // Ai'(x) ~ -x^{1/4} e^{-zeta} / (2 sqrt(pi)) * sum (-1)^k v_k zeta^{-k}
    // u_0 = v_0 = 1, u_{k+1} = u_k (6k+1)(6k+5) / (72 (k+1)),
    // v_k = -u_k (6k+1)/(6k-1) for k >= 1.
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    double u = 1.0, su = 1.0, sv = 1.0, zk = 1.0;
    double prev = 1e300;
    for (int k = 0; k < 60; ++k) {
        const double un = u * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1));
        const double vn = -un * (6.0 * k + 7.0) / (6.0 * k + 5.0);
        zk /= -zeta;
        if (std::fabs(un * zk) > prev) break;  // divergent tail: stop at minimum
        prev = std::fabs(un * zk);
        su += un * zk;  // zk = (-1/zeta)^m already carries the (-1)^m
        sv += vn * zk;
        u = un;
    }
    const double pref = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));
    AiPair out;
    out.ai = pref * su / std::pow(x, 0.25);
    out.aip = -pref * std::pow(x, 0.25) * sv;
    return out;
}

AiPair airy_asymptotic_neg(double x) {
    // x < 0, t = -x:
    // Ai(-t)  ~ ( sin(zeta + pi/4) P(zeta) - cos(zeta + pi/4) Q(zeta) )
    //            / (sqrt(pi) t^{1/4})
    // Ai'(-t) ~ -t^{1/4}/sqrt(pi) ( cos(zeta + pi/4) R(zeta)
    //                               + sin(zeta + pi/4) S(zeta) )
    // P = sum (-1)^k u_{2k} zeta^{-2k},   Q = sum (-1)^k u_{2k+1} zeta^{-2k-1}
    // R = sum (-1)^k v_{2k} zeta^{-2k},   S = sum (-1)^k v_{2k+1} zeta^{-2k-1}
    const double t = -x;
    const double zeta = 2.0 / 3.0 * std::pow(t, 1.5);
    double u = 1.0, v = 1.0;
    double P = 1.0, Q = 0.0, R = 1.0, S = 0.0;
    double zpow = 1.0;
    double prev = 1e300;
    for (int k = 0; k < 60; ++k) {
        const double un = u * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1));
        const double vn = -un * (6.0 * k + 7.0) / (6.0 * k + 5.0);
        zpow /= zeta;
        if (std::fabs(un * zpow) > prev) break;
        prev = std::fabs(un * zpow);
        const int m = k + 1;  // index of u_m being added
        const double sgn = ((m / 2) % 2) ? -1.0 : 1.0;  // (-1)^{floor(m/2)}
        if (m % 2 == 1) {
            Q += sgn * un * zpow;
            S += sgn * vn * zpow;
        } else {
            P += sgn * un * zpow;
            R += sgn * vn * zpow;
        }
        u = un;
        v = vn;
    }
    (void)v;
    const double ph = zeta + M_PI / 4.0;
    const double sp = std::sin(ph), cp = std::cos(ph);
    AiPair out;
    out.ai = (sp * P - cp * Q) / (std::sqrt(M_PI) * std::pow(t, 0.25));
    out.aip = -std::pow(t, 0.25) / std::sqrt(M_PI) * (cp * R + sp * S);
    return out;
}

AiPair airy_pair(double x) {
    if (std::fabs(x) <= 8.0) {
        if (x == 0.0) return {kAiryC1, -kAiryC2};
        return airy_series(x);
    }
    return x > 0 ? airy_asymptotic_pos(x) : airy_asymptotic_neg(x);
}

}  // namespace

double airy_ai(double x) { return airy_pair(x).ai; }
double airy_ai_prime(double x) { return airy_pair(x).aip; }

double airy_kernel(double x, double y) {
    AiPair a = airy_pair(x);
    if (x == y) return a.aip * a.aip - x * a.ai * a.ai;
    AiPair b = airy_pair(y);
    // Near-diagonal: switch to the Taylor form to avoid 0/0 amplification.
    if (std::fabs(x - y) < 1e-6 * (1.0 + std::fabs(x))) {
        const double m = 0.5 * (x + y);
        AiPair c = airy_pair(m);
        // K(m,m) + (x-y)^2/12 * d^2... keep leading term; error O((x-y)^2).
        return c.aip * c.aip - m * c.ai * c.ai;
    }
    return (a.ai * b.aip - b.ai * a.aip) / (x - y);
}

}  // namespace qrmt
