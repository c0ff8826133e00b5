#include "qrmt/swpoly.hpp"

#include <cmath>

#include "highprec.hpp"
#include "qrmt/qcore.hpp"

namespace qrmt {

namespace {

constexpr double kCancelDigits = 12.0;

// The alternating core sum sum_{nu=0}^{l} [l nu]_q q^{nu^2} (-q^{1/2} u)^nu,
// with the MPFR fallback when SignedLog accumulation cancels too deeply.
SignedLog sw_core_sum(int l, double log_u, const QParams& p) {
    const double lq = std::log(p.q());
    std::vector<SignedLog> terms;
    terms.reserve(l + 1);
    SignedLog t = SignedLog::one();
    terms.push_back(t);
    for (int nu = 1; nu <= l; ++nu) {
        // term ratio: (1 - q^{l-nu+1})/(1 - q^{nu}) * q^{2nu-1} * (-q^{1/2} u)
        const double num = -std::expm1(static_cast<double>(l - nu + 1) * lq);
        const double den = -std::expm1(static_cast<double>(nu) * lq);
        t *= SignedLog::from_double(num) / SignedLog::from_double(den);
        t *= SignedLog{-1, (2.0 * nu - 1.0) * lq + 0.5 * lq + log_u};
        terms.push_back(t);
    }
    SignedLogSum s = signed_log_sum(terms);
    if (s.cancellation_digits() > kCancelDigits)
        return detail::swpoly_sum_mpfr(l, log_u, lq);
    return s.value;
}

// (-1)^l q^{l/2+1/4} / sqrt((q;q)_l)
SignedLog sw_prefactor(int l, const QParams& p) {
    SignedLog pref{(l % 2) ? -1 : 1, (0.5 * l + 0.25) * std::log(p.q())};
    return pref / qpochhammer(p.q(), p.qbase(), l).sqrt_abs();
}

}  // namespace

SignedLog sw_poly(int l, double u, const QParams& p) {
    if (!(u > 0)) throw std::domain_error("sw_poly: u > 0 required");
    return sw_poly_logu(l, std::log(u), p);
}

SignedLog sw_poly_logu(int l, double log_u, const QParams& p) {
    if (l < 0) throw std::domain_error("sw_poly: l >= 0 required");
    return sw_prefactor(l, p) * sw_core_sum(l, log_u, p);
}

SignedLog sw_leading_coeff(int l, const QParams& p) {
    if (l < 0) throw std::domain_error("sw_leading_coeff: l >= 0 required");
    SignedLog num =
        SignedLog::from_log((static_cast<double>(l) * l + l + 0.25) * std::log(p.q()));
    return num / qpochhammer(p.q(), p.qbase(), l).sqrt_abs();
}

std::vector<SignedLog> sw_poly_coefficients(int l, const QParams& p) {
    if (l < 0) throw std::domain_error("sw_poly_coefficients: l >= 0 required");
    const double lq = std::log(p.q());
    const SignedLog pref = sw_prefactor(l, p);
    std::vector<SignedLog> coeffs(l + 1);
    for (int nu = 0; nu <= l; ++nu) {
        SignedLog c = qbinomial(l, nu, p.qbase());
        c *= SignedLog{(nu % 2) ? -1 : 1,
                       (static_cast<double>(nu) * nu + 0.5 * nu) * lq};
        coeffs[nu] = pref * c;
    }
    return coeffs;
}

SignedLog sw_poly_monic(int l, double u, const QParams& p) {
    if (!(u > 0)) throw std::domain_error("sw_poly_monic: u > 0 required");
    return sw_poly_monic_logu(l, std::log(u), p);
}

SignedLog sw_poly_monic_logu(int l, double log_u, const QParams& p) {
    return sw_poly_logu(l, log_u, p) / sw_leading_coeff(l, p);
}

double qdifference_residual(int l, double x, const QParams& p) {
    if (!(x > 0)) throw std::domain_error("qdifference_residual: x > 0 required");
    const double lq = std::log(p.q());
    const double lx = std::log(x);
    // f(x) = monic S_l evaluated at q^{-1/2} x
    auto f = [&](double log_arg) {
        return sw_poly_monic_logu(l, log_arg - 0.5 * lq, p);
    };
    const SignedLog inv_x = SignedLog::from_log(-lx);
    const SignedLog t1 = f(lx + lq);
    const SignedLog t2 = -(f(lx) * inv_x);
    const SignedLog t3 = f(lx - lq) * inv_x;
    const SignedLog rhs = SignedLog::from_log(l * lq) * f(lx);
    const SignedLog resid = t1 + t2 + t3 - rhs;
    double scale = std::max({t1.abs().logmag, t2.abs().logmag, t3.abs().logmag,
                             rhs.abs().logmag});
    if (resid.is_zero()) return 0.0;
    return std::exp(resid.logmag - scale);
}

double sw_symmetry_residual(int n, double z, const QParams& p) {
    if (!(z > 0)) throw std::domain_error("sw_symmetry_residual: z > 0 required");
    const double lq = std::log(p.q());
    const double lz = std::log(z);
    const SignedLog lhs = sw_poly_logu(n, lz, p);
    // q^{n/2} (-z q^n)^n S_n(1/(z q^{2n+1}); q)
    const SignedLog factor =
        SignedLog{(n % 2) ? -1 : 1, 0.5 * n * lq + n * (lz + n * lq)};
    const SignedLog rhs = factor * sw_poly_logu(n, -lz - (2.0 * n + 1.0) * lq, p);
    const SignedLog resid = lhs - rhs;
    if (resid.is_zero()) return 0.0;
    return std::exp(resid.logmag - lhs.abs().logmag);
}

WigertExpansion wigert_expansion(int N, double z, const QParams& p) {
    if (!(z > 0)) throw std::domain_error("wigert_expansion: z > 0 required");
    const double lq = std::log(p.q());
    const double lz = std::log(z);
    const QBase qb = p.qbase();
    SignedLog pref = qpochhammer(p.q(), qb, N).sqrt_abs() / qpochhammer_inf(qb);
    pref *= SignedLog{(N % 2) ? -1 : 1, (0.5 * N + 0.25) * lq};
    const SignedLog a1 = aq_sl(lz + 0.5 * lq, 1, qb);
    const SignedLog a2 = aq_sl(lz - 0.5 * lq, 1, qb);
    // correction coefficient q^{1+N}/(1-q)
    const SignedLog corr =
        SignedLog::from_log((1.0 + N) * lq) / SignedLog::from_double(-std::expm1(lq));
    WigertExpansion out;
    out.leading = pref * a1;
    out.corrected = pref * (a1 - corr * a2);
    return out;
}

}  // namespace qrmt
