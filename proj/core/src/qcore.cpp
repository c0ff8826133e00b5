#include "qrmt/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "highprec.hpp"

namespace qrmt {

namespace {
constexpr double kRelTol = 1e-17;
// Digits of cancellation tolerated before switching to arbitrary precision.
constexpr double kCancelDigits = 12.0;
}  // namespace

SignedLog qpochhammer(double a, QBase q, int n) {
    if (n < 0) throw std::domain_error("qpochhammer: n must be nonnegative");
    SignedLog r = SignedLog::one();
    double qj = 1.0;
    for (int j = 0; j < n; ++j) {
        r *= SignedLog::from_double(1.0 - a * qj);
        qj *= q.q;
    }
    return r;
}

SignedLog qpochhammer_inf(QBase q) {
    // log (q;q)_inf = sum_j log1p(-q^j); truncate when the next factor
    // differs from 1 by < 1e-17 relative.
    double lg = 0.0;
    double qj = q.q;
    // q^j underflows long before j exceeds this bound for any q < 1 - 1e-12.
    for (long j = 1; j < 100000000L; ++j) {
        if (qj < kRelTol) break;
        lg += std::log1p(-qj);
        qj *= q.q;
    }
    return SignedLog::from_log(lg);
}

SignedLog qbinomial(int n, int m, QBase q) {
    if (m < 0 || m > n) throw std::domain_error("qbinomial: need 0 <= m <= n");
    // [n m]_q = prod_{j=1}^{m} (1 - q^{n-m+j}) / (1 - q^j)
    SignedLog r = SignedLog::one();
    for (int j = 1; j <= m; ++j) {
        double num = -std::expm1(static_cast<double>(n - m + j) * std::log(q.q));
        double den = -std::expm1(static_cast<double>(j) * std::log(q.q));
        r *= SignedLog::from_double(num) / SignedLog::from_double(den);
    }
    return r;
}

SignedLog qbinomial_qinv(int n, int m, QBase q) {
    // [n m]_{q^{-1}} = q^{-m(n-m)} [n m]_q : finite product in base q.
    SignedLog shift = SignedLog::from_log(-static_cast<double>(m) *
                                          static_cast<double>(n - m) *
                                          std::log(q.q));
    return shift * qbinomial(n, m, q);
}

std::complex<double> theta3(std::complex<double> z, QBase q) {
    if (z == std::complex<double>(0.0, 0.0))
        throw std::domain_error("theta3: z must be nonzero");
    std::complex<double> s(1.0, 0.0);
    const double azmax = std::max(std::abs(z), 1.0 / std::abs(z));
    std::complex<double> zp = z, zm = 1.0 / z;
    double qn2 = 1.0;  // q^{n^2} via q^{n^2} = q^{(n-1)^2} * q^{2n-1}
    double q2n1 = q.q;
    for (int n = 1; n < 100000; ++n) {
        qn2 *= q2n1;
        q2n1 *= q.q * q.q;
        s += qn2 * (zp + zm);
        if (qn2 * std::pow(azmax, n) < kRelTol) break;
        zp *= z;
        zm /= z;
    }
    return s;
}

double theta3(double z, QBase q) { return theta3(std::complex<double>(z, 0), q).real(); }

SignedLog theta3_sl(SignedLog z, QBase q) {
    if (z.is_zero()) throw std::domain_error("theta3: z must be nonzero");
    const double lq = std::log(q.q);
    std::vector<SignedLog> terms;
    terms.push_back(SignedLog::one());
    for (int n = 1; n < 100000; ++n) {
        const double qn2 = static_cast<double>(n) * n * lq;
        SignedLog zp = z.pow_int(n), zm = z.pow_int(-n);
        terms.push_back(SignedLog::from_log(qn2) * zp);
        terms.push_back(SignedLog::from_log(qn2) * zm);
        if (qn2 + static_cast<double>(n) * std::abs(z.logmag) <
            std::log(kRelTol) + std::max(0.0, terms.front().logmag))
            break;
    }
    return signed_log_sum(terms).value;
}

double theta1(double x, QBase q) {
    // 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1)x)
    const double lq = std::log(q.q);
    double s = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const double mag = std::exp((n + 0.5) * (n + 0.5) * lq);
        s += 2.0 * ((n % 2) ? -1.0 : 1.0) * mag * std::sin((2 * n + 1) * x);
        if (mag < kRelTol * std::max(std::abs(s), std::exp(0.25 * lq))) break;
    }
    return s;
}

double theta1_prime0(QBase q) {
    const double lq = std::log(q.q);
    double s = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const double mag = std::exp((n + 0.5) * (n + 0.5) * lq);
        s += 2.0 * ((n % 2) ? -1.0 : 1.0) * (2 * n + 1) * mag;
        if (mag * (2 * n + 1) < kRelTol * std::max(std::abs(s), std::exp(0.25 * lq)))
            break;
    }
    return s;
}

SignedLog theta1_sl(double x, QBase q) {
    // The leading magnitude 2 q^{1/4} can underflow for qhat = e^{-c L^2/2};
    // factor it out and sum the remainder in doubles.
    const double lq = std::log(q.q);
    double s = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const double rel = std::exp(((n + 0.5) * (n + 0.5) - 0.25) * lq);
        s += ((n % 2) ? -1.0 : 1.0) * rel * std::sin((2 * n + 1) * x);
        if (rel < kRelTol) break;
    }
    return SignedLog::from_double(2.0 * s) * SignedLog::from_log(0.25 * lq);
}

SignedLog theta1_prime0_sl(QBase q) {
    const double lq = std::log(q.q);
    double s = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const double rel = std::exp(((n + 0.5) * (n + 0.5) - 0.25) * lq);
        s += ((n % 2) ? -1.0 : 1.0) * (2 * n + 1) * rel;
        if (rel * (2 * n + 1) < kRelTol) break;
    }
    return SignedLog::from_double(2.0 * s) * SignedLog::from_log(0.25 * lq);
}

namespace {

struct AqDoubleResult {
    double value;
    double prime;
    double max_partial;    // running-max |partial sum| of the value series
    double max_partial_d;  // same for the derivative series
};

AqDoubleResult aq_double(double z, double q) {
    double t = 1.0, sum = 1.0, dsum = 0.0, maxp = 1.0, maxpd = 0.0;
    double q2n1 = q;  // q^{2nu-1}
    double qn = q;    // q^{nu}
    for (int nu = 1; nu < 100000; ++nu) {
        t *= q2n1 * (-z) / (1.0 - qn);
        sum += t;
        if (z != 0.0) dsum += nu * t / z;
        maxp = std::max(maxp, std::abs(sum));
        maxpd = std::max(maxpd, std::abs(dsum));
        if (!std::isfinite(t)) break;
        if (std::abs(t) < 1e-18 * maxp) break;
        q2n1 *= q * q;
        qn *= q;
    }
    return {sum, dsum, maxp, maxpd};
}

// Each output is judged against the partial sums of its own series, so an
// innocuous-looking derivative cannot mask a fully-cancelled value (or vice
// versa).
bool aq_needs_highprec(const AqDoubleResult& r) {
    if (!std::isfinite(r.value) || !std::isfinite(r.prime) ||
        !std::isfinite(r.max_partial) || !std::isfinite(r.max_partial_d))
        return true;
    const double cap = std::pow(10.0, kCancelDigits);
    if (r.value == 0.0 || r.max_partial / std::abs(r.value) > cap) return true;
    return r.max_partial_d > 0.0 &&
           (r.prime == 0.0 || r.max_partial_d / std::abs(r.prime) > cap);
}

}  // namespace

double aq(double z, QBase q) {
    AqDoubleResult r = aq_double(z, q.q);
    if (!aq_needs_highprec(r)) return r.value;
    if (z == 0.0) return 1.0;
    auto hp = detail::aq_mpfr(std::log(std::abs(z)), z > 0 ? 1 : -1, std::log(q.q));
    return hp.value.to_double();
}

double aq_prime(double z, QBase q) {
    AqDoubleResult r = aq_double(z, q.q);
    if (!aq_needs_highprec(r)) return r.prime;
    if (z == 0.0) return -1.0 / (1.0 - q.q);
    auto hp = detail::aq_mpfr(std::log(std::abs(z)), z > 0 ? 1 : -1, std::log(q.q));
    return hp.prime.to_double();
}

SignedLog aq_sl(double log_z, int sign_z, QBase q) {
    if (sign_z == 0) return SignedLog::one();
    // Try the double fast path when the argument is representable.
    if (log_z < 650.0) {
        AqDoubleResult r = aq_double(sign_z * std::exp(log_z), q.q);
        if (!aq_needs_highprec(r)) return SignedLog::from_double(r.value);
    }
    return detail::aq_mpfr(log_z, sign_z, std::log(q.q)).value;
}

SignedLog aq_prime_sl(double log_z, int sign_z, QBase q) {
    if (sign_z == 0) return SignedLog::from_double(-1.0 / (1.0 - q.q));
    if (log_z < 650.0) {
        AqDoubleResult r = aq_double(sign_z * std::exp(log_z), q.q);
        if (!aq_needs_highprec(r)) return SignedLog::from_double(r.prime);
    }
    return detail::aq_mpfr(log_z, sign_z, std::log(q.q)).prime;
}

SignedLog phi21_terminating(int l, int N, QBase q) {
    if (l < 1 || N < 1) throw std::domain_error("phi21_terminating: l, N >= 1");
    // sum_{n=0}^{l} (q^l; q^{-1})_n (q^{-l}; q^{-1})_n / ((q^{-1}; q^{-1})_n)^2
    //              * q^{-(N+1) n}
    // Each base-q^{-1} Pochhammer is a finite product of factors
    // (1 - a q^{-j}), accumulated in SignedLog.
    const double lq = std::log(q.q);
    std::vector<SignedLog> terms;
    SignedLog t = SignedLog::one();
    terms.push_back(t);
    for (int n = 1; n <= l; ++n) {
        // ratio of consecutive terms: multiply by
        //   (1 - q^{l - (n-1)}) (1 - q^{-l - (n-1)}) / (1 - q^{-n})^2 * q^{-(N+1)}
        const double f1 = -std::expm1(static_cast<double>(l - (n - 1)) * lq);
        const double f2 = -std::expm1(static_cast<double>(-l - (n - 1)) * lq);
        const double f3 = -std::expm1(static_cast<double>(-n) * lq);
        t *= SignedLog::from_double(f1) * SignedLog::from_double(f2) /
             (SignedLog::from_double(f3) * SignedLog::from_double(f3));
        t *= SignedLog::from_log(-static_cast<double>(N + 1) * lq);
        terms.push_back(t);
    }
    return signed_log_sum(terms).value;
}

}  // namespace qrmt
