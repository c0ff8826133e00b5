#include "qrmt/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrmt/qcore.hpp"

namespace qrmt {

namespace {

// 1 - q^e as a SignedLog for any real exponent e != 0 (e < 0 gives the
// large negative value -q^e (1 - q^{-e}) without overflow).
SignedLog one_minus_qpow(double e, double lq) {
    if (e > 0) return SignedLog::from_double(-std::expm1(e * lq));
    if (e < 0) return SignedLog{-1, e * lq + std::log(-std::expm1(-e * lq))};
    return SignedLog::zero();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 0)
            throw std::domain_error("Partition: parts must be nonnegative");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int j) const {
    return (j >= 0 && j < length()) ? parts_[j] : 0;
}

SignedLog schur_average_product(const Partition& kappa, const QParams& p) {
    const int N = p.N();
    if (kappa.length() > N) return SignedLog::zero();
    const double lq = std::log(p.q());
    double sumsq = 0.0;
    for (int j = 0; j < N; ++j) {
        const double kj = kappa.part(j);
        sumsq += kj * kj;
    }
    SignedLog val = SignedLog::from_log(-0.5 * sumsq * lq);
    // indices j < k run 1..N
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            const double e = kappa.part(j - 1) - j - kappa.part(k - 1) + k;
            val *= one_minus_qpow(-e, lq) / one_minus_qpow(-(double)(k - j), lq);
        }
    return val;
}

namespace {

// Determinant of an n x n SignedLog matrix by Gaussian elimination with full
// pivoting.  `loss_digits` reports the worst subtraction cancellation seen.
SignedLog sl_determinant(std::vector<std::vector<SignedLog>> a, double* loss_digits) {
    const int n = static_cast<int>(a.size());
    SignedLog det = SignedLog::one();
    double loss = 0.0;
    for (int s = 0; s < n; ++s) {
        // full pivot
        int pr = s, pc = s;
        double best = -std::numeric_limits<double>::infinity();
        for (int i = s; i < n; ++i)
            for (int j = s; j < n; ++j)
                if (a[i][j].sign != 0 && a[i][j].logmag > best) {
                    best = a[i][j].logmag;
                    pr = i;
                    pc = j;
                }
        if (a[pr][pc].sign == 0) return SignedLog::zero();
        if (pr != s) {
            std::swap(a[pr], a[s]);
            det = -det;
        }
        if (pc != s) {
            for (int i = 0; i < n; ++i) std::swap(a[i][pc], a[i][s]);
            det = -det;
        }
        det *= a[s][s];
        for (int i = s + 1; i < n; ++i) {
            SignedLog f = a[i][s] / a[s][s];
            for (int j = s + 1; j < n; ++j) {
                SignedLog upd = f * a[s][j];
                SignedLog res = a[i][j] - upd;
                const double in_mag = std::max(a[i][j].abs().logmag, upd.abs().logmag);
                if (res.sign != 0 && in_mag > res.logmag)
                    loss = std::max(loss, (in_mag - res.logmag) / std::log(10.0));
                else if (res.sign == 0 && (a[i][j].sign != 0 || upd.sign != 0))
                    loss = std::max(loss, 16.0);
                a[i][j] = res;
            }
            a[i][s] = SignedLog::zero();
        }
    }
    if (loss_digits) *loss_digits = loss;
    return det;
}

}  // namespace

SignedLog schur_average_det(const Partition& kappa, const QParams& p) {
    const int N = p.N();
    if (N > 12)
        throw std::domain_error(
            "schur_average_det: determinant route limited to N <= 12");
    if (kappa.length() > N) return SignedLog::zero();
    const double lq = std::log(p.q());
    auto entry = [&](int j, int k, int shift) {
        const double d = static_cast<double>(j - k + shift);
        return SignedLog::from_log(-0.5 * d * d * lq);
    };
    std::vector<std::vector<SignedLog>> m1(N, std::vector<SignedLog>(N)),
        m0(N, std::vector<SignedLog>(N));
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k) {
            m1[j - 1][k - 1] = entry(j, k, kappa.part(k - 1));
            m0[j - 1][k - 1] = entry(j, k, 0);
        }
    double loss1 = 0, loss0 = 0;
    const SignedLog d1 = sl_determinant(std::move(m1), &loss1);
    const SignedLog d0 = sl_determinant(std::move(m0), &loss0);
    const double rel_err = std::pow(10.0, std::max(loss1, loss0) - 15.0) * N * N;
    if (d0.sign == 0 || rel_err > 1e-8)
        throw std::runtime_error(
            "schur_average_det: conditioning loss beyond 1e-8; use the product "
            "route or reduce N");
    // The raw ratio already equals q^{N |kappa|} <s_kappa>.
    (void)lq;
    return d1 / d0;
}

SignedLog hook_schur_average(int l, int r, const QParams& p) {
    if (l < 1 || r < 0 || r > l - 1)
        throw std::domain_error("hook_schur_average: need l >= 1, 0 <= r <= l-1");
    if (r + 1 > p.N()) return SignedLog::zero();  // more than N rows
    const double lq = std::log(p.q());
    SignedLog v = SignedLog::from_log(
        (-0.5 * (l - r) * (l - r) - 0.5 * r) * lq);
    v *= qbinomial_qinv(p.N() + l - r - 1, l, p.qbase());
    v *= qbinomial_qinv(l - 1, r, p.qbase());
    return v;
}

MomentResult power_sum_moment(int l, const QParams& p, MomentRoute route) {
    if (l == 0) throw std::domain_error("power_sum_moment: l != 0 required");
    const int ll = std::abs(l);
    // Inversion symmetry: q^{-N l} m_{-l} = q^{N l} m_l, so the returned
    // quantity is even in l.
    const double lq = std::log(p.q());
    SignedLog value;
    switch (route) {
        case MomentRoute::phi21: {
            // q^{Nl} m_l = -(-q^{-1/2})^l / (1 - q^{-l}) * 2phi1
            SignedLog pref{(ll % 2) ? 1 : -1, -0.5 * ll * lq};
            pref /= one_minus_qpow(-static_cast<double>(ll), lq);
            value = pref * phi21_terminating(ll, p.N(), p.qbase());
            break;
        }
        case MomentRoute::hook: {
            std::vector<SignedLog> terms;
            for (int r = 0; r <= std::min(ll - 1, p.N() - 1); ++r) {
                SignedLog t = hook_schur_average(ll, r, p);
                if (r % 2) t = -t;
                terms.push_back(t);
            }
            value = signed_log_sum(terms).value;
            break;
        }
        case MomentRoute::det: {
            std::vector<SignedLog> terms;
            for (int r = 0; r <= std::min(ll - 1, p.N() - 1); ++r) {
                std::vector<int> parts{ll - r};
                parts.insert(parts.end(), r, 1);
                SignedLog t = schur_average_det(Partition(parts), p);
                if (r % 2) t = -t;
                terms.push_back(t);
            }
            value = signed_log_sum(terms).value;
            break;
        }
    }
    return {l, value, route};
}

double moment_recurrence_check(int lmax, const QParams& p) {
    if (lmax < 2) throw std::domain_error("moment_recurrence_check: lmax >= 2");
    const double lq = std::log(p.q());
    const int N = p.N();
    // p_l = -q^{Nl} m_l (1 - q^{-l}) (-1)^l q^{l/2}, p_0 = 1.
    auto p_of = [&](int l) -> SignedLog {
        if (l == 0) return SignedLog::one();
        SignedLog m = power_sum_moment(l, p).value;
        SignedLog f = one_minus_qpow(-static_cast<double>(l), lq);
        SignedLog s{(l % 2) ? 1 : -1, 0.5 * l * lq};
        return m * f * s;
    };
    auto A = [&](double l) -> SignedLog {
        SignedLog n1 = SignedLog::from_log(0.5 * (l + 1) * lq) -
                       SignedLog::from_log(-0.5 * (l + 1) * lq);
        SignedLog n2 = SignedLog::from_log(0.5 * l * lq) -
                       SignedLog::from_log(-0.5 * l * lq);
        SignedLog d1 = SignedLog::from_log((l + 0.5) * lq) -
                       SignedLog::from_log(-(l + 0.5) * lq);
        SignedLog d2 = SignedLog::from_log(l * lq) - SignedLog::from_log(-l * lq);
        return n1 * n2 / (d1 * d2);
    };
    double worst = 0.0;
    SignedLog qmN = SignedLog::from_log(-static_cast<double>(N) * lq);
    for (int l = 1; l < lmax; ++l) {
        SignedLog Ap = A(l), Am = A(-l);
        SignedLog lhs = -(qmN * p_of(l));
        SignedLog rhs = Ap * p_of(l + 1) - (Ap + Am) * p_of(l) + Am * p_of(l - 1);
        SignedLog resid = lhs - rhs;
        if (resid.is_zero()) continue;
        const double scale = std::max(lhs.abs().logmag, rhs.abs().logmag);
        worst = std::max(worst, std::exp(resid.logmag - scale));
    }
    return worst;
}

double mu0(int l, double lambda) {
    if (l < 1 || !(lambda > 0)) throw std::domain_error("mu0: l >= 1, lambda > 0");
    // (-1)^l/(lambda l) * 2F1(-l, l; 1; e^lambda): terminating sum.
    double s = 0.0, t = 1.0;
    const double el = std::exp(lambda);
    for (int n = 0; n <= l; ++n) {
        s += t;
        // ratio: (-l+n)(l+n)/((1+n)(1+n)) * e^lambda ... Pochhammer style
        t *= static_cast<double>(-l + n) * (l + n) / ((1.0 + n) * (1.0 + n)) * el;
    }
    return (l % 2 ? -1.0 : 1.0) / (lambda * l) * s;
}

double mu2(int l, double lambda) {
    if (l < 1 || !(lambda > 0)) throw std::domain_error("mu2: l >= 1, lambda > 0");
    // lambda^2/24 sum_{p=1}^{l} (-1)^{l+p} (e^{lambda p}-1)/(lambda p)
    //             * C(l,p) C(l+p-1,l) ((2p-1) l^2 - 2 p^2)
    auto binom = [](int n, int k) {
        return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                        std::lgamma(n - k + 1.0));
    };
    double s = 0.0;
    for (int pp = 1; pp <= l; ++pp) {
        double term = std::expm1(lambda * pp) / (lambda * pp);
        term *= binom(l, pp) * binom(l + pp - 1, l);
        term *= (2.0 * pp - 1.0) * l * l - 2.0 * pp * pp;
        if ((l + pp) % 2) term = -term;
        s += term;
    }
    return lambda * lambda / 24.0 * s;
}

double rs_moment(int l, double lambda) {
    if (l < 1 || !(lambda > 0))
        throw std::domain_error("rs_moment: l >= 1, lambda > 0");
    // mu0 evaluated at lambda -> -lambda/2 (prefactor included):
    // (-1)^{l+1} 2/(lambda l) 2F1(-l, l; 1; e^{-lambda/2}).
    double s = 0.0, t = 1.0;
    const double el = std::exp(-0.5 * lambda);
    for (int n = 0; n <= l; ++n) {
        s += t;
        t *= static_cast<double>(-l + n) * (l + n) / ((1.0 + n) * (1.0 + n)) * el;
    }
    return (l % 2 ? 1.0 : -1.0) * 2.0 / (lambda * l) * s;
}

}  // namespace qrmt
