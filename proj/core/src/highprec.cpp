#include "highprec.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrmt::detail {
namespace {

// RAII wrapper around a single mpfr_t.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

SignedLog to_signed_log(mpfr_srcptr x, mpfr_prec_t prec) {
    if (mpfr_zero_p(x)) return SignedLog::zero();
    int sign = mpfr_sgn(x) > 0 ? 1 : -1;
    Real lg(prec);
    mpfr_abs(lg.get(), x, MPFR_RNDN);
    mpfr_log(lg.get(), lg.get(), MPFR_RNDN);
    return {sign, mpfr_get_d(lg.get(), MPFR_RNDN)};
}

constexpr double kLn2 = 0.6931471805599453;

}  // namespace

AqPair aq_mpfr(double log_z, int sign_z, double log_q, long prec_hint_bits) {
    if (!(log_q < 0)) throw std::domain_error("aq_mpfr: q must be in (0,1)");
    mpfr_prec_t prec = std::max<long>(prec_hint_bits, 256);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Real q(prec), z(prec), t(prec), sum(prec), dsum(prec), tmp(prec),
            qpow(prec), max_abs(prec);
        mpfr_set_d(q.get(), log_q, MPFR_RNDN);
        mpfr_exp(q.get(), q.get(), MPFR_RNDN);
        mpfr_set_d(z.get(), log_z, MPFR_RNDN);
        mpfr_exp(z.get(), z.get(), MPFR_RNDN);
        if (sign_z < 0) mpfr_neg(z.get(), z.get(), MPFR_RNDN);

        // t_0 = 1; t_nu = t_{nu-1} * q^{2nu-1} * (-z) / (1 - q^nu)
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_set_ui(sum.get(), 1, MPFR_RNDN);
        mpfr_set_zero(dsum.get(), 1);
        mpfr_set_ui(max_abs.get(), 1, MPFR_RNDN);
        mpfr_set(qpow.get(), q.get(), MPFR_RNDN);  // q^{2nu-1}, starts at q^1

        const long max_terms = 4000000;
        for (long nu = 1; nu <= max_terms; ++nu) {
            // t *= qpow * (-z) / (1 - q^nu); track q^nu via tmp.
            mpfr_mul(t.get(), t.get(), qpow.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), z.get(), MPFR_RNDN);
            mpfr_neg(t.get(), t.get(), MPFR_RNDN);
            // q^nu = qpow * q^{-(nu-1)}: cheaper to carry q^nu separately.
            // Recompute: q^nu = q^{2nu-1} * q^{1-nu} is awkward; instead use
            // tmp as running q^nu.
            if (nu == 1) mpfr_set(tmp.get(), q.get(), MPFR_RNDN);
            else mpfr_mul(tmp.get(), tmp.get(), q.get(), MPFR_RNDN);
            Real denom(prec);
            mpfr_ui_sub(denom.get(), 1, tmp.get(), MPFR_RNDN);
            mpfr_div(t.get(), t.get(), denom.get(), MPFR_RNDN);

            mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
            // derivative: dsum += nu * t / z
            Real dterm(prec);
            mpfr_div(dterm.get(), t.get(), z.get(), MPFR_RNDN);
            mpfr_mul_si(dterm.get(), dterm.get(), nu, MPFR_RNDN);
            mpfr_add(dsum.get(), dsum.get(), dterm.get(), MPFR_RNDN);

            Real at(prec);
            mpfr_abs(at.get(), t.get(), MPFR_RNDN);
            if (mpfr_cmp(at.get(), max_abs.get()) > 0)
                mpfr_set(max_abs.get(), at.get(), MPFR_RNDN);
            // stop once the term is below 2^{-prec-32} * max partial scale
            Real thresh(prec);
            mpfr_mul_2si(thresh.get(), max_abs.get(), -(prec + 32), MPFR_RNDN);
            if (mpfr_cmp(at.get(), thresh.get()) < 0) break;
            // advance q^{2nu-1} -> q^{2nu+1}
            mpfr_mul(qpow.get(), qpow.get(), q.get(), MPFR_RNDN);
            mpfr_mul(qpow.get(), qpow.get(), q.get(), MPFR_RNDN);
        }

        // Cancellation check: need |sum| >> max_abs * 2^{-prec+64}.
        double max_log = mpfr_zero_p(max_abs.get())
                             ? 0.0
                             : [&] {
                                   Real lg(prec);
                                   mpfr_log(lg.get(), max_abs.get(), MPFR_RNDN);
                                   return mpfr_get_d(lg.get(), MPFR_RNDN);
                               }();
        SignedLog val = to_signed_log(sum.get(), prec);
        SignedLog der = to_signed_log(dsum.get(), prec);
        double needed_bits;
        if (val.sign == 0)
            needed_bits = static_cast<double>(prec) * 2;
        else
            needed_bits = (max_log - std::min(val.logmag, der.sign ? der.logmag
                                                                   : val.logmag)) /
                          kLn2;
        if (val.sign != 0 && needed_bits + 96 <= static_cast<double>(prec))
            return {val, der};
        prec = static_cast<mpfr_prec_t>(std::max<double>(prec * 2, needed_bits + 192));
    }
    throw std::runtime_error("aq_mpfr: adaptive precision did not converge");
}

SignedLog swpoly_sum_mpfr(int l, double log_u, double log_q,
                          long prec_hint_bits) {
    if (!(log_q < 0)) throw std::domain_error("swpoly_sum_mpfr: q must be in (0,1)");
    mpfr_prec_t prec = std::max<long>(prec_hint_bits, 256);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Real q(prec), t(prec), sum(prec), max_abs(prec), u(prec), qnu(prec);
        mpfr_set_d(q.get(), log_q, MPFR_RNDN);
        mpfr_exp(q.get(), q.get(), MPFR_RNDN);
        mpfr_set_d(u.get(), log_u, MPFR_RNDN);
        mpfr_exp(u.get(), u.get(), MPFR_RNDN);

        // term_nu = [l nu]_q q^{nu^2} (-q^{1/2} u)^nu;
        // term_{nu}/term_{nu-1} = (1-q^{l-nu+1})/(1-q^{nu}) * q^{2nu-1} * (-q^{1/2} u)
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_set_ui(sum.get(), 1, MPFR_RNDN);
        mpfr_set_ui(max_abs.get(), 1, MPFR_RNDN);

        Real sqrtq(prec), factor(prec), qpow_hi(prec), qpow_lo(prec), q2(prec);
        mpfr_sqrt(sqrtq.get(), q.get(), MPFR_RNDN);
        // factor = -q^{1/2} u * q^{2nu-1}, with q^{2nu-1} advanced in the loop
        mpfr_set(q2.get(), q.get(), MPFR_RNDN);  // q^{2nu-1}, nu = 1 -> q
        mpfr_pow_ui(qpow_hi.get(), q.get(), static_cast<unsigned long>(l),
                    MPFR_RNDN);  // q^{l-nu+1}, nu = 1 -> q^l
        mpfr_set(qnu.get(), q.get(), MPFR_RNDN);  // q^{nu}, nu = 1 -> q

        for (int nu = 1; nu <= l; ++nu) {
            Real num(prec), den(prec);
            mpfr_ui_sub(num.get(), 1, qpow_hi.get(), MPFR_RNDN);
            mpfr_ui_sub(den.get(), 1, qnu.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), num.get(), MPFR_RNDN);
            mpfr_div(t.get(), t.get(), den.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), q2.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), sqrtq.get(), MPFR_RNDN);
            mpfr_mul(t.get(), t.get(), u.get(), MPFR_RNDN);
            mpfr_neg(t.get(), t.get(), MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);

            Real at(prec);
            mpfr_abs(at.get(), t.get(), MPFR_RNDN);
            if (mpfr_cmp(at.get(), max_abs.get()) > 0)
                mpfr_set(max_abs.get(), at.get(), MPFR_RNDN);

            if (nu < l) {
                mpfr_div(qpow_hi.get(), qpow_hi.get(), q.get(), MPFR_RNDN);
                mpfr_mul(qnu.get(), qnu.get(), q.get(), MPFR_RNDN);
                mpfr_mul(q2.get(), q2.get(), q.get(), MPFR_RNDN);
                mpfr_mul(q2.get(), q2.get(), q.get(), MPFR_RNDN);
            }
        }

        SignedLog val = to_signed_log(sum.get(), prec);
        double max_log;
        {
            Real lg(prec);
            mpfr_log(lg.get(), max_abs.get(), MPFR_RNDN);
            max_log = mpfr_get_d(lg.get(), MPFR_RNDN);
        }
        double needed_bits = val.sign == 0 ? static_cast<double>(prec) * 2
                                           : (max_log - val.logmag) / kLn2;
        if (val.sign != 0 && needed_bits + 96 <= static_cast<double>(prec))
            return val;
        prec = static_cast<mpfr_prec_t>(std::max<double>(prec * 2, needed_bits + 192));
    }
    throw std::runtime_error("swpoly_sum_mpfr: adaptive precision did not converge");
}

}  // namespace qrmt::detail
