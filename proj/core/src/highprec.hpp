#pragma once

// Internal arbitrary-precision (MPFR) fallbacks for alternating q-series
// whose double-precision evaluation loses more digits than SignedLog can
// absorb.  Precision is chosen adaptively from the observed cancellation.

#include "qrmt/signed_log.hpp"

namespace qrmt::detail {

struct AqPair {
    SignedLog value;  // A_q(z)
    SignedLog prime;  // A_q'(z)
};

// A_q(z) and A_q'(z) with z = sign_z * e^{log_z}, q = e^{log_q} (log_q < 0).
// `prec_hint_bits` seeds the adaptive loop (0 = automatic).
AqPair aq_mpfr(double log_z, int sign_z, double log_q, long prec_hint_bits = 0);

// sum_{nu=0}^{l} [l nu]_q q^{nu^2} (-q^{1/2} u)^nu with u = e^{log_u} > 0.
SignedLog swpoly_sum_mpfr(int l, double log_u, double log_q,
                          long prec_hint_bits = 0);

}  // namespace qrmt::detail
