#pragma once

// Signed log-domain arithmetic: a real number stored as (sign, log|value|).
// Survives magnitudes far beyond double range (normalization constants,
// q-powers with exponents ~ N^3) while keeping ~15 significant digits.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace qrmt {

struct SignedLog {
    int sign = 0;          // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();  // ln|value|; ignored when sign == 0

    constexpr SignedLog() = default;
    constexpr SignedLog(int s, double lm) : sign(s), logmag(lm) {}

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_double(double x) {
        if (x == 0.0) return zero();
        return {x > 0 ? 1 : -1, std::log(std::abs(x))};
    }
    // exp(t) as a SignedLog, i.e. the positive number with log-magnitude t.
    static SignedLog from_log(double t) { return {1, t}; }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }
    bool is_zero() const { return sign == 0; }

    SignedLog operator*(const SignedLog& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {sign * o.sign, logmag + o.logmag};
    }
    SignedLog operator/(const SignedLog& o) const {
        if (sign == 0) return zero();
        return {sign * o.sign, logmag - o.logmag};
    }
    SignedLog operator-() const { return {-sign, logmag}; }

    SignedLog operator+(const SignedLog& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        const SignedLog& a = (logmag >= o.logmag) ? *this : o;
        const SignedLog& b = (logmag >= o.logmag) ? o : *this;
        const double d = b.logmag - a.logmag;  // <= 0
        if (a.sign == b.sign) return {a.sign, a.logmag + std::log1p(std::exp(d))};
        const double m = std::exp(d);
        if (m == 1.0) return zero();
        return {a.sign, a.logmag + std::log1p(-m)};
    }
    SignedLog operator-(const SignedLog& o) const { return *this + (-o); }

    SignedLog& operator*=(const SignedLog& o) { return *this = *this * o; }
    SignedLog& operator/=(const SignedLog& o) { return *this = *this / o; }
    SignedLog& operator+=(const SignedLog& o) { return *this = *this + o; }
    SignedLog& operator-=(const SignedLog& o) { return *this = *this - o; }

    SignedLog pow_int(std::int64_t n) const {
        if (n == 0) return one();
        if (sign == 0) return zero();
        int s = (sign < 0 && (n & 1)) ? -1 : 1;
        return {s, logmag * static_cast<double>(n)};
    }
    SignedLog abs() const { return {sign == 0 ? 0 : 1, logmag}; }
    SignedLog sqrt_abs() const { return {sign == 0 ? 0 : 1, logmag / 2}; }

    // Comparison by value.
    bool operator<(const SignedLog& o) const {
        if (sign != o.sign) return sign < o.sign;
        if (sign == 0) return false;
        return sign > 0 ? logmag < o.logmag : logmag > o.logmag;
    }
};

inline SignedLog operator*(double a, const SignedLog& b) { return SignedLog::from_double(a) * b; }

// Compensated signed accumulation: positive and negative terms are
// accumulated separately in ascending magnitude and subtracted once at the
// end.  Returns the sum plus the log-magnitude of the largest term, so the
// caller can quantify cancellation (log-domain loss = max_logmag - result
// logmag).
struct SignedLogSum {
    SignedLog value;
    double max_term_logmag = -std::numeric_limits<double>::infinity();
    // Decimal digits lost to cancellation.
    double cancellation_digits() const {
        if (value.sign == 0) return std::numeric_limits<double>::infinity();
        return std::max(0.0, (max_term_logmag - value.logmag) / std::log(10.0));
    }
};

inline SignedLogSum signed_log_sum(std::span<const SignedLog> terms) {
    std::vector<double> pos, neg;
    double maxlog = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        if (t.sign == 0) continue;
        maxlog = std::max(maxlog, t.logmag);
        (t.sign > 0 ? pos : neg).push_back(t.logmag);
    }
    auto lse = [](std::vector<double>& v) -> SignedLog {
        if (v.empty()) return SignedLog::zero();
        std::sort(v.begin(), v.end());
        const double top = v.back();
        double acc = 0.0;
        for (double lm : v) acc += std::exp(lm - top);
        return {1, top + std::log(acc)};
    };
    SignedLogSum out;
    out.value = lse(pos) - lse(neg);
    out.max_term_logmag = maxlog;
    return out;
}

}  // namespace qrmt
