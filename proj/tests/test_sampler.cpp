#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qrmt/gap.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/sampler.hpp"

using namespace qrmt;
using doctest::Approx;

TEST_CASE("sampler is deterministic for a fixed seed") {
    QParams p = QParams::from_qN(3, 0.5);
    SamplerOptions o;
    o.sweeps = 5000;
    o.burn_in = 2000;
    o.seed = 42;
    const SampleStats a = run_chain(p, o);
    const SampleStats b = run_chain(p, o);
    CHECK(a.acceptance_rate == b.acceptance_rate);
    CHECK(a.moments == b.moments);
    CHECK(a.histogram == b.histogram);
    o.seed = 43;
    const SampleStats c = run_chain(p, o);
    CHECK(a.moments != c.moments);
}

TEST_CASE("step tuning lands in the target acceptance window") {
    QParams p = QParams::from_qN(4, 0.5);
    SamplerOptions o;
    o.sweeps = 20000;
    const SampleStats st = run_chain(p, o);
    CHECK(st.acceptance_rate > 0.25);
    CHECK(st.acceptance_rate < 0.55);
    CHECK(st.step_width > 0.0);
}

TEST_CASE("energy audit stays within 1e-10") {
    QParams p = QParams::from_qN(4, 0.5);
    SamplerOptions o;
    o.sweeps = 50000;
    const SampleStats st = run_chain(p, o);
    CHECK(st.energy_audit_max_drift < 1e-10);
}

TEST_CASE("N=1 histogram reproduces the Gaussian") {
    QParams p = QParams::from_qN(1, 0.5);
    SamplerOptions o;
    o.sweeps = 100000;
    const SampleStats st = run_chain(p, o);
    const double c = p.c();
    int checked = 0;
    for (std::size_t i = 0; i < st.bin_centers.size(); ++i) {
        const double x = st.bin_centers[i];
        const double ex =
            std::sqrt(c / std::numbers::pi) * std::exp(-c * x * x);
        if (ex < 0.02) continue;  // skip statistically starved tails
        ++checked;
        CHECK(std::abs(st.histogram[i] - ex) <
              4.0 * st.histogram_err[i] + 1e-3);
    }
    CHECK(checked > 10);
}

TEST_CASE("moment estimates agree with the exact values") {
    QParams p = QParams::from_qN(4, 0.5);
    SamplerOptions o;
    o.sweeps = 100000;
    o.lmax = 2;
    const SampleStats st = run_chain(p, o);
    for (int l = 1; l <= 2; ++l) {
        const double exact = power_sum_moment(l, p).value.to_double();
        CHECK(std::abs(st.moments[l - 1] - exact) <
              4.0 * st.moments_err[l - 1]);
    }
}

TEST_CASE("gap frequency tracks the Fredholm gap probability") {
    QParams p = QParams::from_qN(8, 0.5);
    SamplerOptions o;
    o.sweeps = 40000;
    const SampleStats st = gap_frequency(p, 0.0, o);
    const double exact = gap_probability(0.0, p);
    CHECK(std::abs(st.gap_frequency - exact) <
          4.0 * st.gap_frequency_err + 0.02);
}

TEST_CASE("invalid options are rejected") {
    QParams p = QParams::from_qN(2, 0.5);
    SamplerOptions o;
    o.sweeps = 0;
    CHECK_THROWS_AS(run_chain(p, o), std::domain_error);
}
