// Acceptance gate: runs every numbered acceptance criterion and prints one
// pass/fail line per criterion.  Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qrmt/kernels.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/quadrature.hpp"
#include "qrmt/sampler.hpp"
#include "qrmt/verify.hpp"

using namespace qrmt;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail = {}) {
    std::printf("criterion %2d: %s  %s%s%s\n", criterion,
                pass ? "PASS" : "FAIL", label.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!pass) ++g_failures;
}

void run_checks(int criterion, const std::string& label,
                const std::vector<verify::Check>& checks) {
    std::string detail;
    bool pass = true;
    for (const auto& c : checks) {
        if (!c.pass) {
            pass = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "[%s: residual %.3e > tol %.3e] ",
                          c.name.c_str(), c.residual, c.tolerance);
            detail += buf;
        }
    }
    report(criterion, label, pass, detail);
}

// Criterion 11: sampler vs exact kernel / moments at 1e6 sweeps.
void criterion_11_sampler() {
    QParams p = QParams::from_qN(4, 0.5);
    SamplerOptions o;
    o.sweeps = 1000000;
    o.lmax = 2;
    SampleStats st = run_chain(p, o);
    bool pass = true;
    std::string detail;
    int worst_bin = -1;
    double worst_z = 0;
    const double bw = st.bin_centers[1] - st.bin_centers[0];
    for (std::size_t i = 0; i < st.bin_centers.size(); ++i) {
        const double x = st.bin_centers[i];
        // The histogram estimates the bin average of the one-point density,
        // so average the kernel over the bin as well.
        const double ex =
            gl_integrate([&](double t) { return kernel_swe(t, t, p); }, 5,
                         x - 0.5 * bw, x + 0.5 * bw) /
            (bw * p.N());
        if (ex < 1e-3) continue;  // tails carry no usable error estimate
        const double z = std::abs(st.histogram[i] - ex) /
                         std::max(st.histogram_err[i], 1e-12);
        if (z > worst_z) {
            worst_z = z;
            worst_bin = static_cast<int>(i);
        }
    }
    if (worst_z > 3.0) {
        pass = false;
        char buf[120];
        std::snprintf(buf, sizeof buf, "[histogram bin %d at %.2f sigma] ",
                      worst_bin, worst_z);
        detail += buf;
    }
    for (int l = 1; l <= 2; ++l) {
        const double exact = power_sum_moment(l, p).value.to_double();
        const double z = std::abs(st.moments[l - 1] - exact) /
                         std::max(st.moments_err[l - 1], 1e-12);
        if (z > 3.0) {
            pass = false;
            char buf[120];
            std::snprintf(buf, sizeof buf, "[moment l=%d at %.2f sigma] ", l,
                          z);
            detail += buf;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "worst histogram deviation %.2f sigma, acceptance %.3f",
                  worst_z, st.acceptance_rate);
    if (detail.empty()) detail = buf;
    report(11, "sampler histogram and moments within 3 standard errors",
           pass, detail);
}

}  // namespace

int main() {
    run_checks(1, "moment cross-route identity + quadrature oracle",
               verify::criterion_1_moment_routes());
    run_checks(2, "Schur product formula vs determinant",
               verify::criterion_2_schur_product_vs_det());
    run_checks(3, "scaled moments: 1/N^2 coefficient",
               verify::criterion_3_scaled_moments());
    run_checks(4, "limiting density invariants", verify::criterion_4_density());
    run_checks(5, "kernel routes, forms, convergence rates, trace",
               verify::criterion_5_kernels());
    run_checks(6, "sine limit of the rescaled bulk kernel",
               verify::criterion_6_sine_limit());
    run_checks(7, "Airy limit of the rescaled edge kernel",
               verify::criterion_7_airy_limit());
    run_checks(8, "A_q asymptotic expansion (calibrated envelope)",
               verify::criterion_8_aq_asymptotics());
    run_checks(9, "gap probability: stability, series bracket, left tail",
               verify::criterion_9_gap());
    run_checks(10, "2D cylinder gas tail law", verify::criterion_10_gas2d());
    criterion_11_sampler();
    {
        const auto all = verify::run_suite("all");
        report(12, "full verify suite", verify::all_pass(all));
    }
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
