#pragma once

// Shared verification suites: each check returns its measured residual and
// tolerance.  Used both by the `qrmt verify` subcommand (JSON report) and by
// the acceptance test binary.

#include <string>
#include <vector>

namespace qrmt::verify {

struct Check {
    std::string suite;    // qcore | moments | density | kernels | gap
    std::string name;
    bool pass = false;
    double residual = 0;  // measured
    double tolerance = 0;
    std::string detail;   // free-form context (fitted rates, grids, ...)
};

// Individual acceptance criteria (numbered as in the test output).
std::vector<Check> criterion_1_moment_routes();
std::vector<Check> criterion_2_schur_product_vs_det();
std::vector<Check> criterion_3_scaled_moments();
std::vector<Check> criterion_4_density();
std::vector<Check> criterion_5_kernels();
std::vector<Check> criterion_6_sine_limit();
std::vector<Check> criterion_7_airy_limit();
std::vector<Check> criterion_8_aq_asymptotics();
std::vector<Check> criterion_9_gap();
std::vector<Check> criterion_10_gas2d();

// Suite names accepted by the CLI: qcore, moments, density, kernels, gap, all.
std::vector<Check> run_suite(const std::string& suite);
bool all_pass(const std::vector<Check>& checks);

}  // namespace qrmt::verify
