#pragma once

// Metropolis Monte Carlo sampler of the beta = 2 log-gas, used as an
// independent statistical oracle for densities, moments and kernels.

#include <cstdint>
#include <vector>

#include "qrmt/ensemble.hpp"

namespace qrmt {

struct SamplerOptions {
    std::int64_t sweeps = 100000;   // measurement sweeps (1 sweep = N single-particle updates)
    std::int64_t burn_in = -1;      // -1 => max(10^4, 100 N) sweeps
    std::uint64_t seed = 1;
    int n_chains = 2;
    int histogram_bins = 64;
    int lmax = 2;                   // power-sum moments estimated for l = 1..lmax
    double gap_s = 0;               // threshold for gap frequency, relative to -pi N/(L c)
    bool track_gap = false;
};

struct SampleStats {
    std::vector<double> bin_centers;
    std::vector<double> histogram;       // density estimate of the one-point function / N
    std::vector<double> histogram_err;   // batch-means standard errors
    std::vector<double> moments;         // estimates of q^{Nl} m_l, l = 1..lmax
    std::vector<double> moments_err;
    double acceptance_rate = 0;
    double step_width = 0;
    double gap_frequency = 0;
    double gap_frequency_err = 0;
    double energy_audit_max_drift = 0;   // cached vs recomputed energy
};

// Runs n_chains independent chains (deterministic streams derived from
// (seed, chain index)) and merges their statistics.
SampleStats run_chain(const QParams& p, const SamplerOptions& opt);

// Empirical frequency of no particle below -pi N/(L c) + s.
SampleStats gap_frequency(const QParams& p, double s, const SamplerOptions& opt);

}  // namespace qrmt
