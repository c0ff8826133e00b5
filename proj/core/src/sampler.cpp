#include "qrmt/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qrmt/threading.hpp"

namespace qrmt {

namespace {

struct ChainResult {
    // per-batch sums (batch means are formed by the caller)
    std::vector<std::vector<double>> hist_batches;    // [batch][bin]
    std::vector<std::vector<double>> moment_batches;  // [batch][l-1]
    std::vector<double> gap_batches;                  // [batch]
    double acceptance = 0;
    double step_width = 0;
    double audit_drift = 0;
};

double pair_term(double xi, double xj, double L) {
    return 2.0 * std::log(std::abs(
               std::sinh(std::numbers::pi * (xi - xj) / L)));
}

// log unnormalized density (= -2 U_L); -inf on coincidence.
double total_log_density(const std::vector<double>& xs, const QParams& p) {
    double lg = 0.0;
    for (double x : xs) lg -= p.c() * x * x;
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = j + 1; k < xs.size(); ++k) {
            if (xs[j] == xs[k]) return -std::numeric_limits<double>::infinity();
            lg += pair_term(xs[k], xs[j], p.L());
        }
    return lg;
}

ChainResult run_one_chain(const QParams& p, const SamplerOptions& opt,
                          int chain, double x_lo, double x_hi, int n_batches) {
    const int N = p.N();
    const double L = p.L(), c = p.c();
    std::seed_seq sseq{static_cast<std::uint32_t>(opt.seed),
                       static_cast<std::uint32_t>(opt.seed >> 32),
                       static_cast<std::uint32_t>(chain)};
    std::mt19937_64 rng(sseq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const double half_span = std::numbers::pi * N / (L * c);
    std::vector<double> xs(N);
    for (int j = 0; j < N; ++j)
        xs[j] = ((j + 0.5) / N - 0.5) * 2.0 * half_span;
    double energy = total_log_density(xs, p);

    const std::int64_t burn =
        (opt.burn_in >= 0) ? opt.burn_in
                           : std::max<std::int64_t>(10000, 100LL * N);
    double step = 1.0 / std::sqrt(c);
    const double gap_edge = -half_span + opt.gap_s;

    std::int64_t acc = 0, tot = 0, audit_counter = 0;
    double audit_drift = 0.0;

    auto one_update = [&](int j) {
        const double xo = xs[j];
        const double xn = xo + step * gauss(rng);
        double delta = -c * (xn * xn - xo * xo);
        bool coincide = false;
        for (int k = 0; k < N; ++k) {
            if (k == j) continue;
            if (xs[k] == xn) {
                coincide = true;
                break;
            }
            delta += pair_term(xs[k], xn, L) - pair_term(xs[k], xo, L);
        }
        ++tot;
        if (!coincide && (delta >= 0.0 || unif(rng) < std::exp(delta))) {
            xs[j] = xn;
            energy += delta;
            ++acc;
        }
        if (++audit_counter == 10000) {
            audit_counter = 0;
            audit_drift = std::max(
                audit_drift, std::abs(energy - total_log_density(xs, p)));
            energy = total_log_density(xs, p);
        }
    };

    // burn-in with step tuning every 100 sweeps toward acceptance 0.3-0.5
    std::int64_t win_acc = 0, win_tot = 0;
    for (std::int64_t sweep = 0; sweep < burn; ++sweep) {
        const std::int64_t a0 = acc, t0 = tot;
        for (int j = 0; j < N; ++j) one_update(j);
        win_acc += acc - a0;
        win_tot += tot - t0;
        if ((sweep + 1) % 100 == 0) {
            const double r = static_cast<double>(win_acc) / win_tot;
            if (r > 0.5)
                step *= 1.2;
            else if (r < 0.3)
                step /= 1.2;
            win_acc = win_tot = 0;
        }
    }

    // measurement
    acc = tot = 0;
    ChainResult out;
    out.hist_batches.assign(n_batches,
                            std::vector<double>(opt.histogram_bins, 0.0));
    out.moment_batches.assign(n_batches, std::vector<double>(opt.lmax, 0.0));
    out.gap_batches.assign(n_batches, 0.0);
    const double bin_w = (x_hi - x_lo) / opt.histogram_bins;
    const std::int64_t per_batch = std::max<std::int64_t>(1, opt.sweeps / n_batches);
    std::vector<std::int64_t> batch_sweeps(n_batches, 0);
    for (std::int64_t sweep = 0; sweep < opt.sweeps; ++sweep) {
        for (int j = 0; j < N; ++j) one_update(j);
        const int b = std::min<std::int64_t>(sweep / per_batch, n_batches - 1);
        ++batch_sweeps[b];
        double mn = xs[0];
        for (int j = 0; j < N; ++j) {
            const double x = xs[j];
            mn = std::min(mn, x);
            const int bin = static_cast<int>((x - x_lo) / bin_w);
            if (bin >= 0 && bin < opt.histogram_bins)
                out.hist_batches[b][bin] += 1.0;
            for (int l = 1; l <= opt.lmax; ++l)
                out.moment_batches[b][l - 1] +=
                    std::exp(2.0 * std::numbers::pi * l * x / L);
        }
        if (opt.track_gap && mn >= gap_edge) out.gap_batches[b] += 1.0;
    }
    // normalize batches to per-sweep means
    for (int b = 0; b < n_batches; ++b) {
        const double ns = static_cast<double>(batch_sweeps[b]);
        if (ns == 0) continue;
        for (auto& h : out.hist_batches[b]) h /= ns * N * bin_w;  // density / N
        for (auto& m : out.moment_batches[b]) m /= ns;
        out.gap_batches[b] /= ns;
    }
    out.acceptance = static_cast<double>(acc) / tot;
    out.step_width = step;
    out.audit_drift = audit_drift;
    return out;
}

}  // namespace

SampleStats run_chain(const QParams& p, const SamplerOptions& opt) {
    if (opt.sweeps < 1 || opt.n_chains < 1 || opt.histogram_bins < 1 ||
        opt.lmax < 0)
        throw std::domain_error("run_chain: invalid options");
    const int N = p.N();
    const double half_span = std::numbers::pi * N / (p.L() * p.c());
    const double pad = 5.0 / std::sqrt(p.c());
    const double x_lo = -half_span - pad, x_hi = half_span + pad;
    const int n_batches = 20;

    std::vector<ChainResult> results(opt.n_chains);
    parallel_for(static_cast<std::size_t>(opt.n_chains), [&](std::size_t ch) {
        results[ch] =
            run_one_chain(p, opt, static_cast<int>(ch), x_lo, x_hi, n_batches);
    });

    SampleStats st;
    st.bin_centers.resize(opt.histogram_bins);
    const double bin_w = (x_hi - x_lo) / opt.histogram_bins;
    for (int b = 0; b < opt.histogram_bins; ++b)
        st.bin_centers[b] = x_lo + (b + 0.5) * bin_w;

    // pooled batch means across all chains
    const int total_batches = n_batches * opt.n_chains;
    auto pool = [&](auto getter, int dim, std::vector<double>& mean,
                    std::vector<double>& err) {
        mean.assign(dim, 0.0);
        err.assign(dim, 0.0);
        for (const auto& r : results)
            for (int b = 0; b < n_batches; ++b)
                for (int d = 0; d < dim; ++d) mean[d] += getter(r, b)[d];
        for (double& m : mean) m /= total_batches;
        for (const auto& r : results)
            for (int b = 0; b < n_batches; ++b)
                for (int d = 0; d < dim; ++d) {
                    const double dd = getter(r, b)[d] - mean[d];
                    err[d] += dd * dd;
                }
        for (double& e : err)
            e = std::sqrt(e / (total_batches - 1.0) / total_batches);
    };
    pool([](const ChainResult& r, int b) -> const double* {
             return r.hist_batches[b].data();
         },
         opt.histogram_bins, st.histogram, st.histogram_err);
    if (opt.lmax > 0) {
        std::vector<double> raw_m, raw_e;
        pool([](const ChainResult& r, int b) -> const double* {
                 return r.moment_batches[b].data();
             },
             opt.lmax, raw_m, raw_e);
        st.moments = raw_m;
        st.moments_err = raw_e;
    }
    {
        std::vector<double> gm, ge;
        pool([](const ChainResult& r, int b) -> const double* {
                 return &r.gap_batches[b];
             },
             1, gm, ge);
        st.gap_frequency = gm[0];
        st.gap_frequency_err = ge[0];
    }
    double acc = 0, stepw = 0, drift = 0;
    for (const auto& r : results) {
        acc += r.acceptance;
        stepw += r.step_width;
        drift = std::max(drift, r.audit_drift);
    }
    st.acceptance_rate = acc / opt.n_chains;
    st.step_width = stepw / opt.n_chains;
    st.energy_audit_max_drift = drift;
    if (st.acceptance_rate < 0.05 || st.acceptance_rate > 0.95)
        throw std::runtime_error(
            "run_chain: acceptance rate outside [0.05, 0.95] after tuning");
    return st;
}

SampleStats gap_frequency(const QParams& p, double s, const SamplerOptions& opt) {
    SamplerOptions o = opt;
    o.track_gap = true;
    o.gap_s = s;
    return run_chain(p, o);
}

}  // namespace qrmt
