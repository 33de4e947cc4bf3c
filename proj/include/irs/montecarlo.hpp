#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "irs/log_prob.hpp"
#include "irs/rng.hpp"
#include "irs/sysmodel.hpp"

namespace irs::mc {

struct McConfig {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t batch_size = 1 << 16;
    unsigned workers = 0;  // 0: one per hardware thread

    void validate() const;
};

struct MCEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;

    static MCEstimate from_counts(std::uint64_t hits, std::uint64_t n_samples, std::uint64_t seed);

    LogProb log_p() const { return LogProb::from_linear(p_hat); }
    /// 95% upper confidence bound on p; 3/n (rule of three) when hits == 0.
    double upper_confidence() const;
};

/// Rayleigh magnitude with scale 1/sqrt(2) (unit-power complex Gaussian):
/// sqrt(-ln U).
inline double sample_rayleigh(CounterRng& rng) { return std::sqrt(-std::log(rng.uniform_pos())); }

/// One realisation of H1 = sum_n |h1n||h2n|; consumes 2n outputs.
double sample_h1(int n, CounterRng& rng);

/// One realisation of H2 = H1 + sqrt(alpha_l)|h_L|; consumes 2n + 1 outputs.
/// alpha_l = 0 reproduces sample_h1 on the same draws.
double sample_h2(int n, double alpha_l, CounterRng& rng);

/// Outputs reserved per sample; sample i starts at counter i * draws_per_sample(n).
constexpr std::uint64_t draws_per_sample(int n) { return 2 * static_cast<std::uint64_t>(n) + 1; }

/// Fraction of channel realisations below the outage threshold.
/// Deterministic in (q, cfg.seed, cfg.n_samples) regardless of cfg.workers.
MCEstimate mc_outage(const OutageQuery& q, const McConfig& cfg);

/// Outage estimates on a strictly increasing gamma_t grid (linear scale),
/// every grid point tested against the same channel draws.
std::vector<MCEstimate> mc_curve(const SystemConfig& config, Scenario scenario,
                                 std::span<const double> gamma_t_grid, const McConfig& cfg);

/// Splits cfg.n_samples over `streams` independent substreams (seed, k) and
/// pools the hits. Statistically, not bitwise, equivalent to mc_outage.
MCEstimate mc_outage_substreams(const OutageQuery& q, const McConfig& cfg, unsigned streams);

}  // namespace irs::mc
