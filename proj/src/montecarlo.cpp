#include "irs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace irs::mc {
namespace {

unsigned resolve_workers(unsigned requested, std::uint64_t n_samples) {
    unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(1, n_samples)));
}

// Runs body(worker, begin, end) over a contiguous split of [0, n).
void parallel_ranges(unsigned workers, std::uint64_t n,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    if (workers <= 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        pool.emplace_back(body, w, begin, end);
    }
}

// Draws channel gains for samples [begin, end) of stream `rng` in batches and
// adds bin counts: bin k counts gains with exactly k thresholds above them.
void tally(int n, double alpha_l, bool direct, std::span<const double> thresholds_desc, CounterRng rng,
           std::uint64_t begin, std::uint64_t end, std::uint64_t batch_size, std::vector<std::uint64_t>& bins) {
    std::vector<double> batch;
    batch.reserve(static_cast<std::size_t>(std::min(batch_size, end - begin)));
    const std::uint64_t stride = draws_per_sample(n);
    for (std::uint64_t first = begin; first < end; first += batch_size) {
        const std::uint64_t last = std::min(end, first + batch_size);
        batch.clear();
        for (std::uint64_t i = first; i < last; ++i) {
            rng.seek(i * stride);
            batch.push_back(direct ? sample_h2(n, alpha_l, rng) : sample_h1(n, rng));
        }
        for (double h : batch) {
            // thresholds are descending; count those strictly above h
            const auto it = std::lower_bound(thresholds_desc.begin(), thresholds_desc.end(), h, std::greater<>());
            ++bins[static_cast<std::size_t>(it - thresholds_desc.begin())];
        }
    }
}

std::vector<MCEstimate> estimates_from_bins(const std::vector<std::uint64_t>& bins, std::size_t points,
                                            std::uint64_t n_samples, std::uint64_t seed) {
    // hits for threshold j = samples with more than j thresholds above them
    std::vector<MCEstimate> out(points);
    std::uint64_t running = 0;
    for (std::size_t j = points; j-- > 0;) {
        running += bins[j + 1];
        out[j] = MCEstimate::from_counts(running, n_samples, seed);
    }
    return out;
}

}  // namespace

void McConfig::validate() const {
    if (n_samples < 1) throw std::invalid_argument("McConfig: n_samples must be >= 1");
    if (batch_size < 1) throw std::invalid_argument("McConfig: batch_size must be >= 1");
}

MCEstimate MCEstimate::from_counts(std::uint64_t hits, std::uint64_t n_samples, std::uint64_t seed) {
    MCEstimate e;
    e.hits = hits;
    e.n_samples = n_samples;
    e.seed = seed;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(n_samples);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n_samples));
    return e;
}

double MCEstimate::upper_confidence() const {
    if (hits == 0) return 3.0 / static_cast<double>(n_samples);
    return std::min(1.0, p_hat + 1.959963984540054 * std_err);
}

double sample_h1(int n, CounterRng& rng) {
    double h = 0.0;
    for (int k = 0; k < n; ++k) {
        // |h1||h2| = sqrt(ln U1 ln U2) for two Rayleigh(1/sqrt 2) magnitudes
        const double l1 = std::log(rng.uniform_pos());
        const double l2 = std::log(rng.uniform_pos());
        h += std::sqrt(l1 * l2);
    }
    return h;
}

double sample_h2(int n, double alpha_l, CounterRng& rng) {
    const double h1 = sample_h1(n, rng);
    return h1 + std::sqrt(alpha_l) * sample_rayleigh(rng);
}

std::vector<MCEstimate> mc_curve(const SystemConfig& config, Scenario scenario,
                                 std::span<const double> gamma_t_grid, const McConfig& cfg) {
    config.validate();
    cfg.validate();
    if (gamma_t_grid.empty()) throw std::invalid_argument("mc_curve: empty gamma_t grid");
    std::vector<double> thresholds;
    thresholds.reserve(gamma_t_grid.size());
    for (std::size_t j = 0; j < gamma_t_grid.size(); ++j) {
        if (j > 0 && !(gamma_t_grid[j] > gamma_t_grid[j - 1])) {
            throw std::invalid_argument("mc_curve: gamma_t grid must be strictly increasing");
        }
        thresholds.push_back(channel_threshold({config, scenario, gamma_t_grid[j]}));
    }

    const int n = config.n_elements;
    const bool direct = scenario == Scenario::WithDirectLink;
    const double alpha_l = direct ? config.alpha_l() : 0.0;
    const unsigned workers = resolve_workers(cfg.workers, cfg.n_samples);
    std::vector<std::vector<std::uint64_t>> bins(workers, std::vector<std::uint64_t>(thresholds.size() + 1, 0));
    parallel_ranges(workers, cfg.n_samples, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        tally(n, alpha_l, direct, thresholds, CounterRng(cfg.seed), begin, end, cfg.batch_size, bins[w]);
    });
    std::vector<std::uint64_t> pooled(thresholds.size() + 1, 0);
    for (const auto& b : bins) {
        for (std::size_t k = 0; k < b.size(); ++k) pooled[k] += b[k];
    }
    return estimates_from_bins(pooled, thresholds.size(), cfg.n_samples, cfg.seed);
}

MCEstimate mc_outage(const OutageQuery& q, const McConfig& cfg) {
    const double grid[] = {q.gamma_t};
    q.validate();
    return mc_curve(q.config, q.scenario, grid, cfg).front();
}

MCEstimate mc_outage_substreams(const OutageQuery& q, const McConfig& cfg, unsigned streams) {
    q.validate();
    cfg.validate();
    if (streams < 1) throw std::invalid_argument("mc_outage_substreams: need at least one stream");
    const double thresholds[] = {channel_threshold(q)};
    const int n = q.config.n_elements;
    const bool direct = q.scenario == Scenario::WithDirectLink;
    const double alpha_l = direct ? q.config.alpha_l() : 0.0;
    std::vector<std::vector<std::uint64_t>> bins(streams, std::vector<std::uint64_t>(2, 0));
    parallel_ranges(resolve_workers(cfg.workers, streams), streams,
                    [&](unsigned, std::uint64_t first, std::uint64_t last) {
                        for (std::uint64_t k = first; k < last; ++k) {
                            const std::uint64_t count = cfg.n_samples * (k + 1) / streams -
                                                        cfg.n_samples * k / streams;
                            tally(n, alpha_l, direct, thresholds, CounterRng(cfg.seed, k + 1), 0, count,
                                  cfg.batch_size, bins[k]);
                        }
                    });
    std::uint64_t hits = 0;
    for (const auto& b : bins) hits += b[1];
    return MCEstimate::from_counts(hits, cfg.n_samples, cfg.seed);
}

}  // namespace irs::mc
