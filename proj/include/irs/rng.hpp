#pragma once

#include <cstdint>
#include <limits>

namespace irs {

/// Counter-based generator built on the SplitMix64 output function.
///
/// The i-th output of stream (seed, stream_id) is mix64(key + (i + 1) * gamma)
/// with key = mix64(seed ^ mix64(stream_id + c)). Any position can be reached
/// in O(1) with seek(), so disjoint sample ranges can be handed to workers
/// and the pooled result is identical to a single sequential pass.
/// See https://prng.di.unimi.it for the mixing constants.
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream_id = 0)
        : key_(mix64(seed ^ mix64(stream_id + 0x632be59bd9b4e019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix64(key_ + (++counter_) * kGamma); }

    /// Position the generator so the next output is output number `counter`.
    void seek(std::uint64_t counter) { counter_ = counter; }
    std::uint64_t position() const { return counter_; }

    /// Uniform double on (0, 1]; never returns 0 so log() stays finite.
    double uniform_pos() { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace irs
