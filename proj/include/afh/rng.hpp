#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace afh {

/// SplitMix64 finalizer. Used to derive independent stream seeds from one
/// master value.
constexpr std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

/// Per-episode stream tags. Every rollout path derives its random streams
/// from the level seed with these tags, so weak-alone, expert-alone and gated
/// runs on one seed share their action draws.
namespace stream {
inline constexpr std::uint64_t weak_actions = 1;
inline constexpr std::uint64_t expert_actions = 2;
inline constexpr std::uint64_t gate = 3;
}  // namespace stream

/// Portable random stream. std::mt19937_64 is bit-specified by the standard;
/// the std distributions are not, so conversions are done here by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] (inclusive), rejection-free for the small
  /// ranges used here via 128-bit multiply.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto product = static_cast<unsigned __int128>(engine_()) * span;
    return lo + static_cast<int>(product >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Draw an index from a probability vector by inverse CDF.
  std::size_t categorical(std::span<const double> probs) {
    const double u = uniform();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      cumulative += probs[i];
      if (u < cumulative) return i;
    }
    // Rounding left u above the total; fall back to the last supported index.
    for (std::size_t i = probs.size(); i-- > 0;) {
      if (probs[i] > 0.0) return i;
    }
    return probs.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace afh
