#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "afh/env.hpp"

namespace afh::harness {

struct AskEvent {
  int t = 0;
  int x = 0;
  bool coin_visible = false;
  double metric_value = 0.0;
  double threshold = 0.0;
};

/// One gated rollout.
struct EpisodeRecord {
  std::uint64_t seed = 0;
  env::Mode mode = env::Mode::test;
  std::string gate;
  std::string setting;
  env::Outcome outcome = env::Outcome::running;
  double reward = 0.0;
  int steps = 0;
  int level_width = 0;
  int coin_visible_steps = 0;
  std::vector<AskEvent> asks;
  bool rejected = false;

  /// Fraction of this episode's timesteps that asked for help.
  double afhp() const { return steps == 0 ? 0.0 : static_cast<double>(asks.size()) / steps; }
};

inline constexpr std::size_t kPositionBins = 10;

/// Ask rates conditioned on coin visibility, plus where asks happen along
/// the level (x / width in 10 equal bins).
struct AskAnalytics {
  std::size_t visible_steps = 0;
  std::size_t visible_asks = 0;
  std::size_t hidden_steps = 0;
  std::size_t hidden_asks = 0;
  std::array<std::size_t, kPositionBins> position_histogram{};

  double rate_visible() const { return visible_steps == 0 ? 0.0 : static_cast<double>(visible_asks) / visible_steps; }
  double rate_hidden() const { return hidden_steps == 0 ? 0.0 : static_cast<double>(hidden_asks) / hidden_steps; }
  std::size_t total_asks() const { return visible_asks + hidden_asks; }
  std::size_t total_steps() const { return visible_steps + hidden_steps; }
  /// Index of the most populated position bin (lowest index on ties).
  std::size_t modal_bin() const;

  void add(const EpisodeRecord& record);
  void merge(const AskAnalytics& other);
};

std::size_t position_bin(int x, int width);

AskAnalytics analytics(std::span<const EpisodeRecord> records);

}  // namespace afh::harness
