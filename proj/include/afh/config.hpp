#pragma once

// Experiment configuration. A run is fully described by one JSON document
// with a top-level format_version; every key is required and unknown keys
// are rejected so that a config file pins an experiment exactly.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "afh/env.hpp"
#include "afh/ppo.hpp"
#include "afh/svdd.hpp"

namespace afh::cli {

inline constexpr int kConfigFormatVersion = 1;

/// Parse/validation failure; `line` is 0 when no source position applies.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, std::size_t line, const std::string& message);
  const std::string& key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

struct EvaluationConfig {
  std::size_t episodes = 500;
  std::uint64_t first_seed = 1'000'000;
};

struct CalibrationConfig {
  std::size_t runs = 1000;
  std::uint64_t first_seed = 2'000'000;
};

struct SvddConfig {
  svdd::TrainConfig train;
  std::size_t runs = 200;
  std::uint64_t first_seed = 3'000'000;
  std::size_t calibration_runs = 200;
  std::uint64_t calibration_first_seed = 3'500'000;
};

struct SkylineConfig {
  std::vector<std::string> variants{"S_obs", "S_weak_feat"};
  double ask_cost = 0.05;
  ppo::PPOConfig ppo;
};

struct SweepConfig {
  std::size_t seeds = 1000;
  std::uint64_t first_seed = 5'000'000;
  std::vector<double> percentiles;
  std::vector<double> random_q;
  std::vector<std::string> gates;  // metric names, svdd_raw, svdd_latent, S_obs, S_weak_feat
  std::vector<double> ask_event_percentiles;
  bool expert_argmax = false;
};

struct RunConfig {
  int format_version = kConfigFormatVersion;
  std::string experiment = "default";
  std::uint64_t seed = 1;
  env::GeneratorConfig env;
  ppo::PPOConfig weak;
  ppo::PPOConfig expert;
  EvaluationConfig evaluation;
  CalibrationConfig calibration;
  SvddConfig svdd;
  SkylineConfig skyline;
  SweepConfig sweep;

  /// Writes the derived seeds into the weak, expert and Deep-SVDD configs.
  void derive_seeds();

  /// Per-component seeds derived from the master seed.
  std::uint64_t weak_seed() const;
  std::uint64_t expert_seed() const;
  std::uint64_t svdd_seed() const;
  std::uint64_t skyline_seed(std::string_view variant) const;
};

RunConfig default_config();

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string to_json(const RunConfig& config);

}  // namespace afh::cli
