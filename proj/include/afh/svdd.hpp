#pragma once

// One-class Deep-SVDD: a bias-free relu encoder trained to pull
// training-distribution inputs toward a fixed centre. The anomaly score is
// the squared distance of the embedding from that centre.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "afh/env.hpp"
#include "afh/gating.hpp"
#include "afh/neural.hpp"

namespace afh::svdd {

using gating::InputKind;

/// Row-major set of equal-width float vectors.
struct Dataset {
  std::size_t dim = 0;
  std::vector<float> values;

  std::size_t size() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const float> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
  void push_back(std::span<const float> row);
};

/// Input vector for a gate or detector: the observation itself or the weak
/// policy's latent activations for it, narrowed to float.
std::vector<float> latent_input(const nn::ForwardResult& weak_forward);

/// Weak agent rollouts on train-mode levels, one vector per timestep.
Dataset collect_svdd_dataset(const nn::PolicySnapshot& weak, InputKind kind, const env::GeneratorConfig& config,
                             std::size_t n_runs, std::uint64_t first_seed);

struct TrainConfig {
  std::size_t epochs = 15;
  std::size_t minibatch_size = 128;
  double learning_rate = 1e-3;
  double weight_decay = 1e-6;
  std::vector<std::size_t> hidden{64, 32};
  std::size_t embedding = 16;
  std::uint64_t seed = 7;

  void validate() const;
};

inline constexpr double kCenterClamp = 0.1;

struct Model {
  nn::NetSpec spec;
  nn::ParamSet params;
  std::vector<double> center;
  InputKind input_kind = InputKind::raw_observation;
  // provenance
  std::string source_policy;
  std::size_t dataset_size = 0;
  double center_clamp = kCenterClamp;
  std::uint64_t seed = 0;
  std::size_t epochs = 0;
};

std::vector<double> embed(const nn::ParamSet& params, const nn::NetSpec& spec, std::span<const float> input);

/// Mean embedding under `params`, with every coordinate pushed to at least
/// `clamp` in magnitude (sign preserved, zero counts as positive).
std::vector<double> init_center(const nn::ParamSet& params, const nn::NetSpec& spec, const Dataset& data,
                                double clamp = kCenterClamp);

class TrainingFailed : public std::runtime_error {
 public:
  explicit TrainingFailed(std::size_t epoch);
  std::size_t epoch() const { return epoch_; }

 private:
  std::size_t epoch_;
};

/// Adam on mean ||phi(x) - c||^2 + weight_decay * ||W||^2 with c fixed.
Model train_svdd(const Dataset& data, InputKind kind, const TrainConfig& config,
                 const std::string& source_policy = "");

/// Mean loss term ||phi(x) - c||^2 over a dataset (no weight decay).
double mean_score(const Model& model, const Dataset& data);

/// ||phi(x) - c||^2.
double score(const Model& model, std::span<const float> input);

struct ScoreTable {
  std::vector<double> sorted;

  /// Ask-above threshold: p% of calibration scores exceed it.
  double threshold_for_percentile(double percentile) const;
};

ScoreTable calibrate_svdd(const Model& model, const Dataset& calibration);

/// Weights go to `<stem>.agw`, centre and provenance to `<stem>.json`.
void save_model(const std::string& stem, const Model& model);
Model load_model(const std::string& stem);

}  // namespace afh::svdd
