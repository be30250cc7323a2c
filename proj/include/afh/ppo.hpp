#pragma once

// Clipped-surrogate PPO with GAE over any episodic task with a discrete
// action set. Used for the weak and expert agents and for skyline
// meta-policies.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "afh/env.hpp"
#include "afh/neural.hpp"
#include "afh/rng.hpp"

namespace afh::ppo {

struct Transition {
  double reward = 0.0;
  bool done = false;
  env::Outcome outcome = env::Outcome::running;
};

class Episode {
 public:
  virtual ~Episode() = default;
  virtual std::span<const float> observation() const = 0;
  virtual Transition step(std::size_t action) = 0;
};

/// Factory for seeded episodes. start() throws env::LevelRejected for seeds
/// the generator refuses.
class Task {
 public:
  virtual ~Task() = default;
  virtual std::size_t observation_dim() const = 0;
  virtual std::size_t action_count() const = 0;
  virtual std::unique_ptr<Episode> start(std::uint64_t seed) const = 0;
};

/// The platformer itself: observation = encoded window, 5 actions.
class PlatformerTask : public Task {
 public:
  PlatformerTask(env::Mode mode, env::GeneratorConfig config);
  std::size_t observation_dim() const override { return config_.observation_dim(); }
  std::size_t action_count() const override { return env::kActionCount; }
  std::unique_ptr<Episode> start(std::uint64_t seed) const override;

  env::Mode mode() const { return mode_; }
  const env::GeneratorConfig& config() const { return config_; }

 private:
  env::Mode mode_;
  env::GeneratorConfig config_;
};

/// Consecutive level seeds starting at `first`.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t first = 0) : next_(first) {}
  std::uint64_t next() { return next_++; }

 private:
  std::uint64_t next_;
};

/// Starts an episode from the next seed the generator accepts.
std::unique_ptr<Episode> start_next(const Task& task, SeedStream& seeds);

/// Fixed-length rollout for n_envs parallel episodes, stored env-major:
/// index = env * steps_per_env + t.
struct RolloutBuffer {
  std::size_t observation_dim = 0;
  std::size_t n_envs = 0;
  std::size_t steps_per_env = 0;
  std::vector<float> observations;
  std::vector<std::uint32_t> actions;
  std::vector<double> log_probs;
  std::vector<double> values;
  std::vector<double> rewards;
  std::vector<std::uint8_t> dones;
  std::vector<std::uint64_t> episode_ids;
  std::vector<double> bootstrap_values;  // one per env

  // Episodes that finished during this rollout.
  std::vector<double> finished_returns;
  std::vector<std::uint8_t> finished_coin;

  std::size_t size() const { return actions.size(); }
  std::span<const float> observation(std::size_t i) const {
    return {observations.data() + i * observation_dim, observation_dim};
  }
};

class RolloutCollector {
 public:
  RolloutCollector(const Task& task, SeedStream seeds, std::size_t n_envs, std::uint64_t sampling_seed);

  /// Continue every env for `steps_per_env` steps under `policy`; episodes
  /// carry over between calls.
  RolloutBuffer collect(const nn::PolicySnapshot& policy, std::size_t steps_per_env);

 private:
  const Task& task_;
  SeedStream seeds_;
  Rng rng_;
  std::vector<std::unique_ptr<Episode>> episodes_;
  std::vector<std::uint64_t> episode_ids_;
  std::vector<double> running_returns_;
  std::uint64_t next_episode_id_ = 0;
};

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> returns;
};

/// delta_t = r_t + gamma V(s_{t+1})(1 - done_t) - V(s_t),
/// A_t = delta_t + gamma lambda (1 - done_t) A_{t+1}.
GaeResult compute_gae(const RolloutBuffer& buffer, double gamma, double lambda);

/// Shift to zero mean and scale to unit standard deviation (eps-guarded).
void normalize_advantages(std::vector<double>& advantages);

struct PPOConfig {
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double clip_epsilon = 0.2;
  int epochs = 3;
  std::size_t minibatch_size = 256;
  double entropy_coef = 0.01;
  double value_coef = 0.5;
  double max_grad_norm = 0.5;
  std::size_t n_envs = 16;
  std::size_t steps_per_env = 128;
  std::size_t total_steps = 1'000'000;
  double learning_rate = 5e-4;
  bool anneal_learning_rate = true;
  std::vector<std::size_t> hidden{128, 64};
  std::uint64_t seed = 1;
  std::uint64_t first_level_seed = 0;

  void validate() const;  // throws std::invalid_argument
  std::size_t batch_size() const { return n_envs * steps_per_env; }
};

/// Per-sample PPO loss pieces and their gradient w.r.t. the network output
/// ([logits..., value]). Gradient is for the un-averaged sample loss
///   -min(rho A, clip(rho) A) + c_v (V - R)^2 - c_H H.
struct SampleLoss {
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double ratio = 1.0;
  bool clipped = false;
};

SampleLoss ppo_sample_loss(std::span<const double> output, std::size_t actions, std::size_t action,
                           double old_log_prob, double advantage, double target_return, const PPOConfig& config,
                           std::span<double> output_grad);

struct UpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double clip_fraction = 0.0;
  /// max |rho - 1| over the first minibatch of the first epoch, before any step.
  double first_ratio_deviation = 0.0;
  bool ok = true;
  std::string diagnostic;
};

/// Shuffled-minibatch PPO epochs. `advantages` must already be normalized.
/// On a non-finite loss or gradient, params and optimizer are restored and
/// ok = false is returned.
UpdateStats ppo_update(const nn::NetSpec& spec, nn::ParamSet& params, nn::AdamState& adam,
                       const RolloutBuffer& buffer, std::span<const double> advantages,
                       std::span<const double> returns, const PPOConfig& config, Rng& rng);

struct BatchReport {
  std::size_t batch = 0;
  double mean_reward = 0.0;
  double coin_rate = 0.0;
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
};

struct TrainReport {
  std::vector<BatchReport> batches;

  /// CSV: batch,mean_reward,coin_rate,policy_loss,value_loss,entropy
  void write_csv(std::ostream& out) const;
};

class TrainingFailed : public std::runtime_error {
 public:
  TrainingFailed(std::size_t batch, const std::string& diagnostic);
  std::size_t batch() const { return batch_; }

 private:
  std::size_t batch_;
};

struct TrainResult {
  nn::PolicySnapshot snapshot;
  TrainReport report;
};

/// collect -> GAE -> update until total_steps.
TrainResult train(const Task& task, const PPOConfig& config, const std::string& id);

struct Evaluation {
  std::size_t episodes = 0;
  std::size_t coins = 0;
  double mean_reward = 0.0;

  double coin_rate() const { return episodes == 0 ? 0.0 : static_cast<double>(coins) / episodes; }
};

/// Run `n_episodes` sampled episodes on consecutive accepted seeds starting
/// at `first_seed`. Action sampling is seeded per episode from the level seed.
Evaluation evaluate(const nn::PolicySnapshot& policy, const Task& task, std::uint64_t first_seed,
                    std::size_t n_episodes);

std::size_t sample_action(std::span<const double> logits, Rng& rng);

}  // namespace afh::ppo
