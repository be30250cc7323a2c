#pragma once

// Skyline meta-policies: PPO-trained on the test distribution to pick, per
// step, whether the weak or the expert agent acts. Upper references only.

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "afh/analytics.hpp"
#include "afh/env.hpp"
#include "afh/neural.hpp"
#include "afh/ppo.hpp"
#include "afh/rng.hpp"

namespace afh::skyline {

/// obs: meta-policy sees the raw observation. weak_feat: it sees the weak
/// policy's latent activations.
enum class Variant : std::uint8_t { obs, weak_feat };

std::string_view to_string(Variant variant);  // "S_obs" / "S_weak_feat"
Variant parse_variant(std::string_view text);  // accepts "obs", "weak_feat", "S_obs", "S_weak_feat"

enum class MetaAction : std::uint8_t { use_weak = 0, use_expert = 1 };
inline constexpr std::size_t kMetaActions = 2;

std::size_t input_width(Variant variant, const env::GeneratorConfig& config, const nn::PolicySnapshot& weak);
std::vector<float> meta_input(Variant variant, std::span<const float> observation,
                              const nn::ForwardResult& weak_forward);

/// Expert action selection: sampled by default, argmax on request.
std::size_t expert_action(std::span<const double> logits, Rng& rng, bool argmax);

struct MetaStep {
  env::Action executed = env::Action::noop;
  bool used_expert = false;
  double reward = 0.0;
};

/// Executes one meta-step. The weak action is always drawn (keeping its
/// stream aligned with ungated runs); the expert is consulted only on
/// use_expert. Reward is the environment's minus `ask_cost` on use_expert.
MetaStep skyline_env_step(MetaAction meta_action, const nn::PolicySnapshot& weak, const nn::PolicySnapshot& expert,
                          const nn::ForwardResult& weak_forward, std::span<const float> observation,
                          env::EnvState& state, const env::LevelSpec& level, const env::GeneratorConfig& config,
                          Rng& weak_rng, Rng& expert_rng, double ask_cost, bool expert_argmax);

struct SkylineSnapshot {
  Variant variant = Variant::obs;
  nn::PolicySnapshot meta;
  nn::SnapshotPtr weak;
  nn::SnapshotPtr expert;
  double ask_cost = 0.0;
  bool expert_argmax = false;
};

/// Test-mode meta-MDP exposed to the PPO trainer.
class SkylineTask : public ppo::Task {
 public:
  SkylineTask(Variant variant, nn::SnapshotPtr weak, nn::SnapshotPtr expert, env::GeneratorConfig config,
              double ask_cost, bool expert_argmax);
  std::size_t observation_dim() const override;
  std::size_t action_count() const override { return kMetaActions; }
  std::unique_ptr<ppo::Episode> start(std::uint64_t seed) const override;

 private:
  Variant variant_;
  nn::SnapshotPtr weak_;
  nn::SnapshotPtr expert_;
  env::GeneratorConfig config_;
  double ask_cost_;
  bool expert_argmax_;
};

struct TrainedSkyline {
  SkylineSnapshot snapshot;
  ppo::TrainReport report;
};

TrainedSkyline train_skyline(Variant variant, nn::SnapshotPtr weak, nn::SnapshotPtr expert,
                             const env::GeneratorConfig& config, const ppo::PPOConfig& ppo_config, double ask_cost,
                             bool expert_argmax = false);

/// Runs the skyline on `n_seeds` test levels and partitions every timestep by
/// coin visibility.
harness::AskAnalytics skyline_ask_analytics(const SkylineSnapshot& snapshot, const env::GeneratorConfig& config,
                                            std::uint64_t first_seed, std::size_t n_seeds);

/// CSV `variant,coin_visible,steps,asks,ask_rate`, two rows per call.
void write_analytics_header(std::ostream& out);
void write_analytics_rows(std::ostream& out, std::string_view variant, const harness::AskAnalytics& analytics);

}  // namespace afh::skyline
