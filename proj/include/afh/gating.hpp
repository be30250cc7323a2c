#pragma once

// Ask-for-help gates: five action-distribution uncertainty metrics with
// percentile thresholds calibrated on training-distribution rollouts, the
// random baseline, and the common decision interface used by the
// Deep-SVDD and skyline gates.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "afh/env.hpp"
#include "afh/neural.hpp"
#include "afh/rng.hpp"

namespace afh::gating {

enum class Metric : std::uint8_t { max_prob, max_logit, sampled_prob, sampled_logit, entropy };
inline constexpr std::array<Metric, 5> kActionMetrics{Metric::max_prob, Metric::max_logit, Metric::sampled_prob,
                                                      Metric::sampled_logit, Metric::entropy};

/// Which side of the threshold triggers a request.
enum class Direction : std::uint8_t { below, above };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);  // throws std::invalid_argument
Direction direction(Metric metric);

/// max_prob / max_logit / sampled_prob / sampled_logit / natural-log entropy.
double metric_value(Metric metric, std::span<const double> logits, std::size_t sampled_action);

/// Nearest-rank percentile: element ceil(p/100 * N) (1-based, clamped to
/// [1, N]) of an ascending array.
double nearest_rank(std::span<const double> sorted, double percentile);

/// Threshold such that asking at percentile p fires on about p% of the
/// calibration samples. For `above`, the (100 - p)th percentile is used.
double threshold_for_percentile(std::span<const double> sorted, Direction direction, double percentile);

struct Provenance {
  std::string policy_id;
  std::size_t n_runs = 0;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;

  bool operator==(const Provenance&) const = default;
};

/// Sorted calibration samples, one array per metric.
struct ThresholdTable {
  Provenance provenance;
  std::array<std::vector<double>, kActionMetrics.size()> samples;

  const std::vector<double>& of(Metric metric) const { return samples[static_cast<std::size_t>(metric)]; }
  std::vector<double>& of(Metric metric) { return samples[static_cast<std::size_t>(metric)]; }
};

class EmptyTable : public std::invalid_argument {
 public:
  EmptyTable() : std::invalid_argument("threshold table is empty") {}
};

double threshold_for_percentile(const ThresholdTable& table, Metric metric, double percentile);

/// Run the policy on `n_runs` train-mode levels (consecutive accepted seeds
/// from `first_seed`), recording every metric at every timestep.
ThresholdTable calibrate(const nn::PolicySnapshot& policy, const env::GeneratorConfig& config, std::size_t n_runs,
                         std::uint64_t first_seed);

/// CSV `metric,rank,value` preceded by one `# ...` provenance line.
void write_table_csv(std::ostream& out, const ThresholdTable& table, Metric metric);
/// Reads one metric's CSV into `table`; returns the metric it held.
Metric read_table_csv(std::istream& in, ThresholdTable& table);

/// Source vector for observation-based gates.
enum class InputKind : std::uint8_t { raw_observation, weak_latent };
std::string_view to_string(InputKind kind);
InputKind parse_input_kind(std::string_view text);

struct ActionMetricGate {
  Metric metric = Metric::max_prob;
  double percentile = 0.0;
  double threshold = 0.0;
};

struct RandomGate {
  double q = 0.0;
};

struct SvddGate {
  InputKind input = InputKind::raw_observation;
  double percentile = 0.0;
  double threshold = 0.0;
};

struct SkylineGate {
  std::string snapshot_id;
};

struct GateSpec {
  std::variant<ActionMetricGate, RandomGate, SvddGate, SkylineGate> variant;

  /// Throws std::invalid_argument on out-of-range percentile or q.
  void validate() const;
};

GateSpec action_gate(const ThresholdTable& table, Metric metric, double percentile);
GateSpec random_gate(double q);

struct GateInputs {
  std::span<const double> logits;
  std::optional<std::size_t> sampled_action;
  std::optional<double> anomaly_score;
  /// Skyline meta-policy: sampled decision and its probability of asking.
  std::optional<bool> meta_use_expert;
  double meta_expert_probability = 0.0;
};

struct GateDecision {
  bool ask = false;
  double metric_value = 0.0;
  double threshold = 0.0;
};

class MissingGateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strict comparisons: below-metrics ask when value < threshold, entropy and
/// anomaly scores when value > threshold. The random variant draws from
/// `gate_rng`, which must be non-null for it.
GateDecision decide(const GateSpec& spec, const GateInputs& inputs, Rng* gate_rng);

}  // namespace afh::gating
