#pragma once

// Experiment pipeline: run the weak agent under a gate, hand single steps to
// the expert on asks, sweep gate settings over a shared seed list and turn
// the results into AFHP/reward curves and ask analytics.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "afh/analytics.hpp"
#include "afh/env.hpp"
#include "afh/gating.hpp"
#include "afh/neural.hpp"

namespace afh::svdd {
struct Model;
}
namespace afh::skyline {
struct SkylineSnapshot;
}

namespace afh::harness {

struct Agents {
  const nn::PolicySnapshot* weak = nullptr;
  const nn::PolicySnapshot* expert = nullptr;
  bool expert_argmax = false;
};

/// A resolved gate plus whatever model it consults.
struct Gate {
  std::string family;
  gating::GateSpec spec;
  const svdd::Model* svdd = nullptr;
  const skyline::SkylineSnapshot* skyline = nullptr;
};

Gate never_ask(std::string family = "weak_alone");
Gate always_ask(std::string family = "expert_alone");

/// Plays one episode to termination. Each timestep the weak agent samples an
/// action; if the gate asks, the expert's action for that timestep replaces
/// it. A generator rejection returns a record with rejected = true.
EpisodeRecord run_gated_episode(const Agents& agents, const Gate& gate, const std::string& setting,
                                std::uint64_t seed, env::Mode mode, const env::GeneratorConfig& config);

/// First `n` seeds from `first` that the generator accepts in `mode`;
/// rejected seeds are skipped for every method alike. `rejected` receives the
/// number skipped when non-null.
std::vector<std::uint64_t> seed_list(std::uint64_t first, std::size_t n, env::Mode mode,
                                     const env::GeneratorConfig& config, std::size_t* rejected = nullptr);

struct GateFamily {
  std::string name;
  std::vector<double> settings;
  std::function<Gate(double)> make;
};

std::vector<double> default_percentile_grid();  // 0, 5, ..., 100
std::vector<double> default_q_grid();           // 0, 0.05, ..., 1

struct SweepPoint {
  std::string setting;
  double setting_value = 0.0;
  double afhp = 0.0;         // mean over episodes of per-episode ask fraction
  double mean_reward = 0.0;
  double reward_stderr = 0.0;
  std::size_t episodes = 0;
  std::vector<double> rewards;  // per seed, in seed-list order
  AskAnalytics analytics;
};

struct SweepResult {
  std::string family;
  std::vector<SweepPoint> points;
};

using RecordSink = std::function<void(const EpisodeRecord&)>;

std::string format_setting(double value);

/// Runs one point on the given seeds.
SweepPoint run_point(const Agents& agents, const Gate& gate, const std::string& setting, double setting_value,
                     std::span<const std::uint64_t> seeds, env::Mode mode, const env::GeneratorConfig& config,
                     const RecordSink& sink = {});

SweepResult sweep(const Agents& agents, const GateFamily& family, std::span<const std::uint64_t> seeds,
                  env::Mode mode, const env::GeneratorConfig& config, const RecordSink& sink = {});

struct CurvePoint {
  double afhp = 0.0;
  double mean_reward = 0.0;
};

struct Curve {
  std::vector<CurvePoint> points;  // strictly ascending AFHP
  double auc = 0.0;

  /// Linear interpolation; clamps to the end values outside the span.
  double at(double afhp) const;
  double min_afhp() const { return points.front().afhp; }
  double max_afhp() const { return points.back().afhp; }
};

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sort by AFHP, average rewards of equal AFHPs, trapezoidal AUC over the
/// observed span. Needs at least two distinct AFHP values.
Curve build_curve(std::vector<CurvePoint> points);
Curve build_curve(const SweepResult& sweep);

/// Mean of curve a minus curve b over the AFHP span both cover, by
/// trapezoidal integration on the union of their knots.
double mean_gap_over_common_span(const Curve& a, const Curve& b);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile bootstrap CI of mean(a_i - b_i) over paired samples.
Interval paired_bootstrap_ci(std::span<const double> a, std::span<const double> b, std::size_t resamples,
                             double level, std::uint64_t seed);

struct Baselines {
  SweepPoint weak_test;
  SweepPoint weak_train;
  SweepPoint expert_test;
  SweepResult random;
};

Baselines baselines(const Agents& agents, std::span<const std::uint64_t> test_seeds,
                    std::span<const std::uint64_t> train_seeds, const env::GeneratorConfig& config,
                    const std::vector<double>& q_grid, const RecordSink& sink = {});

// -- CSV ------------------------------------------------------------------

void write_episode_header(std::ostream& out);
void write_episode_row(std::ostream& out, const EpisodeRecord& record);
void write_ask_event_header(std::ostream& out);
void write_ask_event_rows(std::ostream& out, const EpisodeRecord& record);
void write_curve_header(std::ostream& out);
void write_curve_rows(std::ostream& out, const SweepResult& sweep);
void write_auc_row(std::ostream& out, const std::string& family, double auc);

std::string format_number(double value);

}  // namespace afh::harness
