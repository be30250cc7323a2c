#pragma once

// The experiment commands. Each reads its inputs from and writes its outputs
// to an ArtifactStore; the CLI and the acceptance suite both drive these.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "afh/config.hpp"
#include "afh/env.hpp"
#include "afh/neural.hpp"
#include "afh/store.hpp"

namespace afh::cli {

enum class Agent { weak, expert };
Agent parse_agent(std::string_view text);  // "weak" / "expert"
std::string_view to_string(Agent agent);

std::string cmd_demo_level(const RunConfig& config, std::uint64_t seed, env::Mode mode);

/// weights/<agent>.agw, results/train_<agent>.csv, results/eval_<agent>.csv
void cmd_train(ArtifactStore& store, const RunConfig& config, Agent agent, std::ostream& log);

/// tables/<metric>.csv for the five action metrics.
void cmd_calibrate(ArtifactStore& store, const RunConfig& config, std::ostream& log);

/// weights/svdd_<kind>.agw + .json, tables/svdd_<kind>_scores.csv
void cmd_train_svdd(ArtifactStore& store, const RunConfig& config, std::string_view kind, std::ostream& log);

/// weights/skyline_<variant>.agw + .json, results/train_<variant>.csv
void cmd_train_skyline(ArtifactStore& store, const RunConfig& config, std::string_view variant, std::ostream& log);

/// results/{episodes,ask_events,curves,analytics,ask_positions}.csv
void cmd_sweep(ArtifactStore& store, const RunConfig& config, std::ostream& log);

/// report/curves.svg and report/summary.txt from the results CSVs.
void cmd_report(ArtifactStore& store, std::ostream& log);

/// train weak, train expert, calibrate, both Deep-SVDD inputs, the
/// configured skylines, sweep, report.
void cmd_run_all(ArtifactStore& store, const RunConfig& config, std::ostream& log);

/// Loads weights/<name>.agw as a snapshot with id `name`.
nn::PolicySnapshot load_policy(const ArtifactStore& store, const std::string& name);

// -- CSV helpers ------------------------------------------------------------

/// Splits comma-separated text into rows, dropping `#` comment lines and
/// the header row.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string svdd_stem(std::string_view kind);     // "svdd_raw" / "svdd_latent"
std::string skyline_stem(std::string_view variant);  // "skyline_S_obs" ...

}  // namespace afh::cli
