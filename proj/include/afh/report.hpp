#pragma once

// Report rendering from the sweep CSVs: an SVG line chart of mean reward
// against AFHP per gate (baselines as horizontal lines, skylines as
// markers) and a plain-text summary with AUCs and ask analytics.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "afh/analytics.hpp"

namespace afh::cli {

struct CurveRow {
  std::string setting;
  double afhp = 0.0;
  double mean_reward = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

struct AnalyticsRow {
  std::string variant;  // gate:setting
  bool coin_visible = false;
  std::size_t steps = 0;
  std::size_t asks = 0;
  double ask_rate = 0.0;
};

struct ResultsData {
  std::vector<std::string> families;  // in file order
  std::map<std::string, std::vector<CurveRow>> curves;
  std::map<std::string, double> auc;  // as written in the curves CSV
  std::vector<AnalyticsRow> analytics;
  std::map<std::string, std::array<std::size_t, harness::kPositionBins>> positions;  // key gate:setting

  bool is_baseline(const std::string& family) const;
  bool is_single_point(const std::string& family) const;
};

/// Throws std::runtime_error if the curves CSV holds no rows.
ResultsData read_results(const std::string& curves_csv, const std::string& analytics_csv,
                         const std::string& positions_csv);

std::string render_svg(const ResultsData& data);
std::string render_summary(const ResultsData& data);

}  // namespace afh::cli
