#pragma once

// Seeded grid platformer with a train distribution (coin at the far right)
// and a test distribution (coin anywhere). Integer physics only, so traces
// are bit-identical everywhere.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace afh::env {

enum class TileKind : std::uint8_t { empty = 0, solid = 1, hazard = 2, coin = 3 };
inline constexpr int kTileKinds = 4;

enum class Mode : std::uint8_t { train, test };

enum class Action : std::uint8_t { left = 0, right = 1, jump = 2, jump_right = 3, noop = 4 };
inline constexpr int kActionCount = 5;

enum class Outcome : std::uint8_t { running, coin, hazard, timeout };

std::string_view to_string(Mode mode);
std::string_view to_string(Outcome outcome);
Mode parse_mode(std::string_view text);  // throws std::invalid_argument

inline constexpr double kCoinReward = 10.0;

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

struct GeneratorConfig {
  int width = 48;
  int height = 12;
  int view_radius = 5;
  int max_steps = 256;
  int max_attempts = 100;

  /// Throws std::invalid_argument unless width >= 16 and height >= 8.
  void validate() const;
  /// Length of an encoded observation vector.
  std::size_t observation_dim() const;
};

/// Immutable level. Row y = 0 is the floor; y grows upward.
struct LevelSpec {
  int width = 0;
  int height = 0;
  std::vector<TileKind> tiles;  // row-major, index y * width + x
  Cell start;
  Cell coin;
  std::uint64_t seed = 0;
  Mode mode = Mode::train;

  /// Tile lookup; anything outside the grid reads as solid.
  TileKind at(int x, int y) const;
  bool standable(int x, int y) const;
  /// Columns holding at least one standable cell, ascending.
  std::vector<int> standable_columns() const;
};

/// Raised when a seed cannot produce a valid level within the retry budget.
class LevelRejected : public std::runtime_error {
 public:
  explicit LevelRejected(std::uint64_t seed);
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Stepping an episode that has already ended.
class TerminalStepError : public std::logic_error {
 public:
  TerminalStepError() : std::logic_error("step() called on a terminal state") {}
};

LevelSpec generate_level(std::uint64_t seed, Mode mode, const GeneratorConfig& config = {});

/// True when some action sequence of at most max_steps steps collects the
/// coin. Breadth-first over (cell, vertical velocity).
bool coin_reachable(const LevelSpec& level, int max_steps);

struct EnvState {
  Cell agent;
  int vertical_velocity = 0;  // cells per step, in [-2, 2]
  int t = 0;
  Outcome outcome = Outcome::running;

  bool terminal() const { return outcome != Outcome::running; }
  bool operator==(const EnvState&) const = default;
};

using Observation = std::vector<float>;

struct StepInfo {
  Outcome outcome = Outcome::running;
  bool coin_visible = false;
};

struct StepResult {
  EnvState state;
  Observation observation;
  double reward = 0.0;
  StepInfo info;
};

struct ResetResult {
  EnvState state;
  Observation observation;
};

ResetResult reset(const LevelSpec& level, const GeneratorConfig& config = {});

/// Advance one tick: vertical travel cell by cell, then the horizontal move,
/// then gravity. Coin and hazard cells trigger on entry.
StepResult step(const EnvState& state, const LevelSpec& level, Action action,
                const GeneratorConfig& config = {});

/// Physics only, no observation encoding.
EnvState advance(const EnvState& state, const LevelSpec& level, Action action, int max_steps);

/// Egocentric one-hot window (height rows x (2r+1) columns x 4 kinds, row
/// centred on the agent) followed by normalized vertical velocity and x.
Observation encode_observation(const LevelSpec& level, const EnvState& state,
                               const GeneratorConfig& config = {});
void encode_observation(const LevelSpec& level, const EnvState& state,
                        const GeneratorConfig& config, std::span<float> out);

bool coin_visible(const LevelSpec& level, const EnvState& state, const GeneratorConfig& config = {});

/// Text dump: header line then one row per line, top row first.
std::string dump_level(const LevelSpec& level);
void dump_level(std::ostream& out, const LevelSpec& level);

}  // namespace afh::env
