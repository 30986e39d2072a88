#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerwalk/lattice.hpp"

namespace eulerwalk::cli {

enum class Command {
  Sample,
  Tour,
  Correlations,
  DeltaDist,
  Msd,
  PlanarCheck,
  Conjecture,
  Green,
  Predict,
  Compare,
};

std::string_view command_name(Command c);
Command parse_command(std::string_view name);

struct LatticeSpec {
  Lattice::Topology topology = Lattice::Topology::Torus;
  int width = 0;
  int height = 0;

  Lattice build() const;
};

/// Parses "MxN" into a spec of the given topology.
LatticeSpec parse_lattice(std::string_view text, Lattice::Topology topology);

/// Everything needed to reproduce a run. Execution-only knobs (thread
/// count) are deliberately kept out of the serialised form.
struct RunConfig {
  Command command = Command::Predict;
  std::optional<LatticeSpec> lattice;
  std::string order = "clockwise";
  std::uint64_t seed = 1;
  std::int64_t samples = 1;
  std::uint64_t stream = 0;
  std::optional<int> chip;
  std::string output;  // file prefix; empty writes to stdout
  std::string format = "json";

  // green
  int p = 0;
  int q = 0;
  double tolerance = 1e-12;
  // msd
  std::optional<std::int64_t> t_max;
  std::optional<std::int64_t> window_first;
  std::optional<std::int64_t> window_last;
  // tour
  std::string state_path;
  // compare
  std::string empirical_path;
  std::string predicted_path;

  int threads = 0;
};

nlohmann::json to_json(const RunConfig& config);

/// Validates sizes and counts; throws InputError with a usage message.
void validate(const RunConfig& config);

/// Parses argv (CLI11). Throws InputError on usage errors; returns nullopt
/// after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Dispatches one command, writing CSV/JSON artifacts to `config.output`
/// (prefix.csv / prefix.json) or the selected format to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Per-observable comparison of an empirical summary against a prediction.
struct Comparison {
  std::string observable;
  double empirical = 0;
  double standard_error = 0;
  double predicted = 0;
  double z = 0;
  bool passed = true;
};

inline constexpr double kMaxAbsZ = 4.0;

/// empirical: a summary with "observables": {name: {"value", "se"}};
/// predicted: a summary with numeric fields named like the observables.
/// Throws InputError when a predicted observable is missing empirically or
/// nothing overlaps.
std::vector<Comparison> compare(const nlohmann::json& empirical, const nlohmann::json& predicted);

}  // namespace eulerwalk::cli
