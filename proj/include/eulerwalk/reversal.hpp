#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rotor.hpp"
#include "eulerwalk/tour.hpp"

namespace eulerwalk {

enum class Region : std::uint8_t { Internal, OnCycle, External };

/// Measurements from walking a clockwise contour C until it is reversed.
struct ReversalReport {
  /// contours - dimers over the states from (rho, v) to (rho-bar, v), both included.
  std::int64_t delta = 0;
  /// Same count with the terminal (reversed) state excluded, as in TourLog.
  std::int64_t open_delta = 0;
  std::int64_t steps_taken = 0;
  std::int64_t contour_length = 0;
  std::int64_t contour_area = 0;

  std::vector<std::int32_t> rotor_turns;
  std::vector<Region> regions;
  std::vector<CycleKind> kinds;

  bool external_changed = false;
  bool internal_full_rotation = true;
  bool cycle_reversed = false;

  /// Enclosed area of the cycle at the start of each of the three stages
  /// around the unit face to the right of the chip's arrow (0 for a dimer).
  std::array<std::int64_t, 3> stage_areas{};
  bool stages_recorded = false;

  RotorState final_state;
};

/// Arrows of `state` with the cycle `cycle` reversed.
std::vector<Direction> reversed_cycle_arrows(const RotorState& state, const CycleInfo& cycle,
                                             const Lattice& lattice);

/// Internal/on-cycle/external label for every vertex. Requires a
/// contractible contour; on the torus the test runs on every lift.
std::vector<Region> classify_regions(const Lattice& lattice, const CycleInfo& cycle);

/// Runs clockwise routing from a state whose cycle is a contractible
/// clockwise contour until the configuration with that contour reversed
/// appears. Throws InputError if the preconditions fail and
/// InvariantViolation if no reversal occurs within 4 |E_dir| steps.
ReversalReport planar_reversal_experiment(const Lattice& lattice, const RotorState& state,
                                          const RoutingOrder& order);

}  // namespace eulerwalk
