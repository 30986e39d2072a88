#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rotor.hpp"

namespace eulerwalk {

/// Counts of (kind at t, kind at t+1) over successive recorded states.
struct PairCounts {
  std::int64_t dd = 0;
  std::int64_t dc = 0;
  std::int64_t cd = 0;
  std::int64_t cc = 0;

  void add(CycleKind first, CycleKind second) {
    if (first == CycleKind::Dimer) {
      ++(second == CycleKind::Dimer ? dd : dc);
    } else {
      ++(second == CycleKind::Dimer ? cd : cc);
    }
  }
  std::int64_t total() const { return dd + dc + cd + cc; }
  PairCounts& operator+=(const PairCounts& o) {
    dd += o.dd;
    dc += o.dc;
    cd += o.cd;
    cc += o.cc;
    return *this;
  }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Relative pair frequencies in the order dd, dc, cd, cc.
struct PairFrequencies {
  double dd = 0;
  double dc = 0;
  double cd = 0;
  double cc = 0;
};

struct TourOptions {
  bool record_kinds = true;
  bool record_delta = true;
  /// Squared unwrapped displacement r(t)^2 for t = 0..min(steps, msd_horizon).
  bool record_msd = false;
  std::int64_t msd_horizon = std::numeric_limits<std::int64_t>::max();
  /// Per-vertex rotor turn counts (equal to chip visits).
  bool track_rotors = false;
  /// Per-directed-edge traversal counts; 4 slots per vertex.
  bool track_edges = false;
  /// Reject non-unicycle starting states up front (O(|V|)).
  bool check_recurrent = true;
};

/// What a (sub-)tour saw. The recorded sequence holds the first state and
/// excludes the terminal one; a full tour therefore records m states.
struct TourLog {
  std::int64_t steps = 0;
  std::int64_t dimers = 0;
  std::int64_t contours = 0;
  PairCounts pairs;
  bool cyclic_pairs = false;
  bool truncated = false;

  std::vector<CycleKind> kinds;
  std::vector<std::int32_t> delta_trajectory;  // delta over the first t states, t = 0..steps
  std::vector<std::int64_t> msd;               // r(t)^2, t = 0..
  std::vector<std::int32_t> rotor_turns;
  std::vector<std::uint8_t> edge_traversals;

  std::int64_t delta() const { return contours - dimers; }
};

/// Raised when a tour breaks a property that holds for every valid input.
class InvariantViolation : public StateError {
 public:
  using StateError::StateError;
};

namespace detail {

class TourRecorder {
 public:
  TourRecorder(const Lattice& lattice, const TourOptions& options, const RotorState& start)
      : options_(options), origin_(start.displacement) {
    if (options_.record_delta) log_.delta_trajectory.push_back(0);
    if (options_.record_msd) log_.msd.push_back(0);
    if (options_.track_rotors) log_.rotor_turns.assign(static_cast<std::size_t>(lattice.vertex_count()), 0);
    if (options_.track_edges) log_.edge_traversals.assign(static_cast<std::size_t>(lattice.vertex_count()) * 4, 0);
  }

  void record(CycleKind kind) {
    if (log_.steps == 0) {
      first_ = kind;
    } else {
      log_.pairs.add(last_, kind);
    }
    last_ = kind;
    ++(kind == CycleKind::Dimer ? log_.dimers : log_.contours);
    if (options_.record_kinds) log_.kinds.push_back(kind);
    if (options_.record_delta) {
      log_.delta_trajectory.push_back(static_cast<std::int32_t>(log_.contours - log_.dimers));
    }
  }

  /// Performs the step for the current state and records the move.
  void step(RotorState& state, const Lattice& lattice, const RoutingOrder& order) {
    const VertexId from = state.chip;
    rotor_step(state, lattice, order);
    ++log_.steps;
    if (options_.track_rotors) ++log_.rotor_turns[static_cast<std::size_t>(from)];
    if (options_.track_edges) {
      const auto slot = static_cast<std::size_t>(from) * 4 +
                        static_cast<std::size_t>(index_of(state.arrows[static_cast<std::size_t>(from)]));
      ++log_.edge_traversals[slot];
    }
    if (options_.record_msd && log_.steps <= options_.msd_horizon) {
      log_.msd.push_back((state.displacement - origin_).norm2());
    }
  }

  TourLog finish(bool cyclic) {
    if (cyclic && log_.steps >= 2) {
      log_.pairs.add(last_, first_);
      log_.cyclic_pairs = true;
    }
    return std::move(log_);
  }

  void mark_truncated() { log_.truncated = true; }

 private:
  TourOptions options_;
  Point origin_;
  TourLog log_;
  CycleKind first_ = CycleKind::Dimer;
  CycleKind last_ = CycleKind::Dimer;
};

void require_unicycle(const RotorState& state, const Lattice& lattice);

}  // namespace detail

/// Runs exactly |E_dir| steps from a unicycle. Pairs are cyclic (the last
/// state pairs with the first). Throws InvariantViolation if the walk does
/// not close, or if tracked rotors/edges miss the Euler-tour counts.
TourLog run_euler_tour(const RotorState& initial, const Lattice& lattice, const RoutingOrder& order,
                       const TourOptions& options = {});

/// Steps `state` in place until `stop(state)` holds or `max_steps` is hit.
/// The stop predicate is consulted on every state, starting with the
/// initial one, and may therefore track incremental changes.
template <class Stop>
TourLog run_sub_tour(RotorState& state, const Lattice& lattice, const RoutingOrder& order, Stop&& stop,
                     std::int64_t max_steps, const TourOptions& options = {}) {
  if (options.check_recurrent) detail::require_unicycle(state, lattice);
  detail::TourRecorder recorder(lattice, options, state);
  std::int64_t taken = 0;
  while (!stop(static_cast<const RotorState&>(state))) {
    if (taken == max_steps) {
      recorder.mark_truncated();
      break;
    }
    recorder.record(cycle_kind(state, lattice));
    recorder.step(state, lattice, order);
    ++taken;
  }
  return recorder.finish(false);
}

/// Stop predicate matching one target configuration (arrows and chip).
///
/// Keeps a running mismatch count and updates it from the vertex the chip
/// just left, so each call costs O(1). It must observe every state of a
/// contiguous run, which run_sub_tour guarantees.
class ReachesConfiguration {
 public:
  ReachesConfiguration(std::vector<Direction> target_arrows, VertexId target_chip);

  bool operator()(const RotorState& state);

 private:
  std::vector<Direction> target_;
  VertexId target_chip_;
  std::vector<bool> matches_;
  std::int64_t mismatches_ = 0;
  VertexId previous_chip_ = -1;
};

PairFrequencies accumulate_pair_correlations(const TourLog& log);

}  // namespace eulerwalk
