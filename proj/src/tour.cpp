#include "eulerwalk/tour.hpp"

#include "eulerwalk/snapshot.hpp"

namespace eulerwalk {

namespace detail {

void require_unicycle(const RotorState& state, const Lattice& lattice) {
  if (!is_unicycle(state, lattice)) {
    throw InputError("starting state is not a unicycle: " + to_json(lattice, state).dump());
  }
}

}  // namespace detail

TourLog run_euler_tour(const RotorState& initial, const Lattice& lattice, const RoutingOrder& order,
                       const TourOptions& options) {
  if (options.check_recurrent) detail::require_unicycle(initial, lattice);
  RotorState state = initial;
  detail::TourRecorder recorder(lattice, options, state);
  const std::int64_t m = lattice.directed_edge_count();
  for (std::int64_t t = 0; t < m; ++t) {
    recorder.record(cycle_kind(state, lattice));
    recorder.step(state, lattice, order);
  }
  TourLog log = recorder.finish(true);

  if (!state.same_configuration(initial)) {
    throw InvariantViolation("Euler tour did not close after " + std::to_string(m) +
                             " steps; start state: " + to_json(lattice, initial).dump());
  }
  if (options.track_rotors) {
    for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
      if (log.rotor_turns[static_cast<std::size_t>(v)] != lattice.out_degree(v)) {
        throw InvariantViolation("rotor at vertex " + std::to_string(v) + " turned " +
                                 std::to_string(log.rotor_turns[static_cast<std::size_t>(v)]) +
                                 " times; start state: " + to_json(lattice, initial).dump());
      }
    }
  }
  if (options.track_edges) {
    for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
      for (Direction d : lattice.directions(v)) {
        const auto count = log.edge_traversals[static_cast<std::size_t>(v) * 4 + static_cast<std::size_t>(index_of(d))];
        if (count != 1) {
          throw InvariantViolation("edge " + std::to_string(v) + to_char(d) + " traversed " +
                                   std::to_string(count) + " times; start state: " +
                                   to_json(lattice, initial).dump());
        }
      }
    }
  }
  return log;
}

ReachesConfiguration::ReachesConfiguration(std::vector<Direction> target_arrows, VertexId target_chip)
    : target_(std::move(target_arrows)), target_chip_(target_chip) {}

bool ReachesConfiguration::operator()(const RotorState& state) {
  if (previous_chip_ < 0) {
    if (state.arrows.size() != target_.size()) throw InputError("target and state sizes differ");
    matches_.resize(target_.size());
    for (std::size_t v = 0; v < target_.size(); ++v) {
      matches_[v] = state.arrows[v] == target_[v];
      if (!matches_[v]) ++mismatches_;
    }
  } else {
    const auto v = static_cast<std::size_t>(previous_chip_);
    const bool now = state.arrows[v] == target_[v];
    if (now != matches_[v]) {
      mismatches_ += now ? -1 : 1;
      matches_[v] = now;
    }
  }
  previous_chip_ = state.chip;
  return mismatches_ == 0 && state.chip == target_chip_;
}

PairFrequencies accumulate_pair_correlations(const TourLog& log) {
  if (log.steps < 2) throw InputError("pair correlations need at least two recorded states");
  const auto total = static_cast<double>(log.pairs.total());
  return {static_cast<double>(log.pairs.dd) / total, static_cast<double>(log.pairs.dc) / total,
          static_cast<double>(log.pairs.cd) / total, static_cast<double>(log.pairs.cc) / total};
}

}  // namespace eulerwalk
