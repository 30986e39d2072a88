#include "eulerwalk/reversal.hpp"

#include <algorithm>

#include "eulerwalk/snapshot.hpp"

namespace eulerwalk {

namespace {

Direction direction_between(const Lattice& lattice, VertexId from, VertexId to) {
  for (Direction d : lattice.directions(from)) {
    if (lattice.step(from, d) == to) return d;
  }
  throw StateError("vertices " + std::to_string(from) + " and " + std::to_string(to) + " are not adjacent");
}

// Watches chip moves around the unit face c0 -> c1 -> c2 -> c3 -> c0 and
// records the cycle area at the first state of each stage.
class StageWatcher {
 public:
  StageWatcher(const Lattice& lattice, VertexId chip, Direction arrow) : lattice_(lattice) {
    corners_[0] = chip;
    const auto c1 = lattice.neighbor(chip, rotate_cw(arrow));
    const auto c3 = lattice.neighbor(chip, arrow);
    if (!c1 || !c3) return;
    const auto c2 = lattice.neighbor(*c1, arrow);
    if (!c2) return;
    corners_ = {chip, *c1, *c2, *c3};
    valid_ = true;
  }

  void observe(const RotorState& state) {
    if (valid_ && next_stage_ <= 3 && previous_ == corners_[next_stage_ - 1] &&
        state.chip == corners_[next_stage_]) {
      const auto cycle = find_cycle(state, lattice_);
      areas_[next_stage_ - 1] = cycle.kind == CycleKind::Contour ? cycle.enclosed_area() : 0;
      ++next_stage_;
    }
    previous_ = state.chip;
  }

  bool complete() const { return valid_ && next_stage_ == 4; }
  const std::array<std::int64_t, 3>& areas() const { return areas_; }

 private:
  const Lattice& lattice_;
  std::array<VertexId, 4> corners_{};
  std::array<std::int64_t, 3> areas_{};
  bool valid_ = false;
  int next_stage_ = 1;
  VertexId previous_ = -1;
};

}  // namespace

std::vector<Direction> reversed_cycle_arrows(const RotorState& state, const CycleInfo& cycle,
                                             const Lattice& lattice) {
  std::vector<Direction> arrows = state.arrows;
  const std::size_t n = cycle.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = cycle.vertices[i];
    const VertexId previous = cycle.vertices[(i + n - 1) % n];
    arrows[static_cast<std::size_t>(v)] = direction_between(lattice, v, previous);
  }
  return arrows;
}

std::vector<Region> classify_regions(const Lattice& lattice, const CycleInfo& cycle) {
  if (cycle.kind != CycleKind::Contour || !cycle.contractible()) {
    throw InputError("regions are defined only for contractible contours");
  }
  std::vector<Region> regions(static_cast<std::size_t>(lattice.vertex_count()), Region::External);
  for (VertexId v : cycle.vertices) regions[static_cast<std::size_t>(v)] = Region::OnCycle;

  auto [min_x, max_x] = std::minmax_element(cycle.points.begin(), cycle.points.end(),
                                            [](Point a, Point b) { return a.x < b.x; });
  auto [min_y, max_y] = std::minmax_element(cycle.points.begin(), cycle.points.end(),
                                            [](Point a, Point b) { return a.y < b.y; });
  const std::int64_t lo_x = min_x->x, hi_x = max_x->x, lo_y = min_y->y, hi_y = max_y->y;
  const std::int64_t w = lattice.width(), h = lattice.height();

  // Smallest value congruent to coord (mod period) that is >= lo.
  auto first_lift = [](std::int64_t coord, std::int64_t lo, std::int64_t period) {
    return lo + (((coord - lo) % period) + period) % period;
  };

  for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
    if (regions[static_cast<std::size_t>(v)] == Region::OnCycle) continue;
    const std::int64_t x = lattice.x_of(v), y = lattice.y_of(v);
    bool inside = false;
    if (lattice.is_torus()) {
      for (std::int64_t lx = first_lift(x, lo_x, w); lx <= hi_x && !inside; lx += w) {
        for (std::int64_t ly = first_lift(y, lo_y, h); ly <= hi_y && !inside; ly += h) {
          inside = strictly_inside(cycle.points, {lx, ly});
        }
      }
    } else {
      inside = strictly_inside(cycle.points, {x, y});
    }
    if (inside) regions[static_cast<std::size_t>(v)] = Region::Internal;
  }
  return regions;
}

ReversalReport planar_reversal_experiment(const Lattice& lattice, const RotorState& state,
                                          const RoutingOrder& order) {
  if (order.kind() != RoutingOrder::Kind::Clockwise) {
    throw InputError("contour reversal requires clockwise routing");
  }
  if (!is_unicycle(state, lattice)) throw InputError("state is not a unicycle");
  const CycleInfo cycle = find_cycle(state, lattice);
  if (cycle.kind != CycleKind::Contour || cycle.orientation != Orientation::CW) {
    throw InputError("the chip's cycle is not a contractible clockwise contour");
  }

  ReversalReport report;
  report.contour_length = cycle.length;
  report.contour_area = cycle.enclosed_area();
  report.regions = classify_regions(lattice, cycle);

  ReachesConfiguration target(reversed_cycle_arrows(state, cycle, lattice), state.chip);
  StageWatcher stages(lattice, state.chip, state.arrows[static_cast<std::size_t>(state.chip)]);
  auto stop = [&](const RotorState& s) {
    stages.observe(s);
    return target(s);
  };

  TourOptions options;
  options.record_delta = false;
  options.track_rotors = true;
  options.check_recurrent = false;
  RotorState walker = state;
  TourLog log = run_sub_tour(walker, lattice, order, stop, 4 * lattice.directed_edge_count(), options);
  if (log.truncated) {
    throw InvariantViolation("contour was not reversed within " +
                             std::to_string(4 * lattice.directed_edge_count()) +
                             " steps; start state: " + to_json(lattice, state).dump());
  }

  report.steps_taken = log.steps;
  report.open_delta = log.delta();
  report.delta = log.delta() + (cycle_kind(walker, lattice) == CycleKind::Contour ? 1 : -1);
  report.kinds = std::move(log.kinds);
  report.rotor_turns = std::move(log.rotor_turns);

  for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    switch (report.regions[i]) {
      case Region::External:
        if (report.rotor_turns[i] != 0 || walker.arrows[i] != state.arrows[i]) report.external_changed = true;
        break;
      case Region::Internal:
        if (report.rotor_turns[i] != lattice.out_degree(v)) report.internal_full_rotation = false;
        break;
      case Region::OnCycle:
        break;
    }
  }

  const CycleInfo final_cycle = find_cycle(walker, lattice);
  auto sorted = [](std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  report.cycle_reversed = final_cycle.orientation == Orientation::CCW &&
                          final_cycle.length == cycle.length &&
                          sorted(final_cycle.vertices) == sorted(cycle.vertices);
  report.stages_recorded = stages.complete();
  report.stage_areas = stages.areas();
  report.final_state = std::move(walker);
  return report;
}

}  // namespace eulerwalk
