#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerwalk/lattice.hpp"

namespace eulerwalk {

enum class CycleKind : std::uint8_t { Dimer = 0, Contour = 1 };
enum class Orientation : std::uint8_t { CW, CCW, Undefined };

std::string_view to_string(CycleKind k);
std::string_view to_string(Orientation o);

/// Single-chip rotor state (rho, v): one arrow per vertex plus the chip.
///
/// `displacement` accumulates the chip's unit steps without torus wrapping,
/// so it measures how far the walker has travelled since the state was made.
struct RotorState {
  std::vector<Direction> arrows;
  VertexId chip = 0;
  Point displacement{};

  /// Configuration equality: arrows and chip. Displacement is bookkeeping.
  bool same_configuration(const RotorState& other) const {
    return chip == other.chip && arrows == other.arrows;
  }
};

/// The unique directed cycle through the chip.
struct CycleInfo {
  std::vector<VertexId> vertices;  // starts at the chip, in arrow order
  std::vector<Point> points;       // unwrapped coordinates of `vertices`
  int length = 0;
  CycleKind kind = CycleKind::Dimer;
  Point winding{};                 // net torus wraps in x and y
  Orientation orientation = Orientation::Undefined;
  std::int64_t twice_area = 0;     // signed shoelace area x2, 0 unless contractible

  bool contractible() const { return winding.x == 0 && winding.y == 0; }
  /// Number of unit faces enclosed; zero when orientation is undefined.
  std::int64_t enclosed_area() const { return (twice_area < 0 ? -twice_area : twice_area) / 2; }
};

/// Checks every arrow points along an existing edge and chip is a vertex.
void validate_state(const RotorState& state, const Lattice& lattice);

/// Advance the chip's rotor to its successor, then move the chip along it.
inline void rotor_step(RotorState& state, const Lattice& lattice, const RoutingOrder& order) {
  Direction& arrow = state.arrows[static_cast<std::size_t>(state.chip)];
  arrow = lattice.rotate(order, state.chip, arrow);
  state.chip = lattice.step(state.chip, arrow);
  state.displacement += unit(arrow);
}

/// Value-returning convenience over the in-place step.
RotorState rotor_stepped(RotorState state, const Lattice& lattice, const RoutingOrder& order);

/// O(1) kind of the cycle through the chip. Requires a recurrent state.
inline CycleKind cycle_kind(const RotorState& state, const Lattice& lattice) {
  const VertexId next = lattice.step(state.chip, state.arrows[static_cast<std::size_t>(state.chip)]);
  const VertexId back = lattice.step(next, state.arrows[static_cast<std::size_t>(next)]);
  return back == state.chip ? CycleKind::Dimer : CycleKind::Contour;
}

/// Follows arrows from the chip back to the chip. Throws StateError when
/// the chip is not on a cycle (transient or corrupted state).
CycleInfo find_cycle(const RotorState& state, const Lattice& lattice);

/// Full recurrence check: one cycle in the arrow graph, reachable from
/// every vertex, with the chip on it.
bool is_unicycle(const RotorState& state, const Lattice& lattice);

/// Ray-casting containment of a lattice point strictly inside a closed
/// rectilinear lattice polygon (points on its boundary are outside).
bool strictly_inside(const std::vector<Point>& polygon, Point p);

}  // namespace eulerwalk
