#include "eulerwalk/rotor.hpp"

#include <algorithm>

namespace eulerwalk {

std::string_view to_string(CycleKind k) { return k == CycleKind::Dimer ? "dimer" : "contour"; }

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::CW: return "cw";
    case Orientation::CCW: return "ccw";
    case Orientation::Undefined: break;
  }
  return "undefined";
}

void validate_state(const RotorState& state, const Lattice& lattice) {
  if (state.arrows.size() != static_cast<std::size_t>(lattice.vertex_count())) {
    throw InputError("state has " + std::to_string(state.arrows.size()) + " arrows, lattice has " +
                     std::to_string(lattice.vertex_count()) + " vertices");
  }
  if (!lattice.valid(state.chip)) throw InputError("chip at invalid vertex " + std::to_string(state.chip));
  for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
    if (!lattice.has_direction(v, state.arrows[static_cast<std::size_t>(v)])) {
      throw InputError("arrow at vertex " + std::to_string(v) + " points off the lattice");
    }
  }
}

RotorState rotor_stepped(RotorState state, const Lattice& lattice, const RoutingOrder& order) {
  rotor_step(state, lattice, order);
  return state;
}

CycleInfo find_cycle(const RotorState& state, const Lattice& lattice) {
  CycleInfo info;
  const VertexId start = state.chip;
  Point at{lattice.x_of(start), lattice.y_of(start)};
  const Point origin = at;

  // Dimers are about half of all states; skip the general walk for them.
  const Direction first = state.arrows[static_cast<std::size_t>(start)];
  const VertexId next = lattice.step(start, first);
  if (lattice.step(next, state.arrows[static_cast<std::size_t>(next)]) == start) {
    info.vertices = {start, next};
    info.points = {origin, origin + unit(first)};
    info.length = 2;
    info.kind = CycleKind::Dimer;
    return info;
  }

  VertexId v = start;
  const VertexId limit = lattice.vertex_count();
  do {
    if (static_cast<VertexId>(info.vertices.size()) >= limit) {
      throw StateError("chip at vertex " + std::to_string(start) + " is not on a cycle: not a unicycle");
    }
    info.vertices.push_back(v);
    info.points.push_back(at);
    const Direction d = state.arrows[static_cast<std::size_t>(v)];
    at += unit(d);
    v = lattice.step(v, d);
  } while (v != start);

  info.length = static_cast<int>(info.vertices.size());
  info.kind = info.length == 2 ? CycleKind::Dimer : CycleKind::Contour;
  const Point travelled = at - origin;
  info.winding = {travelled.x / lattice.width(), travelled.y / lattice.height()};

  if (info.kind == CycleKind::Contour && info.contractible()) {
    std::int64_t area2 = 0;
    const std::size_t n = info.points.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = info.points[i] - origin;
      const Point b = info.points[(i + 1) % n] - origin;
      area2 += a.x * b.y - b.x * a.y;
    }
    info.twice_area = area2;
    info.orientation = area2 > 0 ? Orientation::CCW : Orientation::CW;
  }
  return info;
}

bool is_unicycle(const RotorState& state, const Lattice& lattice) {
  const VertexId n = lattice.vertex_count();
  if (state.arrows.size() != static_cast<std::size_t>(n) || !lattice.valid(state.chip)) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (!lattice.has_direction(v, state.arrows[static_cast<std::size_t>(v)])) return false;
  }

  // 0 = unseen, 1 = on the current path, 2 = resolved.
  std::vector<std::uint8_t> color(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
  std::vector<VertexId> path;
  int cycles = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != 0) continue;
    path.clear();
    VertexId v = s;
    while (color[static_cast<std::size_t>(v)] == 0) {
      color[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = lattice.step(v, state.arrows[static_cast<std::size_t>(v)]);
    }
    if (color[static_cast<std::size_t>(v)] == 1) {
      ++cycles;
      for (VertexId u = v;;) {
        on_cycle[static_cast<std::size_t>(u)] = true;
        u = lattice.step(u, state.arrows[static_cast<std::size_t>(u)]);
        if (u == v) break;
      }
    }
    for (VertexId u : path) color[static_cast<std::size_t>(u)] = 2;
  }
  // With one cycle in a functional graph, every vertex drains into it.
  return cycles == 1 && on_cycle[static_cast<std::size_t>(state.chip)];
}

bool strictly_inside(const std::vector<Point>& polygon, Point p) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = polygon[i];
    const Point b = polygon[(i + 1) % n];
    const bool collinear = (b.x - a.x) * (p.y - a.y) == (b.y - a.y) * (p.x - a.x);
    if (collinear && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y)) {
      return false;
    }
    if (a.x != b.x || a.x <= p.x) continue;
    const std::int64_t lo = std::min(a.y, b.y);
    const std::int64_t hi = std::max(a.y, b.y);
    if (lo <= p.y && p.y < hi) inside = !inside;
  }
  return inside;
}

}  // namespace eulerwalk
