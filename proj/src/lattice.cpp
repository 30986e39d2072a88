#include "eulerwalk/lattice.hpp"

#include <sstream>

namespace eulerwalk {

char to_char(Direction d) {
  static constexpr char kChars[] = {'N', 'E', 'S', 'W'};
  return kChars[index_of(d)];
}

Direction direction_from_char(char c) {
  switch (c) {
    case 'N': return Direction::North;
    case 'E': return Direction::East;
    case 'S': return Direction::South;
    case 'W': return Direction::West;
    default: break;
  }
  throw InputError(std::string("unknown direction character '") + c + "'");
}

std::string_view to_string(Direction d) {
  static constexpr std::string_view kNames[] = {"North", "East", "South", "West"};
  return kNames[index_of(d)];
}

RoutingOrder::RoutingOrder(Kind kind) : kind_(kind) {
  using enum Direction;
  sequence_ = kind == Kind::Clockwise ? std::array{North, East, South, West}
                                      : std::array{North, South, East, West};
  for (int i = 0; i < 4; ++i) position_[index_of(sequence_[i])] = i;
}

RoutingOrder RoutingOrder::parse(std::string_view name) {
  if (name == "clockwise") return clockwise();
  if (name == "cross") return cross();
  throw InputError("unknown routing order '" + std::string(name) + "' (expected clockwise|cross)");
}

std::string_view RoutingOrder::name() const {
  return kind_ == Kind::Clockwise ? "clockwise" : "cross";
}

Lattice Lattice::torus(int m, int n) {
  // Smaller tori would carry parallel edges between the same two vertices.
  if (m < 3 || n < 3) throw InputError("torus requires M >= 3 and N >= 3");
  return Lattice(Topology::Torus, m, n);
}

Lattice Lattice::planar_grid(int lx, int ly) {
  if (lx < 1 || ly < 1) throw InputError("planar grid requires Lx >= 1 and Ly >= 1");
  if (static_cast<std::int64_t>(lx) * ly < 2) throw InputError("planar grid needs at least two vertices");
  return Lattice(Topology::PlanarGrid, lx, ly);
}

Lattice::Lattice(Topology topology, int width, int height)
    : topology_(topology), width_(width), height_(height) {
  const auto count = static_cast<std::size_t>(vertex_count());
  neighbors_.assign(count * 4, -1);
  directions_.resize(count);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const int x = x_of(v);
    const int y = y_of(v);
    for (Direction d : kAllDirections) {
      int nx = x + dx(d);
      int ny = y + dy(d);
      if (topology_ == Topology::Torus) {
        nx = (nx + width_) % width_;
        ny = (ny + height_) % height_;
      } else if (nx < 0 || nx >= width_ || ny < 0 || ny >= height_) {
        continue;
      }
      neighbors_[slot(v, d)] = nx + width_ * ny;
      directions_[v].push_back(d);
    }
    directed_edges_ += static_cast<std::int64_t>(directions_[v].size());
  }

  for (auto kind : {RoutingOrder::Kind::Clockwise, RoutingOrder::Kind::Cross}) {
    const RoutingOrder order =
        kind == RoutingOrder::Kind::Clockwise ? RoutingOrder::clockwise() : RoutingOrder::cross();
    auto& table = successor_[static_cast<int>(kind)];
    table.assign(count * 4, Direction::North);
    for (VertexId v = 0; v < vertex_count(); ++v) {
      for (Direction d : kAllDirections) {
        Direction next = order.successor(d);
        while (!has_direction(v, next)) next = order.successor(next);
        table[slot(v, d)] = next;
      }
    }
  }
}

VertexId Lattice::vertex_at(int x, int y) const {
  if (x < 0 || x >= width_ || y < 0 || y >= height_) {
    throw InputError("coordinates (" + std::to_string(x) + "," + std::to_string(y) +
                     ") outside " + describe());
  }
  return x + width_ * y;
}

std::optional<VertexId> Lattice::neighbor(VertexId v, Direction d) const {
  if (!valid(v)) throw InputError("invalid vertex id " + std::to_string(v));
  const VertexId w = neighbors_[slot(v, d)];
  if (w < 0) return std::nullopt;
  return w;
}

Direction Lattice::next_direction(const RoutingOrder& order, VertexId v, Direction current) const {
  if (!valid(v)) throw InputError("invalid vertex id " + std::to_string(v));
  if (!has_direction(v, current)) {
    throw StateError("direction " + std::string(to_string(current)) + " is not available at vertex " +
                     std::to_string(v));
  }
  return rotate(order, v, current);
}

std::string Lattice::describe() const {
  std::ostringstream out;
  out << (is_torus() ? "torus " : "grid ") << width_ << 'x' << height_;
  return out.str();
}

}  // namespace eulerwalk
