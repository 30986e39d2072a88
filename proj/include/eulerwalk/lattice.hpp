#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eulerwalk {

using VertexId = std::int32_t;

// Labels are fixed: the numeric value doubles as the index into the
// displacement tables below.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kAllDirections{Direction::North, Direction::East,
                                                         Direction::South, Direction::West};

constexpr int index_of(Direction d) { return static_cast<int>(d); }
constexpr int dx(Direction d) { return d == Direction::East ? 1 : d == Direction::West ? -1 : 0; }
constexpr int dy(Direction d) { return d == Direction::North ? 1 : d == Direction::South ? -1 : 0; }
constexpr Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 2) & 3);
}
// Quarter turn clockwise in the x-East / y-North frame.
constexpr Direction rotate_cw(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 1) & 3);
}

char to_char(Direction d);
Direction direction_from_char(char c);
std::string_view to_string(Direction d);

/// Cyclic order in which a rotor visits its outgoing edges.
class RoutingOrder {
 public:
  enum class Kind : std::uint8_t { Clockwise = 0, Cross = 1 };

  static RoutingOrder clockwise() { return RoutingOrder(Kind::Clockwise); }
  static RoutingOrder cross() { return RoutingOrder(Kind::Cross); }
  static RoutingOrder parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::string_view name() const;
  const std::array<Direction, 4>& sequence() const { return sequence_; }
  int position(Direction d) const { return position_[index_of(d)]; }

  /// Successor in the full four-direction cycle.
  Direction successor(Direction d) const { return sequence_[(position(d) + 1) & 3]; }

  bool operator==(const RoutingOrder& other) const { return kind_ == other.kind_; }

 private:
  explicit RoutingOrder(Kind kind);

  Kind kind_;
  std::array<Direction, 4> sequence_{};
  std::array<int, 4> position_{};
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  Point& operator+=(Point o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend Point operator+(Point a, Point b) { return a += b; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(Point, Point) = default;
  std::int64_t norm2() const { return x * x + y * y; }
};

constexpr Point unit(Direction d) { return {dx(d), dy(d)}; }

/// Raised for malformed inputs: bad vertex ids, sizes, directions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a state no longer satisfies a structural invariant.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Square lattice: an MxN torus or a bounded Lx x Ly planar grid.
///
/// Vertex ids are row-major, id = x + width * y, with x growing East and
/// y growing North. Neighbor and rotor-successor tables are built once at
/// construction; the object is immutable afterwards.
class Lattice {
 public:
  enum class Topology : std::uint8_t { Torus, PlanarGrid };

  static Lattice torus(int m, int n);
  static Lattice planar_grid(int lx, int ly);

  Topology topology() const { return topology_; }
  bool is_torus() const { return topology_ == Topology::Torus; }
  int width() const { return width_; }
  int height() const { return height_; }
  VertexId vertex_count() const { return static_cast<VertexId>(width_) * height_; }

  /// Sum of out-degrees, i.e. the number of directed edges (length of an Euler tour).
  std::int64_t directed_edge_count() const { return directed_edges_; }
  std::int64_t undirected_edge_count() const { return directed_edges_ / 2; }

  VertexId vertex_at(int x, int y) const;
  int x_of(VertexId v) const { return v % width_; }
  int y_of(VertexId v) const { return v / width_; }
  bool valid(VertexId v) const { return v >= 0 && v < vertex_count(); }

  /// Checked lookup; absent when the step leaves a planar grid.
  std::optional<VertexId> neighbor(VertexId v, Direction d) const;
  bool has_direction(VertexId v, Direction d) const {
    return neighbors_[slot(v, d)] >= 0;
  }
  int out_degree(VertexId v) const { return static_cast<int>(directions_[v].size()); }
  /// Existing outgoing directions at v, in North/East/South/West order.
  std::span<const Direction> directions(VertexId v) const { return directions_[v]; }

  /// Next existing direction after `current` in the cyclic routing order.
  /// Throws StateError if `current` is not an outgoing direction at v.
  Direction next_direction(const RoutingOrder& order, VertexId v, Direction current) const;

  /// Unchecked hot-path variants; callers guarantee validity.
  VertexId step(VertexId v, Direction d) const { return neighbors_[slot(v, d)]; }
  Direction rotate(const RoutingOrder& order, VertexId v, Direction current) const {
    return successor_[static_cast<int>(order.kind())][slot(v, current)];
  }

  std::string describe() const;

 private:
  Lattice(Topology topology, int width, int height);
  static std::size_t slot(VertexId v, Direction d) {
    return static_cast<std::size_t>(v) * 4 + static_cast<std::size_t>(index_of(d));
  }

  Topology topology_;
  int width_;
  int height_;
  std::int64_t directed_edges_ = 0;
  std::vector<VertexId> neighbors_;               // 4 slots per vertex, -1 if absent
  std::array<std::vector<Direction>, 2> successor_;  // per routing kind, 4 slots per vertex
  std::vector<std::vector<Direction>> directions_;
};

}  // namespace eulerwalk
