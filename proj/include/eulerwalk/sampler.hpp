#pragma once

#include <vector>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rng.hpp"
#include "eulerwalk/rotor.hpp"

namespace eulerwalk {

/// Spanning tree oriented toward `root`: every other vertex stores the
/// direction of its parent edge. The root's entry is meaningless.
struct SpanningTree {
  VertexId root = 0;
  std::vector<Direction> parent;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(parent.size()) - 1; }
};

/// Uniform spanning tree via Wilson's loop-erased random walks.
SpanningTree sample_ust(const Lattice& lattice, VertexId root, SeededRng& rng);

/// Uniform unicycle with the chip at `chip`: a uniform spanning tree rooted
/// at the chip plus a uniformly chosen outgoing arrow at the chip.
RotorState sample_unicycle(const Lattice& lattice, VertexId chip, SeededRng& rng);

/// Checks acyclicity and that every vertex drains into the root.
bool is_spanning_tree(const SpanningTree& tree, const Lattice& lattice);

}  // namespace eulerwalk
