#include "eulerwalk/sampler.hpp"

namespace eulerwalk {

SpanningTree sample_ust(const Lattice& lattice, VertexId root, SeededRng& rng) {
  if (!lattice.valid(root)) throw InputError("invalid root vertex " + std::to_string(root));
  const auto n = static_cast<std::size_t>(lattice.vertex_count());
  SpanningTree tree{root, std::vector<Direction>(n, Direction::North)};
  std::vector<bool> in_tree(n, false);
  in_tree[static_cast<std::size_t>(root)] = true;

  for (VertexId start = 0; start < lattice.vertex_count(); ++start) {
    // The last exit direction from each vertex is the loop-erased path.
    VertexId v = start;
    while (!in_tree[static_cast<std::size_t>(v)]) {
      const auto dirs = lattice.directions(v);
      const Direction d = dirs[rng.below(static_cast<std::uint32_t>(dirs.size()))];
      tree.parent[static_cast<std::size_t>(v)] = d;
      v = lattice.step(v, d);
    }
    for (v = start; !in_tree[static_cast<std::size_t>(v)];) {
      in_tree[static_cast<std::size_t>(v)] = true;
      v = lattice.step(v, tree.parent[static_cast<std::size_t>(v)]);
    }
  }
  return tree;
}

RotorState sample_unicycle(const Lattice& lattice, VertexId chip, SeededRng& rng) {
  SpanningTree tree = sample_ust(lattice, chip, rng);
  RotorState state;
  state.arrows = std::move(tree.parent);
  state.chip = chip;
  const auto dirs = lattice.directions(chip);
  state.arrows[static_cast<std::size_t>(chip)] = dirs[rng.below(static_cast<std::uint32_t>(dirs.size()))];
  return state;
}

bool is_spanning_tree(const SpanningTree& tree, const Lattice& lattice) {
  const auto n = static_cast<std::size_t>(lattice.vertex_count());
  if (tree.parent.size() != n || !lattice.valid(tree.root)) return false;
  for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
    if (v != tree.root && !lattice.has_direction(v, tree.parent[static_cast<std::size_t>(v)])) return false;
  }
  // 0 = unseen, 1 = on the current path, 2 = known to reach the root.
  std::vector<std::uint8_t> mark(n, 0);
  mark[static_cast<std::size_t>(tree.root)] = 2;
  std::vector<VertexId> path;
  for (VertexId s = 0; s < lattice.vertex_count(); ++s) {
    path.clear();
    VertexId v = s;
    while (mark[static_cast<std::size_t>(v)] == 0) {
      mark[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = lattice.step(v, tree.parent[static_cast<std::size_t>(v)]);
    }
    if (mark[static_cast<std::size_t>(v)] == 1) return false;
    for (VertexId u : path) mark[static_cast<std::size_t>(u)] = 2;
  }
  return true;
}

}  // namespace eulerwalk
