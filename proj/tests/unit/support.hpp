#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rotor.hpp"

namespace testing {

using namespace eulerwalk;

inline RotorState make_state(std::string_view arrows, VertexId chip) {
  RotorState s;
  for (char c : arrows) s.arrows.push_back(direction_from_char(c));
  s.chip = chip;
  return s;
}

// Unit square on PlanarGrid(2,2): 0 -> 2 -> 3 -> 1 -> 0 (up, right, down,
// left), clockwise in the y-North frame.
inline RotorState unit_square_cw() { return make_state("NWES", 0); }

// Unicycle test written from the definition, without the library's walker:
// from the chip, arrows lead back to the chip, and from every vertex they
// lead to the chip.
inline bool oracle_unicycle(const Lattice& lattice, const std::vector<Direction>& arrows, VertexId chip) {
  const VertexId n = lattice.vertex_count();
  auto next = [&](VertexId v) { return *lattice.neighbor(v, arrows[static_cast<std::size_t>(v)]); };
  for (VertexId v = 0; v < n; ++v) {
    VertexId w = v;
    bool hit = false;
    for (VertexId k = 0; k < n && !hit; ++k) {
      w = next(w);
      hit = w == chip;
    }
    if (!hit) return false;
  }
  return true;
}

// Visits every arrow assignment along existing edges.
inline void for_each_configuration(const Lattice& lattice,
                                   const std::function<void(const std::vector<Direction>&)>& visit) {
  const auto n = static_cast<std::size_t>(lattice.vertex_count());
  std::vector<std::size_t> digit(n, 0);
  std::vector<Direction> arrows(n);
  for (std::size_t v = 0; v < n; ++v) arrows[v] = lattice.directions(static_cast<VertexId>(v))[0];
  while (true) {
    visit(arrows);
    std::size_t v = 0;
    for (; v < n; ++v) {
      const auto dirs = lattice.directions(static_cast<VertexId>(v));
      digit[v] = (digit[v] + 1) % dirs.size();
      arrows[v] = dirs[digit[v]];
      if (digit[v] != 0) break;
    }
    if (v == n) return;
  }
}

inline std::vector<std::vector<Direction>> enumerate_unicycles(const Lattice& lattice, VertexId chip) {
  std::vector<std::vector<Direction>> out;
  for_each_configuration(lattice, [&](const std::vector<Direction>& a) {
    if (oracle_unicycle(lattice, a, chip)) out.push_back(a);
  });
  return out;
}

}  // namespace testing
