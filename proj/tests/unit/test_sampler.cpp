#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "eulerwalk/sampler.hpp"
#include "support.hpp"

using namespace eulerwalk;

TEST_CASE("rng determinism and streams") {
  SeededRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  int same_c = 0, same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    same_c += x == c.next_u32();
    same_d += x == d.next_u32();
  }
  CHECK(same_c < 3);
  CHECK(same_d < 3);
}

TEST_CASE("rng golden values") {
  // Reference PCG32 (pcg32_srandom(42, 54)) output.
  SeededRng rng(42, 54);
  const std::uint32_t expected[] = {0xa15c02b7, 0x7b47f409, 0xba1d3330, 0x83d2f293, 0xbfa4784b, 0xcbed606e};
  for (std::uint32_t e : expected) CHECK(rng.next_u32() == e);
}

TEST_CASE("bounded draws are in range and roughly uniform") {
  SeededRng rng(5, 0);
  std::array<int, 3> counts{};
  for (int i = 0; i < 30000; ++i) {
    const auto x = rng.below(3);
    REQUIRE(x < 3);
    ++counts[x];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 400);
}

TEST_CASE("unique spanning tree") {
  const Lattice g = Lattice::planar_grid(1, 2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    SeededRng rng(1, i);
    const SpanningTree t = sample_ust(g, 0, rng);
    CHECK(t.parent[1] == Direction::South);
    CHECK(t.edge_count() == 1);
    const RotorState s = sample_unicycle(g, 1, rng);
    CHECK(s.arrows[0] == Direction::North);
    CHECK(s.arrows[1] == Direction::South);
  }
}

TEST_CASE("spanning tree properties") {
  for (const Lattice& lat : {Lattice::torus(7, 5), Lattice::planar_grid(6, 4)}) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      SeededRng rng(9, i);
      const auto root = static_cast<VertexId>(i % lat.vertex_count());
      const SpanningTree t = sample_ust(lat, root, rng);
      CHECK(t.root == root);
      CHECK(t.edge_count() == lat.vertex_count() - 1);
      CHECK(is_spanning_tree(t, lat));
      const RotorState s = sample_unicycle(lat, root, rng);
      CHECK(s.chip == root);
      CHECK(is_unicycle(s, lat));
      CHECK(testing::oracle_unicycle(lat, s.arrows, s.chip));
    }
  }
}

TEST_CASE("is_spanning_tree rejects cycles") {
  const Lattice g = Lattice::planar_grid(2, 2);
  SpanningTree t{0, {Direction::North, Direction::West, Direction::East, Direction::West}};
  CHECK_FALSE(is_spanning_tree(t, g));  // 2 <-> 3 never reach 0
  t.parent = {Direction::North, Direction::West, Direction::South, Direction::West};
  CHECK(is_spanning_tree(t, g));
}

TEST_CASE("sampling is deterministic") {
  const Lattice t = Lattice::torus(10, 10);
  SeededRng a(77, 3), b(77, 3), c(77, 4);
  const RotorState x = sample_unicycle(t, 0, a);
  CHECK(x.same_configuration(sample_unicycle(t, 0, b)));
  CHECK_FALSE(x.same_configuration(sample_unicycle(t, 0, c)));
}

namespace {

// Pearson statistic of sampled unicycles against the enumerated support.
double chi_square(const Lattice& lat, VertexId chip, int samples, std::uint64_t seed, std::size_t& cells) {
  const auto support = testing::enumerate_unicycles(lat, chip);
  std::map<std::vector<Direction>, int> counts;
  for (const auto& a : support) counts[a] = 0;
  for (int i = 0; i < samples; ++i) {
    SeededRng rng(seed, static_cast<std::uint64_t>(i));
    const RotorState s = sample_unicycle(lat, chip, rng);
    auto it = counts.find(s.arrows);
    REQUIRE(it != counts.end());
    ++it->second;
  }
  cells = support.size();
  const double expected = static_cast<double>(samples) / static_cast<double>(cells);
  double chi2 = 0;
  for (const auto& [a, n] : counts) chi2 += (n - expected) * (n - expected) / expected;
  return chi2;
}

}  // namespace

TEST_CASE("uniform unicycles on small grids") {
  std::size_t cells = 0;
  // 0.999 quantiles of chi-square with 7 and 44 degrees of freedom.
  const double chi2_2x2 = chi_square(Lattice::planar_grid(2, 2), 0, 40000, 21, cells);
  CHECK(cells == 8);
  CHECK(chi2_2x2 < 24.32);
  const double chi2_2x3 = chi_square(Lattice::planar_grid(2, 3), 2, 60000, 22, cells);
  CHECK(cells == 45);
  CHECK(chi2_2x3 < 78.75);
}

TEST_CASE("each tree of the 4-cycle has probability 1/4") {
  const Lattice g = Lattice::planar_grid(2, 2);
  const int n = 100000;
  std::map<std::vector<Direction>, int> trees;
  for (int i = 0; i < n; ++i) {
    SeededRng rng(5, static_cast<std::uint64_t>(i));
    auto t = sample_ust(g, 0, rng);
    t.parent[0] = Direction::North;  // root entry carries no information
    ++trees[t.parent];
  }
  CHECK(trees.size() == 4);
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  for (const auto& [tree, count] : trees) CHECK(std::abs(count - n / 4.0) < 3 * sigma);
}

TEST_CASE("tree edge density on Torus(3,3)") {
  // A uniform unicycle's chip cycle is a dimer exactly when the chip arrow
  // points along the tree edge at the chip; averaging over chips gives
  // |E_T| / |E| = 8 / 18.
  const Lattice t = Lattice::torus(3, 3);
  const int n = 40000;
  int dimers = 0;
  for (int i = 0; i < n; ++i) {
    SeededRng rng(8, static_cast<std::uint64_t>(i));
    dimers += cycle_kind(sample_unicycle(t, 0, rng), t) == CycleKind::Dimer;
  }
  const double p = 4.0 / 9.0;
  CHECK(std::abs(dimers - n * p) < 3 * std::sqrt(n * p * (1 - p)));

  // Exact value over all unicycles, by enumeration.
  const auto all = testing::enumerate_unicycles(t, 0);
  std::int64_t exact_dimers = 0;
  for (const auto& a : all) exact_dimers += cycle_kind(RotorState{a, 0, {}}, t) == CycleKind::Dimer;
  CHECK(exact_dimers * 9 == static_cast<std::int64_t>(all.size()) * 4);
}
