#include <gtest/gtest.h>

#include <algorithm>

#include "firefight/generator.hpp"
#include "firefight/separator.hpp"
#include "support.hpp"

using namespace firefight;

namespace {

const Adjacency kK4 = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};

void expect_closed_cycle(const RotationGraph& g, const std::vector<VertexId>& c) {
  ASSERT_GE(c.size(), 3u);
  auto sorted = c;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
  }
}

std::vector<Triangulation> corpus() {
  std::vector<Triangulation> out;
  for (int n : {6, 11, 18, 27, 50}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      out.push_back(gen_apollonian(n, seed));
      out.push_back(gen_flip(n, seed, 4 * n));
    }
  }
  out.push_back(Triangulation::from(gen_named("octahedron")));
  out.push_back(Triangulation::from(gen_named("icosahedron")));
  return out;
}

}  // namespace

TEST(Bfs, K4IsAStar) {
  const auto g = RotationGraph::build(4, kK4);
  const auto t = bfs_tree(g, 0);
  EXPECT_EQ(t.dist, (std::vector<int>{0, 1, 1, 1}));
  EXPECT_FALSE(t.parent[0].has_value());
  for (VertexId v = 1; v < 4; ++v) EXPECT_EQ(t.parent[v], 0);
}

TEST(Bfs, OctahedronAntipode) {
  const auto g = gen_named("octahedron");
  const auto t = bfs_tree(g, 0);
  EXPECT_EQ(t.dist, (std::vector<int>{0, 1, 1, 1, 1, 2}));
}

TEST(Bfs, PathFromEnd) {
  const auto g = RotationGraph::build(5, {{1}, {0, 2}, {1, 3}, {2, 4}, {3}});
  EXPECT_EQ(bfs_tree(g, 0).dist, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(BfsProperty, DistancesAndParents) {
  for (const auto& g : corpus()) {
    for (VertexId r = 0; r < g.vertex_count(); r += 3) {
      const auto t = bfs_tree(g, r);
      EXPECT_EQ(t.dist, ref::bfs_dist(g.rotations(), r));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == r) continue;
        ASSERT_TRUE(t.parent[v].has_value());
        EXPECT_TRUE(g.has_edge(v, *t.parent[v]));
        EXPECT_EQ(t.dist[*t.parent[v]], t.dist[v] - 1);
      }
    }
  }
}

TEST(FundamentalCycle, K4Triangle) {
  const auto g = RotationGraph::build(4, kK4);
  const auto t = bfs_tree(g, 0);
  EXPECT_EQ(fundamental_cycle(g, t, {1, 2}), (std::vector<VertexId>{0, 1, 2}));
  try {
    fundamental_cycle(g, t, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EdgeInTree);
  }
}

TEST(FundamentalCycle, SiblingsCloseATriangleThroughRoot) {
  const auto g = gen_named("icosahedron");
  const auto t = bfs_tree(g, 0);
  for (const auto& e : g.edges()) {
    if (t.is_tree_edge(e.first, e.second)) continue;
    if (t.dist[e.first] == 1 && t.dist[e.second] == 1) {
      const auto c = fundamental_cycle(g, t, e);
      ASSERT_EQ(c.size(), 3u);
      EXPECT_EQ(c[0], 0);
    }
  }
}

TEST(FundamentalCycle, OctahedronThroughAntipode) {
  // From root 0 the antipode 5 hangs under 1; edge (3, 5) closes 0-1-5-3.
  const auto g = gen_named("octahedron");
  const auto t = bfs_tree(g, 0);
  ASSERT_EQ(t.parent[5], 1);
  const auto c = fundamental_cycle(g, t, {3, 5});
  EXPECT_EQ(c.front(), 0);
  auto s = c;
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (std::vector<VertexId>{0, 1, 3, 5}));
  expect_closed_cycle(g, c);
}

TEST(FundamentalCycleProperty, ClosedSimpleCycles) {
  for (const auto& g : corpus()) {
    const auto t = bfs_tree(g, g.vertex_count() / 2);
    for (const auto& e : g.edges()) {
      if (t.is_tree_edge(e.first, e.second)) continue;
      const auto c = fundamental_cycle(g, t, e);
      expect_closed_cycle(g, c);
      EXPECT_LE(t.dist[c.front()], t.dist[e.first]);
    }
  }
}

TEST(CycleSides, K4) {
  const auto g = RotationGraph::build(4, kK4);
  const auto s = cycle_sides(g, {0, 1, 2});
  EXPECT_EQ(s.inside.size() + s.outside.size(), 1u);
  EXPECT_EQ(std::min(s.inside.size(), s.outside.size()), 0u);
}

TEST(CycleSides, OctahedronTriangle) {
  const auto g = gen_named("octahedron");
  const auto s = cycle_sides(g, {0, 1, 2});
  EXPECT_EQ(std::min(s.inside.size(), s.outside.size()), 0u);
  EXPECT_EQ(std::max(s.inside.size(), s.outside.size()), 3u);
}

TEST(CycleSides, OuterBoundary) {
  const auto g = gen_apollonian(20, 3);
  const auto s = cycle_sides(g, {0, 1, 2});
  EXPECT_EQ(s.inside.size(), 17u);
  EXPECT_TRUE(s.outside.empty());
}

TEST(CycleSides, RejectsNonCycle) {
  const auto g = gen_named("octahedron");
  try {
    cycle_sides(g, {0, 5, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACycle);
  }
}

TEST(Balanced, K4AnyEdge) {
  const auto g = Triangulation::from(RotationGraph::build(4, kK4));
  const auto t = bfs_tree(g, 0);
  const auto table = dual_tree_side_counts(g, t);
  EXPECT_EQ(table.size(), 3u);
  for (const auto& s : table) EXPECT_TRUE(is_balanced(s, 4));
  const auto fc = find_balanced_cycle(g, t);
  EXPECT_EQ(fc.cycle.size(), 3u);
}

TEST(Balanced, Octahedron) {
  // The 4-cycle through the antipode (sides 1 and 1) beats the triangles
  // (sides 0 and 3) on max min(|C u in|, |C u out|).
  const auto g = Triangulation::from(gen_named("octahedron"));
  for (VertexId r = 0; r < 6; ++r) {
    const auto t = bfs_tree(g, r);
    const auto table = naive_side_counts(g, t);
    EXPECT_EQ(table.size(), 7u);
    const auto fc = find_balanced_cycle(g, t);
    EXPECT_LT(3 * fc.inside.size(), 12u);
    EXPECT_LT(3 * fc.outside.size(), 12u);
    EXPECT_EQ(fc.cycle.size(), 4u);
    EXPECT_EQ(fc.inside.size(), 1u);
    EXPECT_EQ(fc.outside.size(), 1u);
  }
}

TEST(BalancedProperty, TieBreakAgainstNaiveTable) {
  for (const auto& g : corpus()) {
    const int n = g.vertex_count();
    for (VertexId r = 0; r < n; r += 4) {
      const auto t = bfs_tree(g, r);
      int best = -1;
      EdgeId best_edge = -1;
      for (const auto& s : naive_side_counts(g, t)) {
        if (3 * s.inside >= 2 * n || 3 * s.outside >= 2 * n) continue;
        const int score = s.cycle_length + std::min(s.inside, s.outside);
        if (score > best) {
          best = score;
          best_edge = s.edge;
        }
      }
      const auto fc = find_balanced_cycle(g, t);
      EXPECT_EQ(fc.nontree_edge, g.edges()[best_edge]);
      EXPECT_EQ(std::min(fc.with_inside(), fc.with_outside()), best);
    }
  }
}

TEST(Balanced, IcosahedronEveryRoot) {
  const auto g = Triangulation::from(gen_named("icosahedron"));
  for (VertexId r = 0; r < 12; ++r) {
    const auto fc = find_balanced_cycle(g, bfs_tree(g, r));
    EXPECT_LT(fc.inside.size(), 8u);
    EXPECT_LT(fc.outside.size(), 8u);
  }
}

TEST(SeparatorProperty, DualTreeMatchesNaiveScan) {
  for (const auto& g : corpus()) {
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      const auto t = bfs_tree(g, r);
      const auto dp = dual_tree_side_counts(g, t);
      const auto naive = naive_side_counts(g, t);
      ASSERT_EQ(dp.size(), naive.size());
      ASSERT_EQ(static_cast<int>(dp.size()), g.edge_count() - (g.vertex_count() - 1));
      for (std::size_t i = 0; i < dp.size(); ++i) {
        EXPECT_EQ(dp[i].edge, naive[i].edge);
        EXPECT_EQ(dp[i].cycle_length, naive[i].cycle_length);
        EXPECT_EQ(dp[i].inside, naive[i].inside);
        EXPECT_EQ(dp[i].outside, naive[i].outside);
      }
    }
  }
}

TEST(SeparatorProperty, BalancedAndLevelBound) {
  for (const auto& g : corpus()) {
    const int n = g.vertex_count();
    for (VertexId r = 0; r < n; ++r) {
      const auto t = bfs_tree(g, r);
      const auto fc = find_balanced_cycle(g, t);
      EXPECT_LT(3 * static_cast<int>(fc.inside.size()), 2 * n);
      EXPECT_LT(3 * static_cast<int>(fc.outside.size()), 2 * n);
      EXPECT_EQ(fc.cycle.size() + fc.inside.size() + fc.outside.size(),
                static_cast<std::size_t>(n));
      for (int count : level_histogram(fc.cycle, t)) EXPECT_LE(count, 2);
      const bool on = std::find(fc.cycle.begin(), fc.cycle.end(), r) != fc.cycle.end();
      EXPECT_EQ(on, fc.root_place == RootPlace::OnCycle);
      if (fc.root_place == RootPlace::Inside) {
        EXPECT_TRUE(std::binary_search(fc.inside.begin(), fc.inside.end(), r));
      }
      const auto sides = cycle_sides(g, fc.cycle);
      EXPECT_EQ(sides.inside, fc.inside);
      EXPECT_EQ(sides.outside, fc.outside);
    }
  }
}
