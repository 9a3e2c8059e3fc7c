#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "firefight/generator.hpp"
#include "firefight/strategies.hpp"
#include "support.hpp"

using namespace firefight;

namespace {

const BudgetSchedule k32{3, 2};

const std::vector<Triangulation>& corpus() {
  static const auto graphs = [] {
    std::vector<Triangulation> out;
    for (int n : {18, 24, 30, 40, 50, 64, 80}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        out.push_back(gen_apollonian(n, seed));
        out.push_back(gen_flip(n, seed, 3 * n));
      }
    }
    return out;
  }();
  return graphs;
}

// Every increasing path from the sources, by exhaustive depth-first search.
bool brute_increasing_path(const Adjacency& g, const std::vector<int>& dist,
                           const std::vector<VertexId>& sources, const std::vector<char>& allowed,
                           const std::vector<char>& target, std::size_t& shortest) {
  bool found = false;
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId v, std::size_t len) {
    if (target[v]) {
      found = true;
      shortest = std::min(shortest, len);
      return;
    }
    for (VertexId w : g[v]) {
      if (allowed[w] && dist[w] == dist[v] + 1) walk(w, len + 1);
    }
  };
  for (VertexId s : sources) {
    if (allowed[s]) walk(s, 1);
  }
  return found;
}

void expect_schedule_legal(const RotationGraph& g, const StrategyOutcome& out,
                           const BudgetSchedule& b) {
  for (std::size_t t = 0; t < out.schedule.rounds.size(); ++t) {
    EXPECT_LE(static_cast<int>(out.schedule.rounds[t].size()), b.at(static_cast<int>(t) + 1));
  }
  const auto again = simulate(g.rotations(), out.root, out.schedule, b);
  EXPECT_EQ(again.saved, out.saved);
  EXPECT_EQ(again.burned_final, out.burned_final);
}

}  // namespace

TEST(AllNeighbors, K4) {
  const auto g = gen_apollonian(4, 0);
  for (VertexId r = 0; r < 4; ++r) {
    const auto out_res = strat_all_neighbors(g, r, k32);
    const auto* out = outcome_of(out_res);
    ASSERT_NE(out, nullptr);
    EXPECT_EQ(out->saved, 3);
  }
}

TEST(AllNeighbors, DegreeThreeRootSavesRest) {
  const auto g = gen_apollonian(30, 1);
  int checked = 0;
  for (VertexId r = 0; r < 30; ++r) {
    if (g.degree(r) != 3) continue;
    const auto out_res = strat_all_neighbors(g, r, k32);
    const auto* out = outcome_of(out_res);
    ASSERT_NE(out, nullptr);
    EXPECT_EQ(out->saved, 29);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(AllNeighbors, OctahedronInapplicable) {
  const auto res = strat_all_neighbors(gen_named("octahedron"), 0, k32);
  EXPECT_TRUE(std::holds_alternative<Inapplicable>(res));
}

TEST(Separator, DegreeFourRootsAtFifty) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = gen_apollonian(50, seed);
    for (VertexId r = 0; r < 50; ++r) {
      if (g.degree(r) != 4) continue;
      const auto out_res = strat_separator(g, r, k32);
      const auto* out = outcome_of(out_res);
      ASSERT_NE(out, nullptr) << "seed " << seed << " root " << r;
      EXPECT_GE(out->saved, 16);
      ASSERT_TRUE(out->claim.has_value());
      EXPECT_TRUE(out->claim->met);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Separator, SmallGraphMakesNoRateClaim) {
  const auto g = Triangulation::from(gen_named("octahedron"));
  for (VertexId r = 0; r < 6; ++r) {
    const auto res = strat_separator(g, r, k32);
    if (const auto* out = outcome_of(res)) {
      EXPECT_FALSE(out->claim.has_value());
      const auto sep = separate_at(g, r);
      EXPECT_GE(out->saved, static_cast<int>(std::min(sep.cycle.inside.size(),
                                                      sep.cycle.outside.size())));
    }
  }
}

TEST(Separator, RootOffCycleUsesTwoInRoundOne) {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 6 && found == 0; ++seed) {
    const auto g = gen_flip(30, seed, 90);
    for (VertexId r = 0; r < 30; ++r) {
      const auto sep = separate_at(g, r);
      if (sep.cycle.root_place == RootPlace::OnCycle) continue;
      const auto out_res = strat_separator(g, sep, k32);
      const auto* out = outcome_of(out_res);
      ASSERT_NE(out, nullptr);
      EXPECT_EQ(out->schedule.rounds.front().size(), 2u);
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(SeparatorProperty, ProtectsBeforeFireArrives) {
  for (const auto& g : corpus()) {
    for (VertexId r = 0; r < g.vertex_count(); r += 2) {
      const auto sep = separate_at(g, r);
      const auto out_res = strat_separator(g, sep, k32);
      const auto* out = outcome_of(out_res);
      if (!out) continue;
      expect_schedule_legal(g, *out, k32);
      const auto when = protection_rounds(out->schedule, g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (when[v] > 0) EXPECT_LE(when[v], sep.tree.dist[v]);
      }
      for (VertexId v : sep.cycle.cycle) {
        if (v != r) EXPECT_GT(when[v], 0);
      }
    }
  }
}

TEST(IncreasingPath, SingleStep) {
  const Adjacency g = {{1}, {0, 2}, {1}};
  const auto p = find_increasing_path(g, {0, 1, 2}, {1}, {1, 1, 1}, {0, 0, 1});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (std::vector<VertexId>{1, 2}));
}

TEST(IncreasingPath, EmptySources) {
  const Adjacency g = {{1}, {0, 2}, {1}};
  EXPECT_FALSE(find_increasing_path(g, {0, 1, 2}, {}, {1, 1, 1}, {0, 0, 1}).has_value());
}

TEST(IncreasingPath, PocketNeverReachesCycle) {
  // From the octahedron's antipode every step leads back toward the root, so
  // the ring around the root is out of reach.
  const auto g = gen_named("octahedron").rotations();
  const auto dist = ref::bfs_dist(g, 0);
  const std::vector<VertexId> sources{5};
  const std::vector<char> target{0, 1, 1, 1, 1, 0};
  const std::vector<char> allowed(6, 1);
  std::size_t shortest = 7;
  EXPECT_FALSE(brute_increasing_path(g, dist, sources, allowed, target, shortest));
  EXPECT_FALSE(find_increasing_path(g, dist, sources, allowed, target).has_value());
}

TEST(IncreasingPathProperty, MatchesExhaustiveSearch) {
  Rng rng(17);
  for (const auto& t : corpus()) {
    const auto& g = t.rotations();
    const int n = t.vertex_count();
    const auto dist = ref::bfs_dist(g, static_cast<VertexId>(rng.below(n)));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<VertexId> sources;
      std::vector<char> allowed(n, 0), target(n, 0);
      for (VertexId v = 0; v < n; ++v) {
        allowed[v] = rng.below(4) != 0;
        if (rng.below(8) == 0) {
          sources.push_back(v);
          allowed[v] = 1;
        } else if (rng.below(6) == 0) {
          target[v] = 1;
          allowed[v] = 1;
        }
      }
      std::size_t shortest = n + 1;
      const bool exists = brute_increasing_path(g, dist, sources, allowed, target, shortest);
      const auto p = find_increasing_path(g, dist, sources, allowed, target);
      ASSERT_EQ(p.has_value(), exists);
      if (!p) continue;
      EXPECT_EQ(p->size(), shortest);
      EXPECT_TRUE(std::find(sources.begin(), sources.end(), p->front()) != sources.end());
      EXPECT_TRUE(target[p->back()]);
      for (std::size_t i = 1; i < p->size(); ++i) {
        EXPECT_EQ(dist[(*p)[i]], dist[(*p)[i - 1]] + 1);
        EXPECT_TRUE(t.has_edge((*p)[i], (*p)[i - 1]));
        EXPECT_TRUE(allowed[(*p)[i]]);
      }
    }
  }
}

TEST(Deg67, RequiresDegreeSixOrSeven) {
  const auto g = Triangulation::from(gen_named("octahedron"));
  try {
    analyze_deg67(g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadDegree);
  }
}

TEST(Deg67Corpus, CasesBehaveAsDescribed) {
  int side_light = 0, case1 = 0, case1_saved = 0, case2 = 0;
  std::vector<std::string> anomalies;
  const StrategyOptions lenient{false, &anomalies};
  for (const auto& g : corpus()) {
    const int n = g.vertex_count();
    for (VertexId r = 0; r < n; ++r) {
      if (g.degree(r) != 6 && g.degree(r) != 7) continue;
      const auto a = analyze_deg67(g, r);
      const bool on = a.sep.cycle.root_place == RootPlace::OnCycle;
      if (!on || a.inside_neighbors <= 1 || a.outside_neighbors <= 1) {
        EXPECT_EQ(a.kind, Deg67Case::SideLight);
      }
      const auto res = strat_deg67(g, a, k32, lenient);
      switch (a.kind) {
        case Deg67Case::SideLight: {
          ++side_light;
          if (const auto* out = std::get_if<StrategyOutcome>(&res)) {
            EXPECT_GT(3 * out->saved, n - 3);
          }
          break;
        }
        case Deg67Case::Case1: {
          ++case1;
          ASSERT_FALSE(a.path.empty());
          EXPECT_TRUE(a.path.front() == a.u || a.path.front() == a.v);
          const auto& cyc = a.sep.cycle.cycle;
          EXPECT_NE(std::find(cyc.begin(), cyc.end(), a.path.back()), cyc.end());
          for (std::size_t i = 1; i < a.path.size(); ++i) {
            EXPECT_EQ(a.sep.tree.dist[a.path[i]], a.sep.tree.dist[a.path[i - 1]] + 1);
          }
          if (const auto* out = std::get_if<StrategyOutcome>(&res)) {
            ++case1_saved;
            const bool bound = g.degree(r) == 6 ? 4 * out->saved > n - 4 : 6 * out->saved > n - 6;
            EXPECT_TRUE(bound) << "root " << r;
          }
          break;
        }
        case Deg67Case::Case2: {
          ++case2;
          ASSERT_TRUE(std::holds_alternative<Fallback>(res));
          const auto& fb = std::get<Fallback>(res);
          EXPECT_EQ(fb.uv_adjacent, g.has_edge(fb.u, fb.v));
          EXPECT_LT(fb.u, fb.v);
          EXPECT_GE(strat_greedy(g.rotations(), r, k32).saved, 3);
          break;
        }
      }
    }
  }
  EXPECT_GT(side_light, 0);
  EXPECT_GT(case1, 0);
  EXPECT_GT(case1_saved, 0);
  RecordProperty("case2_roots", case2);
  for (const auto& line : anomalies) std::cout << "anomaly: " << line << '\n';
}

TEST(Case2ViaNeighbor, NoCertifyingNeighbor) {
  const auto g = Triangulation::from(gen_named("octahedron"));
  EXPECT_TRUE(std::holds_alternative<Inapplicable>(strat_case2_via_neighbor(g, 0, k32)));
}

TEST(Case2ViaNeighbor, CertifiedVerticesSaveAThird) {
  std::vector<std::string> anomalies;
  const StrategyOptions lenient{false, &anomalies};
  int certified = 0;
  for (const auto& g : corpus()) {
    Portfolio p(g, lenient);
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      if (g.degree(r) != 6 && g.degree(r) != 7) continue;
      const auto& a = p.deg67(r);
      if (a.kind != Deg67Case::Case2) continue;
      for (VertexId w : {a.u, a.v}) {
        const auto res = p.case2_via_neighbor(w, k32);
        if (const auto* out = outcome_of(res)) {
          ++certified;
          EXPECT_GT(3 * out->saved, g.vertex_count());
          expect_schedule_legal(g, *out, k32);
        }
      }
    }
  }
  RecordProperty("certified", certified);
  RecordProperty("discarded", static_cast<int>(anomalies.size()));
}

TEST(Greedy, Octahedron) {
  const auto g = gen_named("octahedron").rotations();
  for (VertexId r = 0; r < 6; ++r) EXPECT_EQ(strat_greedy(g, r, k32).saved, 4);
}

TEST(Greedy, StarCenter) {
  const Adjacency star = {{1, 2, 3, 4, 5}, {0}, {0}, {0}, {0}, {0}};
  EXPECT_EQ(strat_greedy(star, 0, {1, 1}).saved, 1);
}

TEST(BestOf, DegreeThreeRoot) {
  const auto g = gen_apollonian(30, 2);
  for (VertexId r = 0; r < 30; ++r) {
    if (g.degree(r) > 3) continue;
    const auto out = best_of(g, r, k32);
    EXPECT_EQ(out.saved, 29);
    EXPECT_EQ(out.strategy_tag, "all_neighbors");
  }
}

TEST(BestOf, HighDegreeRootsStillSaveThree) {
  int checked = 0;
  for (const auto& g : corpus()) {
    Portfolio p(g, {false, nullptr});
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      if (g.degree(r) < 8) continue;
      EXPECT_GE(p.best_of(r, k32).saved, 3);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(BestOfProperty, DominatesEveryStrategy) {
  for (std::size_t i = 0; i < corpus().size(); i += 5) {
    const auto& g = corpus()[i];
    Portfolio p(g, {false, nullptr});
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      const auto best = p.best_of(r, k32);
      expect_schedule_legal(g, best, k32);
      EXPECT_GE(best.saved, strat_greedy(g.rotations(), r, k32).saved);
      const auto sep_res = p.separator(r, k32);
      if (const auto* s = outcome_of(sep_res)) EXPECT_GE(best.saved, s->saved);
      const auto all_res = strat_all_neighbors(g, r, k32);
      if (const auto* s = outcome_of(all_res)) {
        EXPECT_GE(best.saved, s->saved);
      }
      EXPECT_EQ(best.saved, best_of(g, r, k32, {false, nullptr}).saved);
    }
  }
}

TEST(BestOf, NonTriangulationUsesSimpleStrategies) {
  const auto g = gen_named("k2n", 4);
  const auto out = best_of(g, 0, {1, 1});
  EXPECT_TRUE(out.strategy_tag == "all_neighbors" || out.strategy_tag == "greedy");
}

TEST(ProtectionRounds, Indexing) {
  const ProtectionSchedule s{{{1, 2}, {}, {4}}};
  EXPECT_EQ(protection_rounds(s, 5), (std::vector<int>{-1, 1, 1, -1, 3}));
}
