#include <gtest/gtest.h>

#include "firefight/generator.hpp"
#include "firefight/oracle.hpp"
#include "support.hpp"

using namespace firefight;

namespace {

Adjacency k2n(int p) { return gen_named("k2n", p).rotations(); }

std::vector<Adjacency> tiny_graphs(int max_n) {
  std::vector<Adjacency> out;
  for (const auto& g : ref::small_triangulations(max_n)) out.push_back(g.rotations());
  for (int p = 1; p + 2 <= max_n; ++p) out.push_back(k2n(p));
  out.push_back({{1}, {0, 2}, {1, 3}, {2, 4}, {3}});
  out.push_back({{1, 2, 3, 4, 5}, {0}, {0}, {0}, {0}, {0}});
  return out;
}

}  // namespace

TEST(Oracle, StarCenter) {
  const Adjacency star = {{1, 2, 3, 4, 5}, {0}, {0}, {0}, {0}, {0}};
  EXPECT_EQ(exact_sn(star, 0, {1, 1}).sn_exact, 1);
}

TEST(Oracle, K23AtDegreeTwoVertex) {
  const auto g = k2n(3);
  EXPECT_EQ(g[2].size(), 2u);
  EXPECT_EQ(exact_sn(g, 2, {1, 1}).sn_exact, 2);
  EXPECT_EQ(ref::BruteGame(g, {1, 1}).best(2), 2);
}

TEST(Oracle, OctahedronEveryRoot) {
  const auto g = gen_named("octahedron").rotations();
  for (VertexId r = 0; r < 6; ++r) EXPECT_EQ(exact_sn(g, r, {3, 2}).sn_exact, 4);
}

TEST(Oracle, Rates) {
  EXPECT_EQ(exact_rate({{1}, {0}}, {1, 1}), Rational(1, 2));
  EXPECT_EQ(exact_rate({{1, 2}, {2, 0}, {0, 1}}, {3, 2}), Rational(2, 3));
  for (int p = 2; p <= 6; ++p) {
    EXPECT_EQ(exact_rate(k2n(p), {1, 1}), Rational(2, p + 2)) << "p = " << p;
  }
}

TEST(Oracle, CapIsEnforced) {
  const auto g = gen_apollonian(13, 1).rotations();
  try {
    exact_sn(g, 0, {3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
  Adjacency path(14);
  for (int i = 0; i + 1 < 14; ++i) {
    path[i].push_back(i + 1);
    path[i + 1].push_back(i);
  }
  EXPECT_EQ(exact_sn(path, 0, {1, 1}, {14, true}).sn_exact, 13);
  EXPECT_THROW(exact_sn(Adjacency(65), 0, {1, 1}, {100, true}), Error);
}

TEST(OracleProperty, MatchesUnmemoizedSearch) {
  for (const auto& g : tiny_graphs(7)) {
    for (BudgetSchedule b : {BudgetSchedule{1, 1}, BudgetSchedule{2, 1}, BudgetSchedule{3, 2}}) {
      ref::BruteGame brute(g, b);
      for (VertexId r = 0; r < static_cast<VertexId>(g.size()); ++r) {
        ASSERT_EQ(exact_sn(g, r, b).sn_exact, brute.best(r));
      }
    }
  }
}

TEST(OracleProperty, PruningIsExact) {
  for (const auto& g : tiny_graphs(8)) {
    for (BudgetSchedule b : {BudgetSchedule{1, 1}, BudgetSchedule{3, 2}, BudgetSchedule{4, 2}}) {
      for (VertexId r = 0; r < static_cast<VertexId>(g.size()); ++r) {
        EXPECT_EQ(exact_sn(g, r, b, {12, true}).sn_exact, exact_sn(g, r, b, {12, false}).sn_exact);
      }
    }
  }
}

TEST(OracleProperty, MonotoneInBudgets) {
  for (const auto& g : tiny_graphs(10)) {
    for (VertexId r = 0; r < static_cast<VertexId>(g.size()); r += 2) {
      const int base = exact_sn(g, r, {2, 1}).sn_exact;
      EXPECT_GE(exact_sn(g, r, {3, 1}).sn_exact, base);
      EXPECT_GE(exact_sn(g, r, {2, 2}).sn_exact, base);
      EXPECT_LE(base, static_cast<int>(g.size()) - 1);
    }
  }
}

TEST(OracleProperty, WitnessReproducesValue) {
  for (const auto& g : tiny_graphs(10)) {
    for (BudgetSchedule b : {BudgetSchedule{1, 1}, BudgetSchedule{3, 2}}) {
      for (VertexId r = 0; r < static_cast<VertexId>(g.size()); ++r) {
        const auto res = exact_sn(g, r, b);
        EXPECT_EQ(simulate(g, r, res.witness, b).saved, res.sn_exact);
        EXPECT_GT(res.states_explored, 0);
      }
    }
  }
}
