#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "firefight/engine.hpp"
#include "firefight/planar.hpp"
#include "firefight/separator.hpp"

namespace firefight {

struct Inapplicable {
  std::string reason;
};

/// How claims that a schedule saves a region are enforced. In strict mode a
/// failed claim raises Errc::ScheduleFailed; otherwise the schedule is
/// discarded and a line is appended to `anomalies` (when set).
struct StrategyOptions {
  bool strict_claims = true;
  std::vector<std::string>* anomalies = nullptr;
};

using StrategyResult = std::variant<StrategyOutcome, Inapplicable>;

inline const StrategyOutcome* outcome_of(const StrategyResult& r) {
  return std::get_if<StrategyOutcome>(&r);
}

/// BFS tree from the root and the balanced cycle chosen for it.
struct RootSeparation {
  BfsTree tree;
  FundamentalCycle cycle;
};

RootSeparation separate_at(const Triangulation& g, VertexId root);

/// Protects every neighbor of the root in round 1.
StrategyResult strat_all_neighbors(const RotationGraph& g, VertexId root,
                                   const BudgetSchedule& budgets);

/// Protects the balanced cycle level by level, two vertices per round. With
/// the root off the cycle the far side is saved; with the root on the cycle
/// round 1 also covers the root's neighbors strictly inside the side holding
/// fewer of them.
StrategyResult strat_separator(const Triangulation& g, VertexId root,
                               const BudgetSchedule& budgets, const StrategyOptions& opts = {});
StrategyResult strat_separator(const Triangulation& g, const RootSeparation& sep,
                               const BudgetSchedule& budgets, const StrategyOptions& opts = {});

enum class Deg67Case { SideLight, Case1, Case2 };

const char* deg67_case_name(Deg67Case c);

struct Deg67Analysis {
  VertexId root = 0;
  RootSeparation sep;
  int inside_neighbors = 0;   // root's neighbors strictly inside the cycle
  int outside_neighbors = 0;  // ... strictly outside
  Deg67Case kind = Deg67Case::SideLight;
  bool pair_inside = true;     // side holding u and v (Case1 / Case2)
  VertexId u = -1;
  VertexId v = -1;
  bool uv_adjacent = false;
  std::vector<VertexId> path;  // Case1: u or v, ..., a cycle vertex
};

/// Throws Errc::BadDegree unless the root has degree 6 or 7.
Deg67Analysis analyze_deg67(const Triangulation& g, VertexId root);
Deg67Analysis analyze_deg67(const Triangulation& g, RootSeparation sep);

/// Shortest path from any source whose BFS distance grows by exactly one per
/// step, staying inside `allowed`, ending at the first vertex with
/// `target[v]` set.
std::optional<std::vector<VertexId>> find_increasing_path(const Adjacency& g,
                                                          const std::vector<int>& dist,
                                                          const std::vector<VertexId>& sources,
                                                          const std::vector<char>& allowed,
                                                          const std::vector<char>& target);

struct Fallback {
  VertexId u = -1;
  VertexId v = -1;
  bool uv_adjacent = false;
};

using Deg67Result = std::variant<StrategyOutcome, Fallback, Inapplicable>;

Deg67Result strat_deg67(const Triangulation& g, VertexId root, const BudgetSchedule& budgets,
                        const StrategyOptions& opts = {});
Deg67Result strat_deg67(const Triangulation& g, const Deg67Analysis& analysis,
                        const BudgetSchedule& budgets, const StrategyOptions& opts = {});

/// Case 2 schedule borrowed from a degree-6/7 neighbor r' that certified w:
/// round 1 protects r' and its two cycle neighbors, later rounds the rest of
/// r''s cycle by distance from r'. Accepted only if it saves more than n/3.
StrategyResult strat_case2_via_neighbor(const Triangulation& g, VertexId w,
                                        const BudgetSchedule& budgets,
                                        const StrategyOptions& opts = {});

/// Each round, protect the fire-adjacent vertices with the most unburned,
/// unprotected neighbors (ties by id).
StrategyOutcome strat_greedy(const Adjacency& g, VertexId root, const BudgetSchedule& budgets);

/// Portfolio over one triangulation with per-root separations and degree-6/7
/// analyses computed on first use.
class Portfolio {
 public:
  explicit Portfolio(const Triangulation& g, StrategyOptions opts = {});

  const Triangulation& graph() const { return g_; }
  const RootSeparation& separation(VertexId r) const;
  const Deg67Analysis& deg67(VertexId r) const;  // root degree must be 6 or 7

  StrategyResult separator(VertexId r, const BudgetSchedule& budgets) const;
  Deg67Result deg67_strategy(VertexId r, const BudgetSchedule& budgets) const;
  StrategyResult case2_via_neighbor(VertexId w, const BudgetSchedule& budgets) const;

  /// Best simulated outcome over all_neighbors, separator, deg67,
  /// case2_via_neighbor and greedy; ties go to the earlier strategy.
  StrategyOutcome best_of(VertexId r, const BudgetSchedule& budgets) const;

 private:
  const Triangulation& g_;
  StrategyOptions opts_;
  mutable std::vector<std::optional<RootSeparation>> sep_;
  mutable std::vector<std::optional<Deg67Analysis>> deg67_;
};

/// best_of for a single root. Non-triangulations only get all_neighbors and
/// greedy.
StrategyOutcome best_of(const RotationGraph& g, VertexId root, const BudgetSchedule& budgets,
                        const StrategyOptions& opts = {});

/// Round (1-based) in which each vertex is protected, -1 if never.
std::vector<int> protection_rounds(const ProtectionSchedule& schedule, int n);

}  // namespace firefight
