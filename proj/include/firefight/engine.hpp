#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "firefight/planar.hpp"

namespace firefight {

/// Constant-time membership over dense vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : bits_(n, 0) {}

  bool contains(VertexId v) const { return bits_[v] != 0; }
  bool insert(VertexId v) {
    if (bits_[v]) return false;
    bits_[v] = 1;
    ++size_;
    return true;
  }
  int size() const { return size_; }
  int universe() const { return static_cast<int>(bits_.size()); }
  std::vector<VertexId> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> bits_;
  int size_ = 0;
};

/// k firefighters in round 1, l in every later round.
struct BudgetSchedule {
  int first = 0;
  int later = 0;

  int at(int round) const { return round <= 1 ? first : later; }
  friend bool operator==(const BudgetSchedule&, const BudgetSchedule&) = default;
};

/// Parses "K,L".
BudgetSchedule parse_budget(const std::string& text);
std::string to_string(const BudgetSchedule& b);

struct GameState {
  VertexSet burned;
  VertexSet protected_set;
  std::vector<VertexId> frontier;  // vertices ignited by the latest spread
  int round = 0;
};

/// rounds[t] is protected in round t + 1.
struct ProtectionSchedule {
  std::vector<std::vector<VertexId>> rounds;
};

struct ClaimRecord {
  std::string claim;
  bool met = false;
};

struct StrategyOutcome {
  VertexId root = 0;
  ProtectionSchedule schedule;
  int saved = 0;
  std::vector<VertexId> burned_final;  // sorted
  std::string strategy_tag;
  int rounds_played = 0;
  std::optional<ClaimRecord> claim;
};

GameState ignite(const Adjacency& g, VertexId root);

/// Protect, then spread once. Throws Errc::IllegalProtection (vertex out of
/// range, burning, already protected, or listed twice) or Errc::OverBudget.
GameState play_round(const Adjacency& g, GameState state, std::span<const VertexId> protections,
                     const BudgetSchedule& budgets);

/// Plays rounds until a spread step ignites nothing; schedule entries past
/// that point are ignored.
StrategyOutcome simulate(const Adjacency& g, VertexId root, const ProtectionSchedule& schedule,
                         const BudgetSchedule& budgets);

/// Replays a schedule built on `super` on the spanning subgraph `sub` (same
/// vertices, edges a subset). Throws Errc::VertexMismatch for a bad pair and
/// Errc::MonotonicityViolation if the subgraph saves fewer vertices.
StrategyOutcome replay_on_subgraph(const ProtectionSchedule& schedule, const Adjacency& sub,
                                   const Adjacency& super, VertexId root,
                                   const BudgetSchedule& budgets);

}  // namespace firefight
