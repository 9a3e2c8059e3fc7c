#include "firefight/engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace firefight {

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

BudgetSchedule parse_budget(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    BudgetSchedule budgets{std::stoi(a, &used1), std::stoi(b, &used2)};
    if (used1 != a.size() || used2 != b.size() || budgets.first < 0 || budgets.later < 0) {
      throw std::invalid_argument("trailing");
    }
    return budgets;
  } catch (const std::logic_error&) {
    throw Error(Errc::BadParam, "budget must look like K,L with K, L >= 0; got '" + text + "'");
  }
}

std::string to_string(const BudgetSchedule& b) {
  return std::to_string(b.first) + "," + std::to_string(b.later);
}

GameState ignite(const Adjacency& g, VertexId root) {
  const int n = static_cast<int>(g.size());
  if (root < 0 || root >= n) {
    throw Error(Errc::OutOfRange, "ignition vertex " + std::to_string(root) + " not in [0, " +
                                      std::to_string(n) + ")");
  }
  GameState s{VertexSet(n), VertexSet(n), {root}, 0};
  s.burned.insert(root);
  return s;
}

GameState play_round(const Adjacency& g, GameState state, std::span<const VertexId> protections,
                     const BudgetSchedule& budgets) {
  const int n = static_cast<int>(g.size());
  const int round = state.round + 1;
  const int budget = budgets.at(round);
  if (static_cast<int>(protections.size()) > budget) {
    throw Error(Errc::OverBudget, "round " + std::to_string(round) + " protects " +
                                      std::to_string(protections.size()) + " vertices, budget " +
                                      std::to_string(budget));
  }
  for (VertexId v : protections) {
    auto illegal = [&](const char* why) {
      throw Error(Errc::IllegalProtection,
                  "round " + std::to_string(round) + ": vertex " + std::to_string(v) + " " + why);
    };
    if (v < 0 || v >= n) illegal("is out of range");
    if (state.burned.contains(v)) illegal("is on fire");
    if (!state.protected_set.insert(v)) illegal("is already protected");
  }

  std::vector<VertexId> ignited;
  for (VertexId v : state.frontier) {
    for (VertexId w : g[v]) {
      if (state.protected_set.contains(w) || state.burned.contains(w)) continue;
      state.burned.insert(w);
      ignited.push_back(w);
    }
  }
  state.frontier = std::move(ignited);
  state.round = round;
  return state;
}

StrategyOutcome simulate(const Adjacency& g, VertexId root, const ProtectionSchedule& schedule,
                         const BudgetSchedule& budgets) {
  GameState state = ignite(g, root);
  const int n = static_cast<int>(g.size());
  do {
    const std::size_t t = static_cast<std::size_t>(state.round);
    static const std::vector<VertexId> kNone;
    const auto& move = t < schedule.rounds.size() ? schedule.rounds[t] : kNone;
    state = play_round(g, std::move(state), move, budgets);
  } while (!state.frontier.empty() && state.round <= n);

  StrategyOutcome out;
  out.root = root;
  out.schedule = schedule;
  out.burned_final = state.burned.members();
  out.saved = n - state.burned.size();
  out.rounds_played = state.round;
  return out;
}

StrategyOutcome replay_on_subgraph(const ProtectionSchedule& schedule, const Adjacency& sub,
                                   const Adjacency& super, VertexId root,
                                   const BudgetSchedule& budgets) {
  if (sub.size() != super.size()) {
    throw Error(Errc::VertexMismatch, "subgraph has " + std::to_string(sub.size()) +
                                          " vertices, supergraph " + std::to_string(super.size()));
  }
  for (std::size_t v = 0; v < sub.size(); ++v) {
    const std::set<VertexId> above(super[v].begin(), super[v].end());
    for (VertexId w : sub[v]) {
      if (!above.count(w)) {
        throw Error(Errc::VertexMismatch, "edge " + std::to_string(v) + "-" + std::to_string(w) +
                                              " missing from the supergraph");
      }
    }
  }
  auto below = simulate(sub, root, schedule, budgets);
  const auto base = simulate(super, root, schedule, budgets);
  if (below.saved < base.saved) {
    std::ostringstream os;
    os << "root " << root << ": subgraph saves " << below.saved << " < " << base.saved;
    throw Error(Errc::MonotonicityViolation, os.str());
  }
  return below;
}

}  // namespace firefight
