#include "firefight/strategies.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace firefight {

namespace {

// Sorts by (dist, id) and emits two per round; round 1 also gets `extra`.
ProtectionSchedule level_schedule(const BfsTree& tree, std::vector<VertexId> vertices,
                                  const std::vector<VertexId>& extra) {
  std::sort(vertices.begin(), vertices.end(), [&](VertexId a, VertexId b) {
    return std::pair(tree.dist[a], a) < std::pair(tree.dist[b], b);
  });
  ProtectionSchedule s;
  for (std::size_t i = 0; i < vertices.size(); i += 2) {
    s.rounds.push_back({vertices[i]});
    if (i + 1 < vertices.size()) s.rounds.back().push_back(vertices[i + 1]);
  }
  if (s.rounds.empty()) s.rounds.emplace_back();
  for (VertexId v : extra) s.rounds.front().push_back(v);
  return s;
}

bool contains_sorted(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<VertexId> neighbors_in(const RotationGraph& g, VertexId r,
                                   const std::vector<VertexId>& sorted_side) {
  std::vector<VertexId> out;
  for (VertexId w : g.rotation(r)) {
    if (contains_sorted(sorted_side, w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void note(const StrategyOptions& opts, const std::string& line) {
  if (opts.anomalies) opts.anomalies->push_back(line);
}

// Simulates and checks that no vertex of `claimed` burns. A failure is fatal
// in strict mode and a logged discard otherwise.
std::optional<StrategyOutcome> run_claimed(const RotationGraph& g, VertexId root,
                                           ProtectionSchedule schedule,
                                           const BudgetSchedule& budgets,
                                           const std::vector<VertexId>& claimed,
                                           const char* tag, const StrategyOptions& opts) {
  std::string failure;
  std::optional<StrategyOutcome> out;
  try {
    out = simulate(g.rotations(), root, schedule, budgets);
    for (VertexId v : claimed) {
      if (contains_sorted(out->burned_final, v)) {
        failure = "claimed vertex " + std::to_string(v) + " burned";
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::IllegalProtection && e.code() != Errc::OverBudget) throw;
    failure = e.what();
  }
  if (failure.empty()) {
    out->strategy_tag = tag;
    return out;
  }
  std::ostringstream os;
  os << tag << " at root " << root << " (n = " << g.vertex_count() << "): " << failure;
  if (opts.strict_claims) throw Error(Errc::ScheduleFailed, os.str());
  note(opts, os.str());
  return std::nullopt;
}

// A bound the analysis promises; failing it means the reading or the code is
// wrong, so it is handled like a burned claimed vertex.
bool check_claim(StrategyOutcome& out, std::string text, bool met, const char* tag,
                 const StrategyOptions& opts) {
  out.claim = ClaimRecord{std::move(text), met};
  if (met) return true;
  std::ostringstream os;
  os << tag << " at root " << out.root << ": claim '" << out.claim->claim << "' not met (saved "
     << out.saved << ")";
  if (opts.strict_claims) throw Error(Errc::ScheduleFailed, os.str());
  note(opts, os.str());
  return false;
}

std::vector<VertexId> sorted_union(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

RootSeparation separate_at(const Triangulation& g, VertexId root) {
  RootSeparation sep;
  sep.tree = bfs_tree(g, root);
  sep.cycle = find_balanced_cycle(g, sep.tree);
  return sep;
}

StrategyResult strat_all_neighbors(const RotationGraph& g, VertexId root,
                                   const BudgetSchedule& budgets) {
  if (g.degree(root) > budgets.first) {
    return Inapplicable{"degree " + std::to_string(g.degree(root)) + " exceeds first budget " +
                        std::to_string(budgets.first)};
  }
  ProtectionSchedule s;
  s.rounds.emplace_back(g.rotation(root).begin(), g.rotation(root).end());
  auto out = simulate(g.rotations(), root, s, budgets);
  out.strategy_tag = "all_neighbors";
  return out;
}

StrategyResult strat_separator(const Triangulation& g, VertexId root,
                               const BudgetSchedule& budgets, const StrategyOptions& opts) {
  return strat_separator(g, separate_at(g, root), budgets, opts);
}

StrategyResult strat_separator(const Triangulation& g, const RootSeparation& sep,
                               const BudgetSchedule& budgets, const StrategyOptions& opts) {
  const int n = g.vertex_count();
  const VertexId r = sep.tree.root;
  const auto& fc = sep.cycle;
  if (budgets.later < 2) return Inapplicable{"needs 2 firefighters in later rounds"};

  std::vector<VertexId> boundary;
  std::vector<VertexId> extra;
  const std::vector<VertexId>* side = nullptr;
  if (fc.root_place != RootPlace::OnCycle) {
    side = fc.root_place == RootPlace::Inside ? &fc.outside : &fc.inside;
    boundary = fc.cycle;
  } else {
    const auto in_nb = neighbors_in(g, r, fc.inside);
    const auto out_nb = neighbors_in(g, r, fc.outside);
    bool use_inside = in_nb.size() < out_nb.size();
    if (in_nb.size() == out_nb.size()) use_inside = fc.with_inside() >= fc.with_outside();
    side = use_inside ? &fc.inside : &fc.outside;
    extra = use_inside ? in_nb : out_nb;
    for (VertexId v : fc.cycle) {
      if (v != r) boundary.push_back(v);
    }
  }
  const int needed = 2 + static_cast<int>(extra.size());
  if (needed > budgets.first) {
    return Inapplicable{"needs " + std::to_string(needed) + " firefighters in round 1"};
  }

  auto schedule = level_schedule(sep.tree, boundary, extra);
  const auto claimed = sorted_union(boundary, *side);
  auto out = run_claimed(g, r, std::move(schedule), budgets, claimed, "separator", opts);
  if (!out) return Inapplicable{"schedule failed its claim"};
  if (n >= 18 && !check_claim(*out, "saved > n/3 - 1", 3 * out->saved > n - 3, "separator", opts)) {
    return Inapplicable{"schedule failed its bound"};
  }
  return *out;
}

const char* deg67_case_name(Deg67Case c) {
  switch (c) {
    case Deg67Case::SideLight: return "SideLight";
    case Deg67Case::Case1: return "Case1";
    case Deg67Case::Case2: return "Case2";
  }
  return "?";
}

std::optional<std::vector<VertexId>> find_increasing_path(const Adjacency& g,
                                                          const std::vector<int>& dist,
                                                          const std::vector<VertexId>& sources,
                                                          const std::vector<char>& allowed,
                                                          const std::vector<char>& target) {
  const int n = static_cast<int>(g.size());
  std::vector<VertexId> from(n, -2);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (from[s] != -2) continue;
    from[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g[x]) {
      if (from[y] != -2 || !allowed[y] || dist[y] != dist[x] + 1) continue;
      from[y] = x;
      if (target[y]) {
        std::vector<VertexId> path;
        for (VertexId z = y; z != -1; z = from[z]) path.push_back(z);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

Deg67Analysis analyze_deg67(const Triangulation& g, VertexId root) {
  if (root < 0 || root >= g.vertex_count()) {
    throw Error(Errc::OutOfRange, "root " + std::to_string(root));
  }
  const int d = g.degree(root);
  if (d != 6 && d != 7) {
    throw Error(Errc::BadDegree, "root " + std::to_string(root) + " has degree " +
                                      std::to_string(d) + ", expected 6 or 7");
  }
  return analyze_deg67(g, separate_at(g, root));
}

Deg67Analysis analyze_deg67(const Triangulation& g, RootSeparation sep) {
  const VertexId r = sep.tree.root;
  const int d = g.degree(r);
  if (d != 6 && d != 7) {
    throw Error(Errc::BadDegree, "root " + std::to_string(r) + " has degree " +
                                      std::to_string(d) + ", expected 6 or 7");
  }
  Deg67Analysis a;
  a.root = r;
  a.sep = std::move(sep);
  const auto& fc = a.sep.cycle;
  const auto in_nb = neighbors_in(g, r, fc.inside);
  const auto out_nb = neighbors_in(g, r, fc.outside);
  a.inside_neighbors = static_cast<int>(in_nb.size());
  a.outside_neighbors = static_cast<int>(out_nb.size());

  if (fc.root_place != RootPlace::OnCycle || std::min(in_nb.size(), out_nb.size()) <= 1) {
    a.kind = Deg67Case::SideLight;
    return a;
  }
  if (in_nb.size() == 2 && out_nb.size() == 2) {
    a.pair_inside = fc.with_inside() >= fc.with_outside();
  } else {
    a.pair_inside = in_nb.size() == 2;
  }
  const auto& pair = a.pair_inside ? in_nb : out_nb;
  const auto& side = a.pair_inside ? fc.inside : fc.outside;
  a.u = pair[0];
  a.v = pair[1];
  a.uv_adjacent = g.has_edge(a.u, a.v);

  const int n = g.vertex_count();
  std::vector<char> allowed(n, 0);
  std::vector<char> on_cycle(n, 0);
  for (VertexId x : side) allowed[x] = 1;
  for (VertexId x : fc.cycle) allowed[x] = on_cycle[x] = 1;
  auto path = find_increasing_path(g.rotations(), a.sep.tree.dist, {a.u, a.v}, allowed, on_cycle);
  if (path) {
    a.kind = Deg67Case::Case1;
    a.path = std::move(*path);
  } else {
    a.kind = Deg67Case::Case2;
  }
  return a;
}

Deg67Result strat_deg67(const Triangulation& g, VertexId root, const BudgetSchedule& budgets,
                        const StrategyOptions& opts) {
  return strat_deg67(g, analyze_deg67(g, root), budgets, opts);
}

Deg67Result strat_deg67(const Triangulation& g, const Deg67Analysis& a,
                        const BudgetSchedule& budgets, const StrategyOptions& opts) {
  const int n = g.vertex_count();
  const VertexId r = a.root;
  if (budgets.first < 3 || budgets.later < 2) {
    return Inapplicable{"needs 3 firefighters in round 1 and 2 afterwards"};
  }

  if (a.kind == Deg67Case::Case2) {
    if (!a.uv_adjacent) {
      note(opts, "deg67 at root " + std::to_string(r) + ": Case2 pair " + std::to_string(a.u) +
                     "," + std::to_string(a.v) + " not adjacent");
    }
    return Fallback{a.u, a.v, a.uv_adjacent};
  }

  if (a.kind == Deg67Case::SideLight) {
    auto res = strat_separator(g, a.sep, budgets, opts);
    if (auto* out = std::get_if<StrategyOutcome>(&res)) {
      out->strategy_tag = "deg67";
      return *out;
    }
    return std::get<Inapplicable>(res);
  }

  // Case 1: the path r, s, ..., t splits the pair side into two pockets.
  const auto& cyc = a.sep.cycle.cycle;  // cyc[0] == r
  const std::size_t len = cyc.size();
  const VertexId t = a.path.back();
  const std::size_t j = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), t) - cyc.begin());
  if (j == 0 || j == 1 || j + 1 >= len) {
    throw Error(Errc::ScheduleFailed, "increasing path ends next to the root");
  }

  struct Pocket {
    std::vector<VertexId> cycle;
    std::vector<VertexId> region;
  };
  auto pocket = [&](bool first_arc) {
    Pocket p;
    p.cycle.push_back(r);
    p.cycle.insert(p.cycle.end(), a.path.begin(), a.path.end());
    if (first_arc) {
      for (std::size_t k = j - 1; k >= 1; --k) p.cycle.push_back(cyc[k]);
    } else {
      for (std::size_t k = j + 1; k < len; ++k) p.cycle.push_back(cyc[k]);
    }
    // The pocket is the side away from the arc the sub-cycle skips.
    const VertexId away = first_arc ? cyc[len - 1] : cyc[1];
    auto sides = cycle_sides(g, p.cycle);
    p.region = contains_sorted(sides.inside, away) ? std::move(sides.outside)
                                                   : std::move(sides.inside);
    return p;
  };
  Pocket pockets[2] = {pocket(true), pocket(false)};
  if (pockets[1].cycle.size() + pockets[1].region.size() >
      pockets[0].cycle.size() + pockets[0].region.size()) {
    std::swap(pockets[0], pockets[1]);
  }

  const auto& pair_side = a.pair_inside ? a.sep.cycle.inside : a.sep.cycle.outside;
  const int whole = static_cast<int>(len + pair_side.size());
  for (const Pocket& p : pockets) {
    const auto hist = level_histogram(p.cycle, a.sep.tree);
    if (std::any_of(hist.begin() + 1, hist.end(), [](int c) { return c > 2; })) {
      note(opts, "deg67 at root " + std::to_string(r) + ": sub-cycle has a level with > 2 vertices");
    }
    const auto extra = neighbors_in(g, r, p.region);
    std::vector<VertexId> boundary(p.cycle.begin() + 1, p.cycle.end());
    auto schedule = level_schedule(a.sep.tree, boundary, extra);
    if (static_cast<int>(schedule.rounds.front().size()) > budgets.first) continue;
    const auto claimed = sorted_union(boundary, p.region);
    auto out = run_claimed(g, r, std::move(schedule), budgets, claimed, "deg67", opts);
    if (!out) continue;
    if (!check_claim(*out, "saved >= ceil(|C u side| / 2) - 1", 2 * (out->saved + 1) >= whole,
                     "deg67", opts)) {
      continue;
    }
    if (n >= 18) {
      const bool met = g.degree(r) == 6 ? 4 * out->saved > n - 4 : 6 * out->saved > n - 6;
      if (!check_claim(*out, g.degree(r) == 6 ? "saved > n/4 - 1" : "saved > n/6 - 1", met,
                       "deg67", opts)) {
        continue;
      }
    }
    return *out;
  }
  return Inapplicable{"no pocket schedule fits the budget"};
}

namespace {

using AnalysisLookup = std::function<const Deg67Analysis&(VertexId)>;

StrategyResult case2_from(const Triangulation& g, VertexId w, const BudgetSchedule& budgets,
                          const StrategyOptions& opts, const AnalysisLookup& lookup) {
  const int n = g.vertex_count();
  if (budgets.first < 3 || budgets.later < 2) {
    return Inapplicable{"needs 3 firefighters in round 1 and 2 afterwards"};
  }
  std::optional<StrategyOutcome> best;
  bool qualified = false;
  std::vector<VertexId> nbrs(g.rotation(w).begin(), g.rotation(w).end());
  std::sort(nbrs.begin(), nbrs.end());
  for (VertexId rp : nbrs) {
    const int d = g.degree(rp);
    if (d != 6 && d != 7) continue;
    const auto& a = lookup(rp);
    if (a.kind != Deg67Case::Case2 || (a.u != w && a.v != w)) continue;
    qualified = true;
    const auto& cyc = a.sep.cycle.cycle;
    ProtectionSchedule s;
    s.rounds.push_back({rp, cyc[1], cyc.back()});
    std::vector<VertexId> rest(cyc.begin() + 2, cyc.end() - 1);
    auto later = level_schedule(a.sep.tree, rest, {});
    if (!rest.empty()) {
      s.rounds.insert(s.rounds.end(), later.rounds.begin(), later.rounds.end());
    }
    std::string failure;
    try {
      auto out = simulate(g.rotations(), w, s, budgets);
      out.strategy_tag = "case2_via_neighbor";
      out.claim = ClaimRecord{"saved > n/3", 3 * out.saved > n};
      if (out.claim->met) {
        if (!best || out.saved > best->saved) best = std::move(out);
        continue;
      }
      failure = "saved only " + std::to_string(out.saved);
    } catch (const Error& e) {
      if (e.code() != Errc::IllegalProtection && e.code() != Errc::OverBudget) throw;
      failure = e.what();
    }
    note(opts, "case2_via_neighbor at " + std::to_string(w) + " via " + std::to_string(rp) +
                   ": candidate discarded, " + failure);
  }
  if (best) return *best;
  return Inapplicable{qualified ? "every certified neighbor schedule fell short"
                                : "no degree-6/7 neighbor certifies this vertex"};
}

}  // namespace

StrategyResult strat_case2_via_neighbor(const Triangulation& g, VertexId w,
                                        const BudgetSchedule& budgets,
                                        const StrategyOptions& opts) {
  std::vector<std::optional<Deg67Analysis>> cache(g.vertex_count());
  return case2_from(g, w, budgets, opts, [&](VertexId rp) -> const Deg67Analysis& {
    if (!cache[rp]) cache[rp] = analyze_deg67(g, rp);
    return *cache[rp];
  });
}

StrategyOutcome strat_greedy(const Adjacency& g, VertexId root, const BudgetSchedule& budgets) {
  const int n = static_cast<int>(g.size());
  GameState state = ignite(g, root);
  ProtectionSchedule schedule;
  std::vector<char> marked(n, 0);
  while (!state.frontier.empty() && state.round <= n) {
    std::vector<VertexId> candidates;
    for (VertexId v : state.frontier) {
      for (VertexId w : g[v]) {
        if (marked[w] || state.burned.contains(w) || state.protected_set.contains(w)) continue;
        marked[w] = 1;
        candidates.push_back(w);
      }
    }
    std::vector<std::pair<int, VertexId>> scored;
    for (VertexId w : candidates) {
      marked[w] = 0;
      int free = 0;
      for (VertexId x : g[w]) {
        if (!state.burned.contains(x) && !state.protected_set.contains(x)) ++free;
      }
      scored.push_back({-free, w});
    }
    std::sort(scored.begin(), scored.end());
    const std::size_t take =
        std::min(scored.size(), static_cast<std::size_t>(budgets.at(state.round + 1)));
    std::vector<VertexId> move;
    for (std::size_t i = 0; i < take; ++i) move.push_back(scored[i].second);
    schedule.rounds.push_back(move);
    state = play_round(g, std::move(state), move, budgets);
  }
  StrategyOutcome out;
  out.root = root;
  out.schedule = std::move(schedule);
  out.burned_final = state.burned.members();
  out.saved = n - state.burned.size();
  out.rounds_played = state.round;
  out.strategy_tag = "greedy";
  return out;
}

Portfolio::Portfolio(const Triangulation& g, StrategyOptions opts)
    : g_(g), opts_(opts), sep_(g.vertex_count()), deg67_(g.vertex_count()) {}

const RootSeparation& Portfolio::separation(VertexId r) const {
  if (!sep_[r]) sep_[r] = separate_at(g_, r);
  return *sep_[r];
}

const Deg67Analysis& Portfolio::deg67(VertexId r) const {
  if (!deg67_[r]) deg67_[r] = analyze_deg67(g_, separation(r));
  return *deg67_[r];
}

StrategyResult Portfolio::separator(VertexId r, const BudgetSchedule& budgets) const {
  return strat_separator(g_, separation(r), budgets, opts_);
}

Deg67Result Portfolio::deg67_strategy(VertexId r, const BudgetSchedule& budgets) const {
  const int d = g_.degree(r);
  if (d != 6 && d != 7) return Inapplicable{"degree " + std::to_string(d)};
  return strat_deg67(g_, deg67(r), budgets, opts_);
}

StrategyResult Portfolio::case2_via_neighbor(VertexId w, const BudgetSchedule& budgets) const {
  return case2_from(g_, w, budgets, opts_,
                    [this](VertexId rp) -> const Deg67Analysis& { return deg67(rp); });
}

StrategyOutcome Portfolio::best_of(VertexId r, const BudgetSchedule& budgets) const {
  std::optional<StrategyOutcome> best;
  auto consider = [&](const StrategyOutcome* out) {
    if (out && (!best || out->saved > best->saved)) best = *out;
  };
  auto all = strat_all_neighbors(g_, r, budgets);
  consider(outcome_of(all));
  if (best && best->saved == g_.vertex_count() - 1) return *best;
  auto sep = separator(r, budgets);
  consider(outcome_of(sep));
  auto d67 = deg67_strategy(r, budgets);
  consider(std::get_if<StrategyOutcome>(&d67));
  auto c2 = case2_via_neighbor(r, budgets);
  consider(outcome_of(c2));
  const auto greedy = strat_greedy(g_.rotations(), r, budgets);
  consider(&greedy);
  return *best;
}

StrategyOutcome best_of(const RotationGraph& g, VertexId root, const BudgetSchedule& budgets,
                        const StrategyOptions& opts) {
  if (is_triangulation(g).ok) {
    const auto tri = Triangulation::from(g);
    return Portfolio(tri, opts).best_of(root, budgets);
  }
  auto greedy = strat_greedy(g.rotations(), root, budgets);
  const auto all = strat_all_neighbors(g, root, budgets);
  if (const auto* out = outcome_of(all); out && out->saved >= greedy.saved) return *out;
  return greedy;
}

std::vector<int> protection_rounds(const ProtectionSchedule& schedule, int n) {
  std::vector<int> round(n, -1);
  for (std::size_t t = 0; t < schedule.rounds.size(); ++t) {
    for (VertexId v : schedule.rounds[t]) {
      if (v >= 0 && v < n && round[v] == -1) round[v] = static_cast<int>(t) + 1;
    }
  }
  return round;
}

}  // namespace firefight
