#pragma once

// Reference routines written independently of the library: plain face
// tracing, plain BFS, and an unmemoized exhaustive game search. Tests compare
// library results against these.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <vector>

#include "firefight/engine.hpp"
#include "firefight/generator.hpp"
#include "firefight/planar.hpp"

namespace ref {

using firefight::Adjacency;

// Face walks under the rule: after u -> v comes v -> (neighbor after u in
// rot(v)).
inline std::vector<std::vector<int>> trace_faces(const Adjacency& rot) {
  std::vector<std::vector<char>> used(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) used[v].assign(rot[v].size(), 0);
  auto index_of = [&](int v, int w) {
    return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
  };
  std::vector<std::vector<int>> faces;
  for (std::size_t s = 0; s < rot.size(); ++s) {
    for (std::size_t i = 0; i < rot[s].size(); ++i) {
      if (used[s][i]) continue;
      std::vector<int> face;
      int u = static_cast<int>(s);
      int k = static_cast<int>(i);
      while (!used[u][k]) {
        used[u][k] = 1;
        face.push_back(u);
        const int v = rot[u][k];
        const int back = index_of(v, u);
        k = (back + 1) % static_cast<int>(rot[v].size());
        u = v;
      }
      faces.push_back(face);
    }
  }
  return faces;
}

inline int edge_total(const Adjacency& g) {
  int d = 0;
  for (const auto& r : g) d += static_cast<int>(r.size());
  return d / 2;
}

inline std::vector<int> bfs_dist(const Adjacency& g, int root) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{root};
  dist[root] = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : g[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

// Exhaustive value of the game: every subset of at most `budget` untouched
// vertices, anywhere in the graph, is tried each round. Only for tiny n.
class BruteGame {
 public:
  BruteGame(const Adjacency& g, firefight::BudgetSchedule b) : g_(g), b_(b) {}

  int best(int root) {
    std::vector<char> burned(g_.size(), 0), prot(g_.size(), 0);
    burned[root] = 1;
    return play(burned, prot, true);
  }

 private:
  int play(std::vector<char>& burned, std::vector<char>& prot, bool first) {
    const int budget = first ? b_.first : b_.later;
    std::vector<int> free;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (!burned[v] && !prot[v]) free.push_back(static_cast<int>(v));
    }
    int best = -1;
    std::vector<int> chosen;
    choose(free, 0, budget, chosen, [&] {
      for (int v : chosen) prot[v] = 1;
      std::vector<int> spread;
      for (std::size_t v = 0; v < g_.size(); ++v) {
        if (burned[v] || prot[v]) continue;
        for (int w : g_[v]) {
          if (burned[w]) {
            spread.push_back(static_cast<int>(v));
            break;
          }
        }
      }
      int val;
      if (spread.empty()) {
        val = static_cast<int>(std::count(burned.begin(), burned.end(), 0));
      } else {
        for (int v : spread) burned[v] = 1;
        val = play(burned, prot, false);
        for (int v : spread) burned[v] = 0;
      }
      for (int v : chosen) prot[v] = 0;
      best = std::max(best, val);
    });
    return best;
  }

  template <class F>
  void choose(const std::vector<int>& pool, std::size_t from, int left, std::vector<int>& chosen,
              F&& f) {
    f();
    if (left == 0) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      choose(pool, i + 1, left - 1, chosen, f);
      chosen.pop_back();
    }
  }

  const Adjacency& g_;
  firefight::BudgetSchedule b_;
};

// Small generated and named triangulations, n from 4 up to `max_n`.
inline std::vector<firefight::RotationGraph> small_triangulations(int max_n) {
  using namespace firefight;
  std::vector<RotationGraph> out;
  for (int n = 4; n <= max_n; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      out.push_back(gen_apollonian(n, seed));
      out.push_back(gen_flip(n, seed, 3 * n));
    }
  }
  out.push_back(gen_named("octahedron"));
  if (max_n >= 12) out.push_back(gen_named("icosahedron"));
  return out;
}

}  // namespace ref
