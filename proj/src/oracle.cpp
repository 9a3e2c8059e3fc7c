#include "firefight/oracle.hpp"

#include <bit>
#include <unordered_map>

namespace firefight {

namespace {

using Mask = std::uint64_t;

struct Key {
  Mask burned;
  Mask protected_set;
  bool first;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.burned * 0x9E3779B97F4A7C15ull;
    h ^= (k.protected_set + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(k.first));
  }
};

struct Entry {
  int value;
  Mask move;
};

class Search {
 public:
  Search(const Adjacency& g, const BudgetSchedule& budgets, bool prune)
      : n_(static_cast<int>(g.size())), budgets_(budgets), prune_(prune), nbr_(g.size(), 0) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (VertexId w : g[v]) nbr_[v] |= Mask{1} << w;
    }
  }

  int value(Mask burned, Mask prot, bool first) {
    const Key key{burned, prot, first};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;

    const int budget = first ? budgets_.first : budgets_.later;
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    const Mask pool = prune_ ? reachable(burned, prot) : all & ~burned & ~prot;
    std::vector<int> items;
    for (Mask m = pool; m; m &= m - 1) items.push_back(std::countr_zero(m));
    const int k = std::min<int>(budget, static_cast<int>(items.size()));

    Entry best{-1, 0};
    auto try_move = [&](Mask move) {
      const Mask p2 = prot | move;
      const Mask spread = neighbors(burned) & ~burned & ~p2;
      const int v = spread == 0 ? n_ - std::popcount(burned) : value(burned | spread, p2, false);
      if (v > best.value) best = {v, move};
    };
    const int smallest = prune_ ? k : 0;
    for (int size = k; size >= smallest; --size) {
      for_each_subset(items, size, try_move);
    }
    memo_.emplace(key, best);
    return best.value;
  }

  Mask best_move(Mask burned, Mask prot, bool first) const {
    return memo_.at(Key{burned, prot, first}).move;
  }

  Mask neighbors(Mask set) const {
    Mask out = 0;
    for (Mask m = set; m; m &= m - 1) out |= nbr_[std::countr_zero(m)];
    return out;
  }

  std::int64_t states() const { return static_cast<std::int64_t>(memo_.size()); }

 private:
  // Unburned, unprotected vertices joined to the fire by unprotected paths.
  Mask reachable(Mask burned, Mask prot) const {
    Mask seen = burned;
    Mask frontier = burned;
    while (frontier) {
      const Mask next = neighbors(frontier) & ~seen & ~prot;
      seen |= next;
      frontier = next;
    }
    return seen & ~burned;
  }

  template <class F>
  static void for_each_subset(const std::vector<int>& items, int size, F&& f) {
    const int m = static_cast<int>(items.size());
    if (size == 0) {
      f(Mask{0});
      return;
    }
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      Mask move = 0;
      for (int i : idx) move |= Mask{1} << items[i];
      f(move);
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) return;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  int n_;
  BudgetSchedule budgets_;
  bool prune_;
  std::vector<Mask> nbr_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

void check_cap(int n, const OracleOptions& opts) {
  if (n > opts.cap || n > 64) {
    throw Error(Errc::TooLarge, "oracle refuses n = " + std::to_string(n) + " above cap " +
                                    std::to_string(opts.cap) +
                                    "; raise the cap explicitly (hard limit 64)");
  }
}

}  // namespace

OracleResult exact_sn(const Adjacency& g, VertexId root, const BudgetSchedule& budgets,
                      const OracleOptions& opts) {
  const int n = static_cast<int>(g.size());
  check_cap(n, opts);
  if (root < 0 || root >= n) throw Error(Errc::OutOfRange, "root " + std::to_string(root));

  Search search(g, budgets, opts.prune);
  Mask burned = Mask{1} << root;
  Mask prot = 0;
  OracleResult res;
  res.sn_exact = search.value(burned, prot, true);
  res.states_explored = search.states();

  bool first = true;
  for (;;) {
    const Mask move = search.best_move(burned, prot, first);
    std::vector<VertexId> round;
    for (Mask m = move; m; m &= m - 1) round.push_back(std::countr_zero(m));
    res.witness.rounds.push_back(std::move(round));
    prot |= move;
    const Mask spread = search.neighbors(burned) & ~burned & ~prot;
    if (spread == 0) break;
    burned |= spread;
    first = false;
  }
  return res;
}

Rational exact_rate(const Adjacency& g, const BudgetSchedule& budgets, const OracleOptions& opts) {
  const int n = static_cast<int>(g.size());
  check_cap(n, opts);
  std::int64_t total = 0;
  for (VertexId r = 0; r < n; ++r) total += exact_sn(g, r, budgets, opts).sn_exact;
  return Rational(total, static_cast<std::int64_t>(n) * n);
}

}  // namespace firefight
