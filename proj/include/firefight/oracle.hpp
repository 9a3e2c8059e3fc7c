#pragma once

#include <cstdint>

#include "firefight/engine.hpp"
#include "firefight/rational.hpp"

namespace firefight {

inline constexpr int kDefaultOracleCap = 12;

struct OracleResult {
  int sn_exact = 0;
  ProtectionSchedule witness;
  std::int64_t states_explored = 0;
};

struct OracleOptions {
  int cap = kDefaultOracleCap;
  /// Only consider vertices the fire can still reach, and always spend the
  /// whole budget when enough such vertices exist. Turning this off
  /// enumerates every subset of size 0..budget of the unburned, unprotected
  /// vertices; it exists to check the pruning.
  bool prune = true;
};

/// Exact sn_{k,l}(G, r) by memoized search over (burned, protected,
/// first-round) states. Throws Errc::TooLarge if n exceeds the cap (or 64).
OracleResult exact_sn(const Adjacency& g, VertexId root, const BudgetSchedule& budgets,
                      const OracleOptions& opts = {});

/// Sum over roots of exact_sn, divided by n^2.
Rational exact_rate(const Adjacency& g, const BudgetSchedule& budgets,
                    const OracleOptions& opts = {});

}  // namespace firefight
