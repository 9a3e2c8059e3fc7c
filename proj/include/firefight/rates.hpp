#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "firefight/engine.hpp"
#include "firefight/generator.hpp"
#include "firefight/oracle.hpp"
#include "firefight/planar.hpp"
#include "firefight/rational.hpp"
#include "firefight/strategies.hpp"

namespace firefight {

/// Thresholds used by every check, as exact rationals.
namespace thresholds {
inline const Rational kRate42{2, 9};    // rho_{4,2} > 2/9
inline const Rational kRate32{2, 21};   // rho_{3,2} > 2/21
inline const Rational kThird{1, 3};     // sn > n/3 - 1
inline const Rational kSnSmall{2, 21};  // sn <= 2n/21 defines Y and Z
inline const Rational kBalance{2, 3};   // separator sides < 2n/3
inline constexpr int kSmallN = 17;      // graphs this small are certified by round 1 alone
}  // namespace thresholds

/// 2/9 for (4,2), 2/21 for (3,2), nothing otherwise.
std::optional<Rational> theorem_bound(const BudgetSchedule& budgets);

struct RootRecord {
  VertexId root = 0;
  int degree = 0;
  std::string strategy;
  int saved = 0;
};

struct RateReport {
  std::string graph_id;
  std::string kind;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  BudgetSchedule budgets;
  std::vector<RootRecord> records;
  Rational rho_hat;
  std::optional<Rational> bound;
  bool passed = true;  // rho_hat > bound; vacuously true without a bound
  bool replayed = false;  // saves come from schedules replayed off the fan triangulation
  std::vector<std::string> anomalies;
};

/// Aggregates best_of over every root. Non-triangulations are fanned,
/// strategized on the triangulation and the schedules replayed on the
/// original graph.
RateReport surviving_rate(const RotationGraph& g, const BudgetSchedule& budgets,
                          const StrategyOptions& opts = {});

/// Recomputes sum(saved) / n^2 and the pass flag from the records.
void finalize_report(RateReport& report);

struct DegreePartition {
  std::vector<VertexId> x;  // degree 3 or 4
  std::vector<VertexId> y;  // degree 5, 6 or 7
  std::vector<VertexId> z;  // degree >= 8
};

struct SnPartition {
  std::vector<VertexId> x;  // sn > n/3 - 1
  std::vector<VertexId> y;  // degree <= 7, sn <= 2n/21
  std::vector<VertexId> z;  // degree >= 8, sn <= 2n/21
  std::vector<VertexId> w;  // the rest
};

DegreePartition degree_partition(const RotationGraph& g);
SnPartition sn_partition(const RotationGraph& g, const std::vector<int>& saved);

struct InequalityCheck {
  std::string name;
  std::string detail;
  bool holds = false;
  bool mandatory = false;
};

struct Diagnostics {
  DegreePartition degrees;
  SnPartition sn;                    // from simulated saves
  std::optional<SnPartition> exact;  // from the oracle when n is within its cap
  std::vector<InequalityCheck> checks;

  bool mandatory_ok() const;
};

/// Throws Errc::NotTriangulation for other inputs. `report` supplies the
/// per-root saves; it is computed with budgets (3,2) when absent.
Diagnostics partition_diagnostics(const RotationGraph& g, const RateReport* report = nullptr,
                                  int oracle_cap = 0);

struct TheoremCheck {
  RateReport report;
  std::string regime;  // "n <= 17" or "n >= 18"
  bool passed = false;
};

/// Throws Errc::BadParam unless budgets are (4,2) or (3,2).
TheoremCheck verify_theorem(const RotationGraph& g, const BudgetSchedule& budgets,
                            const StrategyOptions& opts = {});

std::string graph_id(const GenSpec& spec);

/// A batch of graphs to generate: `count` instances with sizes spread evenly
/// over [n_min, n_max] and seeds seed, seed + 1, ...
struct Sweep {
  GenKind kind = GenKind::Apollonian;
  int count = 0;
  int n_min = 18;
  int n_max = 500;
  std::uint64_t seed = 0;
  int flips_per_vertex = 0;  // flip kind: flips = flips_per_vertex * n
};

struct ExperimentConfig {
  std::vector<GenSpec> corpus;
  std::vector<Sweep> sweeps;
  std::vector<BudgetSchedule> budgets = {{3, 2}, {4, 2}};
  int oracle_cap = 10;
  std::filesystem::path output;  // empty: no files written
};

ExperimentConfig load_experiment_config(const std::filesystem::path& path);
std::vector<GenSpec> expand_corpus(const ExperimentConfig& config);

/// The corpus behind the acceptance criteria: 100 stacked and 100 flipped
/// triangulations with n spread over [18, 500].
ExperimentConfig acceptance_config();

struct ExperimentSummary {
  int graphs = 0;
  int reports = 0;
  int oracle_roots = 0;
  std::vector<std::string> failures;  // mandatory checks that failed
  std::vector<std::string> anomalies;
  std::vector<RateReport> reports_out;

  bool ok() const { return failures.empty(); }
};

/// Generates the corpus, runs verify_theorem (or surviving_rate for other
/// budgets), partition diagnostics on triangulations, and oracle
/// cross-checks for n within the cap; writes rates.csv and summary.txt when
/// an output directory is set.
ExperimentSummary run_experiments(const ExperimentConfig& config);

void write_rate_csv(std::ostream& out, const std::vector<RateReport>& reports);

/// Rebuilds reports from CSV rows (rho_hat recomputed from the saves).
std::vector<RateReport> read_rate_csv(std::istream& in);

}  // namespace firefight
