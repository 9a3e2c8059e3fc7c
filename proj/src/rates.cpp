#include "firefight/rates.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace firefight {

std::optional<Rational> theorem_bound(const BudgetSchedule& budgets) {
  if (budgets == BudgetSchedule{4, 2}) return thresholds::kRate42;
  if (budgets == BudgetSchedule{3, 2}) return thresholds::kRate32;
  return std::nullopt;
}

void finalize_report(RateReport& report) {
  std::int64_t total = 0;
  for (const auto& r : report.records) total += r.saved;
  const std::int64_t n = report.n;
  report.rho_hat = n > 0 ? Rational(total, n * n) : Rational(0);
  report.bound = theorem_bound(report.budgets);
  report.passed = !report.bound || report.rho_hat > *report.bound;
}

RateReport surviving_rate(const RotationGraph& g, const BudgetSchedule& budgets,
                          const StrategyOptions& opts) {
  RateReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.budgets = budgets;
  StrategyOptions local = opts;
  local.anomalies = &report.anomalies;

  auto record = [&](VertexId r, const StrategyOutcome& out, const std::string& suffix) {
    report.records.push_back({r, g.degree(r), out.strategy_tag + suffix, out.saved});
  };

  if (is_triangulation(g).ok) {
    const auto tri = Triangulation::from(g);
    Portfolio portfolio(tri, local);
    for (VertexId r = 0; r < g.vertex_count(); ++r) record(r, portfolio.best_of(r, budgets), "");
  } else if (g.vertex_count() >= 3) {
    report.replayed = true;
    const auto fan = triangulate_by_fan(g);
    Portfolio portfolio(fan.triangulation, local);
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      const auto above = portfolio.best_of(r, budgets);
      auto out = replay_on_subgraph(above.schedule, g.rotations(),
                                    fan.triangulation.rotations(), r, budgets);
      out.strategy_tag = above.strategy_tag;
      record(r, out, "+replay");
    }
  } else {
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      record(r, strat_greedy(g.rotations(), r, budgets), "");
    }
  }
  for (const auto& a : report.anomalies) {
    if (opts.anomalies) opts.anomalies->push_back(a);
  }
  finalize_report(report);
  return report;
}

DegreePartition degree_partition(const RotationGraph& g) {
  DegreePartition p;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d <= 4) {
      p.x.push_back(v);
    } else if (d <= 7) {
      p.y.push_back(v);
    } else {
      p.z.push_back(v);
    }
  }
  return p;
}

SnPartition sn_partition(const RotationGraph& g, const std::vector<int>& saved) {
  const std::int64_t n = g.vertex_count();
  SnPartition p;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t s = saved.at(v);
    const bool big = 3 * s > n - 3;     // s > n/3 - 1
    const bool small = 21 * s <= 2 * n;  // s <= 2n/21
    if (big) {
      p.x.push_back(v);
    } else if (small && g.degree(v) <= 7) {
      p.y.push_back(v);
    } else if (small) {
      p.z.push_back(v);
    } else {
      p.w.push_back(v);
    }
  }
  return p;
}

bool Diagnostics::mandatory_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return !c.mandatory || c.holds; });
}

namespace {

void add_sn_checks(Diagnostics& d, const SnPartition& p, const std::vector<int>& saved,
                   std::int64_t n, const std::string& label) {
  const std::int64_t x = static_cast<std::int64_t>(p.x.size());
  const std::int64_t y = static_cast<std::int64_t>(p.y.size());
  const std::int64_t z = static_cast<std::int64_t>(p.z.size());
  const std::int64_t w = static_cast<std::int64_t>(p.w.size());
  std::ostringstream os;
  os << "|X|=" << x << " |Y|=" << y << " |Z|=" << z << " |W|=" << w;
  d.checks.push_back({label + ": |Y| + |Z| < 5/2 |X|", os.str(), 2 * (y + z) < 5 * x, false});

  const std::int64_t total = std::accumulate(saved.begin(), saved.end(), std::int64_t{0});
  const Rational rho(total, n * n);
  const Rational floor =
      (Rational(x) * (Rational(n, 3) - 1) + Rational(3 * y + 3 * z) + Rational(w * 2 * n, 21)) /
      Rational(n * n);
  d.checks.push_back({label + ": rho >= (|X|(n/3-1) + 3|Y| + 3|Z| + |W| 2n/21) / n^2",
                      to_string(rho) + " vs " + to_string(floor), rho >= floor, false});
}

}  // namespace

Diagnostics partition_diagnostics(const RotationGraph& g, const RateReport* report,
                                  int oracle_cap) {
  const auto tri_check = is_triangulation(g);
  if (!tri_check.ok) {
    throw Error(Errc::NotTriangulation,
                std::to_string(tri_check.non_triangular_faces.size()) + " non-triangular faces");
  }
  const std::int64_t n = g.vertex_count();
  Diagnostics d;
  d.degrees = degree_partition(g);
  const std::int64_t x = static_cast<std::int64_t>(d.degrees.x.size());
  const std::int64_t y = static_cast<std::int64_t>(d.degrees.y.size());
  const std::int64_t z = static_cast<std::int64_t>(d.degrees.z.size());
  std::int64_t sum_deg = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) sum_deg += g.degree(v);
  {
    std::ostringstream os;
    os << "6n=" << 6 * n << " sum=" << sum_deg;
    d.checks.push_back({"6n > sum deg", os.str(), 6 * n > sum_deg, true});
  }
  {
    std::ostringstream os;
    os << "sum=" << sum_deg << " 3|X|+5|Y|+8|Z|=" << 3 * x + 5 * y + 8 * z;
    d.checks.push_back(
        {"sum deg >= 3|X| + 5|Y| + 8|Z|", os.str(), sum_deg >= 3 * x + 5 * y + 8 * z, true});
  }
  {
    std::ostringstream os;
    os << "3|Y|=" << 3 * y << " 2n-5|X|=" << 2 * n - 5 * x;
    d.checks.push_back({"|Y| > (2n - 5|X|)/3", os.str(), 3 * y > 2 * n - 5 * x, true});
  }

  RateReport local;
  if (!report) {
    local = surviving_rate(g, {3, 2}, StrategyOptions{false, nullptr});
    report = &local;
  }
  std::vector<int> saved(g.vertex_count(), 0);
  for (const auto& r : report->records) saved.at(r.root) = r.saved;
  d.sn = sn_partition(g, saved);
  add_sn_checks(d, d.sn, saved, n, "simulated");

  if (oracle_cap > 0 && n <= oracle_cap) {
    std::vector<int> exact(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      exact[v] = exact_sn(g.rotations(), v, report->budgets, {oracle_cap, true}).sn_exact;
    }
    d.exact = sn_partition(g, exact);
    add_sn_checks(d, *d.exact, exact, n, "exact");
  }
  return d;
}

TheoremCheck verify_theorem(const RotationGraph& g, const BudgetSchedule& budgets,
                            const StrategyOptions& opts) {
  if (!theorem_bound(budgets)) {
    throw Error(Errc::BadParam, "theorem covers budgets 4,2 and 3,2 only, got " +
                                    to_string(budgets));
  }
  TheoremCheck tc;
  tc.report = surviving_rate(g, budgets, opts);
  tc.regime = g.vertex_count() <= thresholds::kSmallN ? "n <= 17" : "n >= 18";
  tc.passed = tc.report.passed;
  return tc;
}

std::string graph_id(const GenSpec& spec) {
  std::ostringstream os;
  os << gen_kind_name(spec.kind);
  switch (spec.kind) {
    case GenKind::Apollonian: os << "-n" << spec.n << "-s" << spec.seed; break;
    case GenKind::Flip: os << "-n" << spec.n << "-s" << spec.seed << "-f" << spec.flips; break;
    case GenKind::Wheel:
    case GenKind::K2n: os << '-' << spec.n; break;
    case GenKind::Octahedron:
    case GenKind::Icosahedron: break;
  }
  return os.str();
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, path.string() + ": " + e.what());
  }
  ExperimentConfig c;
  try {
    for (const auto& e : j.value("corpus", nlohmann::json::array())) {
      GenSpec s;
      s.kind = parse_gen_kind(e.at("kind").get<std::string>());
      s.n = e.value("n", 4);
      s.seed = e.value("seed", std::uint64_t{0});
      s.flips = e.value("flips", 0);
      c.corpus.push_back(s);
    }
    for (const auto& e : j.value("sweeps", nlohmann::json::array())) {
      Sweep s;
      s.kind = parse_gen_kind(e.at("kind").get<std::string>());
      s.count = e.at("count").get<int>();
      s.n_min = e.value("n_min", 18);
      s.n_max = e.value("n_max", 500);
      s.seed = e.value("seed", std::uint64_t{0});
      s.flips_per_vertex = e.value("flips_per_vertex", 0);
      c.sweeps.push_back(s);
    }
    if (j.contains("budgets")) {
      c.budgets.clear();
      for (const auto& b : j.at("budgets")) c.budgets.push_back(parse_budget(b.get<std::string>()));
    }
    c.oracle_cap = j.value("oracle_cap", 10);
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, path.string() + ": " + e.what());
  }
  return c;
}

std::vector<GenSpec> expand_corpus(const ExperimentConfig& config) {
  std::vector<GenSpec> out = config.corpus;
  for (const auto& s : config.sweeps) {
    for (int i = 0; i < s.count; ++i) {
      GenSpec g;
      g.kind = s.kind;
      g.n = s.count == 1 ? s.n_min
                         : s.n_min + static_cast<int>(static_cast<std::int64_t>(i) *
                                                      (s.n_max - s.n_min) / (s.count - 1));
      g.seed = s.seed + static_cast<std::uint64_t>(i);
      g.flips = s.flips_per_vertex * g.n;
      out.push_back(g);
    }
  }
  return out;
}

ExperimentConfig acceptance_config() {
  ExperimentConfig c;
  c.sweeps.push_back({GenKind::Apollonian, 100, 18, 500, 1000, 0});
  c.sweeps.push_back({GenKind::Flip, 100, 18, 500, 2000, 3});
  return c;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

constexpr const char* kCsvHeader =
    "graph_id,kind,seed,n,m,budget,root,degree,strategy,saved,rho_hat_num,rho_hat_den,"
    "bound_num,bound_den,passed";

}  // namespace

void write_rate_csv(std::ostream& out, const std::vector<RateReport>& reports) {
  out << kCsvHeader << '\n';
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      out << csv_field(rep.graph_id) << ',' << csv_field(rep.kind) << ',' << rep.seed << ','
          << rep.n << ',' << rep.m << ',' << csv_field(to_string(rep.budgets)) << ',' << r.root
          << ',' << r.degree << ',' << csv_field(r.strategy) << ',' << r.saved << ','
          << rep.rho_hat.numerator() << ',' << rep.rho_hat.denominator() << ',';
      if (rep.bound) {
        out << rep.bound->numerator() << ',' << rep.bound->denominator();
      } else {
        out << ',';
      }
      out << ',' << (rep.passed ? "true" : "false") << '\n';
    }
  }
}

std::vector<RateReport> read_rate_csv(std::istream& in) {
  std::vector<RateReport> out;
  std::vector<Rational> stored;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::Parse, "csv line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kCsvHeader) fail("unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != 15) fail("expected 15 fields, got " + std::to_string(f.size()));
    try {
      const BudgetSchedule budgets = parse_budget(f[5]);
      if (out.empty() || out.back().graph_id != f[0] || !(out.back().budgets == budgets)) {
        RateReport rep;
        rep.graph_id = f[0];
        rep.kind = f[1];
        rep.seed = std::stoull(f[2]);
        rep.n = std::stoi(f[3]);
        rep.m = std::stoi(f[4]);
        rep.budgets = budgets;
        out.push_back(std::move(rep));
        stored.emplace_back(std::stoll(f[10]), std::stoll(f[11]));
      }
      out.back().records.push_back({std::stoi(f[6]), std::stoi(f[7]), f[8], std::stoi(f[9])});
    } catch (const std::logic_error& e) {
      fail(e.what());
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    finalize_report(out[i]);
    if (out[i].rho_hat != stored[i]) {
      throw Error(Errc::Parse, out[i].graph_id + ": stored rho_hat " + to_string(stored[i]) +
                                   " but records give " + to_string(out[i].rho_hat));
    }
  }
  return out;
}

ExperimentSummary run_experiments(const ExperimentConfig& config) {
  ExperimentSummary summary;
  const auto corpus = expand_corpus(config);
  const StrategyOptions lenient{false, &summary.anomalies};

  for (const auto& spec : corpus) {
    const auto g = generate(spec);
    const std::string id = graph_id(spec);
    ++summary.graphs;
    const bool tri = is_triangulation(g).ok;
    std::optional<RateReport> report32;

    for (const auto& budgets : config.budgets) {
      RateReport rep = theorem_bound(budgets) ? verify_theorem(g, budgets, lenient).report
                                              : surviving_rate(g, budgets, lenient);
      rep.graph_id = id;
      rep.kind = gen_kind_name(spec.kind);
      rep.seed = spec.seed;
      if (rep.bound && !rep.passed) {
        summary.failures.push_back(id + " " + to_string(budgets) + ": rho_hat " +
                                   to_string(rep.rho_hat) + " <= " + to_string(*rep.bound));
      }
      if (config.oracle_cap > 0 && g.vertex_count() <= config.oracle_cap) {
        for (const auto& r : rep.records) {
          const auto exact =
              exact_sn(g.rotations(), r.root, budgets, {config.oracle_cap, true}).sn_exact;
          ++summary.oracle_roots;
          if (r.saved > exact) {
            summary.failures.push_back(id + " " + to_string(budgets) + " root " +
                                       std::to_string(r.root) + ": best_of " +
                                       std::to_string(r.saved) + " > exact " +
                                       std::to_string(exact));
          }
        }
      }
      if (budgets == BudgetSchedule{3, 2}) report32 = rep;
      summary.reports_out.push_back(std::move(rep));
      ++summary.reports;
    }

    if (tri) {
      const auto diag = partition_diagnostics(g, report32 ? &*report32 : nullptr);
      for (const auto& c : diag.checks) {
        if (c.mandatory && !c.holds) {
          summary.failures.push_back(id + ": " + c.name + " (" + c.detail + ")");
        }
      }
    }
  }

  if (!config.output.empty()) {
    std::filesystem::create_directories(config.output);
    const auto csv_path = config.output / "rates.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw Error(Errc::Io, "cannot write " + csv_path.string());
    write_rate_csv(csv, summary.reports_out);

    const auto sum_path = config.output / "summary.txt";
    std::ofstream txt(sum_path);
    if (!txt) throw Error(Errc::Io, "cannot write " + sum_path.string());
    txt << "graphs " << summary.graphs << "\nreports " << summary.reports << "\noracle_roots "
        << summary.oracle_roots << "\nfailures " << summary.failures.size() << "\nanomalies "
        << summary.anomalies.size() << '\n';
    for (const auto& rep : summary.reports_out) {
      txt << rep.graph_id << ' ' << to_string(rep.budgets) << " n=" << rep.n
          << " rho_hat=" << to_string(rep.rho_hat);
      if (rep.bound) txt << " bound=" << to_string(*rep.bound) << (rep.passed ? " pass" : " FAIL");
      txt << '\n';
    }
    for (const auto& f : summary.failures) txt << "FAILURE " << f << '\n';
    for (const auto& a : summary.anomalies) txt << "ANOMALY " << a << '\n';
  }
  return summary;
}

}  // namespace firefight
