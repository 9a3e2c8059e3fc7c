// Command-line front end: generate graphs, inspect separators, simulate and
// strategize firefighter games, run the exact oracle, and verify rates.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "firefight/engine.hpp"
#include "firefight/generator.hpp"
#include "firefight/graph_io.hpp"
#include "firefight/oracle.hpp"
#include "firefight/rates.hpp"
#include "firefight/separator.hpp"
#include "firefight/strategies.hpp"

namespace fs = std::filesystem;
using namespace firefight;

namespace {

ProtectionSchedule read_schedule(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  ProtectionSchedule s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream is(line);
    std::vector<VertexId> round;
    std::string tok;
    while (is >> tok) {
      try {
        round.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw Error(Errc::Parse, path.string() + " line " + std::to_string(line_no) +
                                     ": bad vertex '" + tok + "'");
      }
    }
    s.rounds.push_back(std::move(round));
  }
  return s;
}

void print_set(std::ostream& os, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
}

void print_outcome(const StrategyOutcome& out, int n) {
  std::cout << "strategy " << (out.strategy_tag.empty() ? "-" : out.strategy_tag) << '\n';
  std::cout << "saved " << out.saved << " of " << n << '\n';
  std::cout << "rounds " << out.rounds_played << '\n';
  for (std::size_t t = 0; t < out.schedule.rounds.size(); ++t) {
    std::cout << "round " << t + 1 << ": ";
    print_set(std::cout, out.schedule.rounds[t]);
    std::cout << '\n';
  }
  std::cout << "burned ";
  print_set(std::cout, out.burned_final);
  std::cout << '\n';
  if (out.claim) {
    std::cout << "claim " << out.claim->claim << ": " << (out.claim->met ? "met" : "NOT met")
              << '\n';
  }
}

void print_report(const RateReport& r) {
  std::cout << "n " << r.n << " m " << r.m << " budget " << to_string(r.budgets) << '\n';
  for (const auto& rec : r.records) {
    std::cout << "root " << rec.root << " deg " << rec.degree << " " << rec.strategy << " saved "
              << rec.saved << '\n';
  }
  std::cout << "rho_hat " << to_string(r.rho_hat) << '\n';
  if (r.bound) {
    std::cout << "bound " << to_string(*r.bound) << ' ' << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& a : r.anomalies) std::cout << "anomaly " << a << '\n';
}

Triangulation require_triangulation(const RotationGraph& g) { return Triangulation::from(g); }

void dump_rounds(const Adjacency& g, VertexId root, const ProtectionSchedule& schedule,
                 const BudgetSchedule& budgets, const fs::path& dir) {
  fs::create_directories(dir);
  GameState state = ignite(g, root);
  const int n = static_cast<int>(g.size());
  auto dump = [&](int round) {
    std::vector<Paint> paint(n, Paint::Plain);
    for (VertexId v : state.burned.members()) paint[v] = Paint::Burned;
    for (VertexId v : state.protected_set.members()) paint[v] = Paint::Protected;
    std::ofstream out(dir / ("round_" + std::to_string(round) + ".dot"));
    write_dot(out, g, paint, "round" + std::to_string(round));
  };
  dump(0);
  do {
    const std::size_t t = static_cast<std::size_t>(state.round);
    const std::vector<VertexId> none;
    state = play_round(g, std::move(state), t < schedule.rounds.size() ? schedule.rounds[t] : none,
                       budgets);
    dump(state.round);
  } while (!state.frontier.empty());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Firefighter strategies on plane triangulations"};
  app.require_subcommand(1);

  std::string kind = "apollonian";
  std::string input;
  std::string out_path;
  std::string budget_text = "3,2";
  std::string schedule_path;
  std::string strategy;
  std::string suite;
  std::string config_path;
  std::string dot_dir;
  int n = 0;
  int root = 0;
  int flips = 0;
  int cap = kDefaultOracleCap;
  std::uint64_t seed = 0;
  bool all_edges = false;

  auto* gen = app.add_subcommand("generate", "write a generated graph in planar-rot v1");
  gen->add_option("--kind", kind, "apollonian|flip|wheel|k2n|octahedron|icosahedron");
  gen->add_option("--n", n, "size (vertex count; rim size for wheel; large side for k2n)");
  gen->add_option("--seed", seed);
  gen->add_option("--flips", flips);
  gen->add_option("--out", out_path)->required();

  auto* sep = app.add_subcommand("separator", "balanced fundamental cycle for a BFS root");
  sep->add_option("--input", input)->required();
  sep->add_option("--root", root)->required();
  sep->add_flag("--all-edges", all_edges, "print the per-edge side table");

  auto* sim = app.add_subcommand("simulate", "play a protection schedule");
  sim->add_option("--input", input)->required();
  sim->add_option("--root", root)->required();
  sim->add_option("--budget", budget_text)->required();
  sim->add_option("--schedule", schedule_path)->required();
  sim->add_option("--dot-dir", dot_dir, "write one DOT file per round");

  auto* strat = app.add_subcommand("strategize", "run a strategy (default: best of all)");
  strat->add_option("--input", input)->required();
  strat->add_option("--root", root)->required();
  strat->add_option("--budget", budget_text)->required();
  strat->add_option("--strategy", strategy,
                    "all_neighbors|separator|deg67|case2_via_neighbor|greedy|best_of");

  auto* orc = app.add_subcommand("oracle", "exact sn by exhaustive search");
  orc->add_option("--input", input)->required();
  orc->add_option("--root", root)->required();
  orc->add_option("--budget", budget_text)->required();
  orc->add_option("--cap", cap);

  auto* orate = app.add_subcommand("oracle-rate", "exact surviving rate");
  orate->add_option("--input", input)->required();
  orate->add_option("--budget", budget_text)->required();
  orate->add_option("--cap", cap);

  auto* ver = app.add_subcommand("verify", "run an experiment suite");
  ver->add_option("--suite", suite, "acceptance");
  ver->add_option("--config", config_path, "JSON experiment config");
  ver->add_option("--out", out_path);

  auto* rate = app.add_subcommand("rate", "surviving rate lower bound over all roots");
  rate->add_option("--input", input)->required();
  rate->add_option("--budget", budget_text)->required();

  auto* diag = app.add_subcommand("diagnostics", "degree and sn partitions with inequalities");
  diag->add_option("--input", input)->required();
  diag->add_option("--cap", cap, "oracle cap for the exact partition (0 disables)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GenSpec spec;
      spec.kind = parse_gen_kind(kind);
      spec.n = n;
      spec.seed = seed;
      spec.flips = flips;
      save_planar_rot(out_path, generate(spec));
      return 0;
    }
    if (*ver) {
      ExperimentConfig config;
      if (!config_path.empty()) {
        config = load_experiment_config(config_path);
      } else if (suite == "acceptance") {
        config = acceptance_config();
      } else {
        throw Error(Errc::BadParam, "verify needs --suite acceptance or --config FILE");
      }
      if (!out_path.empty()) config.output = out_path;
      const auto summary = run_experiments(config);
      std::cout << "graphs " << summary.graphs << "\nreports " << summary.reports
                << "\noracle_roots " << summary.oracle_roots << "\nanomalies "
                << summary.anomalies.size() << '\n';
      for (const auto& f : summary.failures) std::cout << "FAIL " << f << '\n';
      std::cout << (summary.ok() ? "PASS" : "FAIL") << '\n';
      return summary.ok() ? 0 : 1;
    }

    const auto g = read_planar_rot(input);
    const auto budgets = parse_budget(budget_text);

    if (*sep) {
      const auto tri = require_triangulation(g);
      const auto tree = bfs_tree(tri, root);
      const auto fc = find_balanced_cycle(tri, tree);
      std::cout << "edge " << fc.nontree_edge.first << ' ' << fc.nontree_edge.second << '\n';
      std::cout << "cycle ";
      print_set(std::cout, fc.cycle);
      std::cout << "\ninside " << fc.inside.size() << "\noutside " << fc.outside.size()
                << "\nroot "
                << (fc.root_place == RootPlace::OnCycle
                        ? "on-cycle"
                        : fc.root_place == RootPlace::Inside ? "inside" : "outside")
                << '\n';
      if (all_edges) {
        std::cout << "edge_id a b cycle inside outside balanced\n";
        for (const auto& s : dual_tree_side_counts(tri, tree)) {
          const auto e = tri.edges()[s.edge];
          std::cout << s.edge << ' ' << e.first << ' ' << e.second << ' ' << s.cycle_length << ' '
                    << s.inside << ' ' << s.outside << ' '
                    << (is_balanced(s, tri.vertex_count()) ? "yes" : "no") << '\n';
        }
      }
      return 0;
    }
    if (*sim) {
      const auto schedule = read_schedule(schedule_path);
      print_outcome(simulate(g.rotations(), root, schedule, budgets), g.vertex_count());
      if (!dot_dir.empty()) dump_rounds(g.rotations(), root, schedule, budgets, dot_dir);
      return 0;
    }
    if (*strat) {
      if (strategy.empty() || strategy == "best_of") {
        print_outcome(best_of(g, root, budgets), g.vertex_count());
        return 0;
      }
      if (strategy == "greedy") {
        print_outcome(strat_greedy(g.rotations(), root, budgets), g.vertex_count());
        return 0;
      }
      StrategyResult res = Inapplicable{"unknown strategy '" + strategy + "'"};
      if (strategy == "all_neighbors") {
        res = strat_all_neighbors(g, root, budgets);
      } else if (strategy == "separator") {
        res = strat_separator(require_triangulation(g), root, budgets);
      } else if (strategy == "case2_via_neighbor") {
        res = strat_case2_via_neighbor(require_triangulation(g), root, budgets);
      } else if (strategy == "deg67") {
        const auto d = strat_deg67(require_triangulation(g), root, budgets);
        if (const auto* fb = std::get_if<Fallback>(&d)) {
          std::cout << "fallback u " << fb->u << " v " << fb->v << " adjacent "
                    << (fb->uv_adjacent ? "yes" : "no") << '\n';
          return 0;
        }
        if (const auto* out = std::get_if<StrategyOutcome>(&d)) {
          res = *out;
        } else {
          res = std::get<Inapplicable>(d);
        }
      }
      if (const auto* out = outcome_of(res)) {
        print_outcome(*out, g.vertex_count());
        return 0;
      }
      std::cout << "inapplicable: " << std::get<Inapplicable>(res).reason << '\n';
      return 2;
    }
    if (*orc) {
      const auto res = exact_sn(g.rotations(), root, budgets, {cap, true});
      std::cout << "sn " << res.sn_exact << "\nstates " << res.states_explored << '\n';
      for (std::size_t t = 0; t < res.witness.rounds.size(); ++t) {
        std::cout << "round " << t + 1 << ": ";
        print_set(std::cout, res.witness.rounds[t]);
        std::cout << '\n';
      }
      return 0;
    }
    if (*orate) {
      std::cout << "rho " << to_string(exact_rate(g.rotations(), budgets, {cap, true})) << '\n';
      return 0;
    }
    if (*rate) {
      print_report(surviving_rate(g, budgets, StrategyOptions{false, nullptr}));
      return 0;
    }
    if (*diag) {
      const auto d = partition_diagnostics(g, nullptr, cap);
      std::cout << "degree X " << d.degrees.x.size() << " Y " << d.degrees.y.size() << " Z "
                << d.degrees.z.size() << '\n';
      std::cout << "sn X " << d.sn.x.size() << " Y " << d.sn.y.size() << " Z " << d.sn.z.size()
                << " W " << d.sn.w.size() << '\n';
      if (d.exact) {
        std::cout << "exact X " << d.exact->x.size() << " Y " << d.exact->y.size() << " Z "
                  << d.exact->z.size() << " W " << d.exact->w.size() << '\n';
      }
      for (const auto& c : d.checks) {
        std::cout << (c.holds ? "ok   " : (c.mandatory ? "FAIL " : "miss ")) << c.name << "  ["
                  << c.detail << "]" << (c.mandatory ? "" : " (diagnostic)") << '\n';
      }
      return d.mandatory_ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
