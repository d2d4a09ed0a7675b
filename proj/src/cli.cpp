#include "lll/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lll/io.hpp"
#include "lll/sat.hpp"

namespace lll {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

EventSystem load_instance(const std::string& path, const Budget& budget,
                          std::ostream& err) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return instance_from_json(text, budget);
  }
  if (!looks_like_json(text)) {
    auto parsed = parse_dimacs(text);
    for (const auto& warning : parsed.warnings) err << "warning: " << warning << '\n';
    return sat_to_system(parsed.instance);
  }
  return instance_from_json(text, budget);
}

Budget budget_from_env() {
  Budget budget;
  if (const char* env = std::getenv("LLL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) {
      budget.enumeration = value;
      budget.omega = value;
    }
  }
  return budget;
}

struct CommonOptions {
  std::string instance;
  std::uint64_t budget_override = 0;

  Budget budget() const {
    Budget b = budget_from_env();
    if (budget_override > 0) {
      b.enumeration = budget_override;
      b.omega = budget_override;
    }
    return b;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("instance", opts.instance, "instance file (.json or DIMACS .cnf)")
      ->required();
  cmd->add_option("--budget", opts.budget_override, "override the enumeration budgets");
}

int cmd_check(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  const VDLGraph graph = build_vdl_graph(system, budget);
  const CondReport report = check_condition(system, graph, budget);
  out << "p = " << format_rational(report.p) << " (" << report.p_double << ")\n";
  out << "d = " << report.d << '\n';
  out << "e*p*(d+1) = " << std::numbers::e * report.p_double * (report.d + 1) << '\n';
  out << "holds_e = " << (report.holds_e ? "true" : "false") << '\n';
  out << "rate = " << report.rate << '\n';
  out << "holds_strong = " << (report.holds_strong ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_graph(const CommonOptions& opts, const std::string& kind, const std::string& format,
              std::ostream& out, std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  if (kind == "vdl") {
    const VDLGraph graph = build_vdl_graph(system, budget);
    out << (format == "dot" ? vdl_to_dot(graph) : vdl_to_json(graph));
  } else {
    const LopsGraph graph = build_lops_graph(system, budget);
    out << (format == "dot" ? lops_to_dot(graph) : lops_to_json(graph));
  }
  return kExitOk;
}

struct SolveArgs {
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 1'000'000;
  bool snapshots = false;
  std::string forest_out;
  std::string log_out;
};

int cmd_solve(const CommonOptions& opts, const SolveArgs& args, std::ostream& out,
              std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  const VDLGraph graph = build_vdl_graph(system, budget);
  RandomTape tape(args.seed);
  SolveOptions options;
  options.max_rounds = args.max_rounds;
  options.snapshots = args.snapshots;
  const ExecutionLog log = m_algorithm(system, graph, tape, options);
  out << "outcome: " << (log.outcome == Outcome::Success ? "success" : "round-limit") << '\n';
  out << "rounds: " << log.rounds << '\n';
  out << "assignment:";
  for (int v : log.final_assignment.values) out << ' ' << v;
  out << '\n';
  if (!args.forest_out.empty()) {
    write_file(args.forest_out, forest_to_json(witness_from_log(log, &graph)));
  }
  if (!args.log_out.empty()) write_file(args.log_out, log_to_json(log));
  return log.outcome == Outcome::Success ? kExitOk : kExitLimit;
}

int cmd_validate(const CommonOptions& opts, const std::string& forest_path, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  const VDLGraph graph = build_vdl_graph(system, budget);
  const LabeledForest forest = forest_from_json(read_file(forest_path));
  RandomTape tape(seed);
  const ValResult result = val_alg(system, graph, forest, tape);
  if (result.success) {
    out << "success\n";
  } else {
    out << "failure at " << result.failed_at << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const CommonOptions& opts, std::size_t trials, std::uint64_t seed,
                 std::uint64_t max_rounds, std::size_t max_n, bool as_json, std::ostream& out,
                 std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  const VDLGraph graph = build_vdl_graph(system, budget);
  SolveOptions options;
  options.max_rounds = max_rounds;
  const SimulationStats stats = estimate_survival(system, graph, trials, options, seed);
  if (as_json) {
    out << stats_to_json(stats, max_n);
  } else {
    out << stats_to_csv(stats, max_n, graph.d, system.num_events(),
                        max_probability(system, budget));
  }
  return kExitOk;
}

int cmd_count(int d, std::size_t m, std::size_t n_max, const std::string& p_text,
              std::ostream& out) {
  if (p_text.empty()) {
    out << counts_to_csv(d, m, n_max, nullptr);
  } else {
    const Rational p = parse_rational(p_text);
    out << counts_to_csv(d, m, n_max, &p);
  }
  return kExitOk;
}

int cmd_oracle(const CommonOptions& opts, bool exhaustive, std::ostream& out,
               std::ostream& err) {
  const auto budget = opts.budget();
  const EventSystem system = load_instance(opts.instance, budget, err);
  const VDLGraph graph = build_vdl_graph(system, budget);
  const OmegaTable table = build_omega(system, budget);
  out << "rows: " << table.rows << '\n';
  for (std::size_t e = 0; e < system.num_events(); ++e) {
    out << "Pr[E" << e + 1 << "] = " << format_rational(omega_probability(table, e)) << '\n';
  }
  out << "p = " << format_rational(max_probability(system, budget)) << '\n';
  const auto good = exists_good_assignment(table);
  if (good) {
    out << "good assignment:";
    for (int v : good->values) out << ' ' << v;
    out << '\n';
  } else {
    out << "good assignment: none\n";
  }
  const auto claim1 = check_claim1(system, budget);
  out << "claim1: " << (claim1.holds ? "holds" : "violated") << '\n';
  const auto es = check_erdos_spencer(system, graph, exhaustive, budget);
  out << "erdos_spencer" << (exhaustive ? " (exhaustive)" : "") << ": "
      << (es.holds ? "holds" : "violated") << '\n';
  for (const auto& [j, conditioning] : es.skipped) {
    out << "  skipped zero-probability conditioning for E" << j + 1 << " (|I| = "
        << conditioning.size() << ")\n";
  }
  return es.holds && claim1.holds ? kExitOk : kExitInternal;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lopsided local lemma toolkit"};
  app.require_subcommand(1);

  CommonOptions check_opts;
  auto* check = app.add_subcommand("check", "dependency degree and condition report");
  add_common(check, check_opts);

  CommonOptions graph_opts;
  std::string graph_kind = "vdl";
  std::string graph_format = "dot";
  auto* graph = app.add_subcommand("graph", "export the dependency graphs");
  add_common(graph, graph_opts);
  graph->add_option("--kind", graph_kind, "vdl or lops")
      ->check(CLI::IsMember({"vdl", "lops"}));
  graph->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CommonOptions solve_opts;
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run the resampling solver");
  add_common(solve, solve_opts);
  solve->add_option("--seed", solve_args.seed, "tape seed");
  solve->add_option("--max-rounds", solve_args.max_rounds, "round cap");
  solve->add_flag("--snapshots", solve_args.snapshots, "record per-round assignments");
  solve->add_option("--forest-out", solve_args.forest_out, "write the witness forest JSON");
  solve->add_option("--log-out", solve_args.log_out, "write the execution log JSON");

  CommonOptions validate_opts;
  std::string validate_forest;
  std::uint64_t validate_seed = 0;
  auto* validate = app.add_subcommand("validate", "validate a forest file");
  add_common(validate, validate_opts);
  validate->add_option("--forest", validate_forest, "forest JSON file")->required();
  validate->add_option("--seed", validate_seed, "tape seed");

  CommonOptions simulate_opts;
  std::size_t simulate_trials = 1000;
  std::uint64_t simulate_seed = 0;
  std::uint64_t simulate_rounds = 10'000;
  std::size_t simulate_max_n = 10;
  bool simulate_json = false;
  auto* simulate = app.add_subcommand("simulate", "survival statistics over seeded trials");
  add_common(simulate, simulate_opts);
  simulate->add_option("--trials", simulate_trials, "number of runs");
  simulate->add_option("--seed", simulate_seed, "base seed");
  simulate->add_option("--max-rounds", simulate_rounds, "round cap per run");
  simulate->add_option("--max-n", simulate_max_n, "largest n in the output");
  simulate->add_flag("--json", simulate_json, "JSON instead of CSV");

  int count_d = 1;
  std::size_t count_m = 1;
  std::size_t count_n = 10;
  std::string count_p;
  auto* count = app.add_subcommand("count", "tree and forest counting table");
  count->add_option("--d", count_d, "out-degree bound")->required();
  count->add_option("--m", count_m, "number of trees")->required();
  count->add_option("--max-n", count_n, "largest n");
  count->add_option("--p", count_p, "probability for the f_n * p^n column");

  CommonOptions oracle_opts;
  bool oracle_exhaustive = false;
  auto* oracle = app.add_subcommand("oracle", "full enumeration ground-truth report");
  add_common(oracle, oracle_opts);
  oracle->add_flag("--exhaustive", oracle_exhaustive,
                   "check every non-neighbor subset, not just the maximal one");

  std::vector<const char*> argv;
  argv.push_back("lll");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*check) return cmd_check(check_opts, out, err);
    if (*graph) return cmd_graph(graph_opts, graph_kind, graph_format, out, err);
    if (*solve) return cmd_solve(solve_opts, solve_args, out, err);
    if (*validate) return cmd_validate(validate_opts, validate_forest, validate_seed, out, err);
    if (*simulate) {
      return cmd_simulate(simulate_opts, simulate_trials, simulate_seed, simulate_rounds,
                          simulate_max_n, simulate_json, out, err);
    }
    if (*count) return cmd_count(count_d, count_m, count_n, count_p, out);
    if (*oracle) return cmd_oracle(oracle_opts, oracle_exhaustive, out, err);
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const LimitError& e) {
    err << "limit error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const MalformedError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitParse;
  } catch (const TapeError& e) {
    err << "tape error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace lll
