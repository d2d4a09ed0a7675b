// Acceptance suite. Every check prints one PASS/FAIL line; run a single one
// with --criterion N. The process exits nonzero if any executed check fails.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lll/counting.hpp"
#include "lll/forest.hpp"
#include "lll/io.hpp"
#include "lll/oracle.hpp"
#include "lll/sat.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"
#include "support/stats.hpp"

using namespace lll;
using testsupport::bernoulli_triple;

namespace {

struct Check {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

std::vector<int> one_based(const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) out.push_back(l + 1);
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ']';
  return out.str();
}

// ---- c1: dependency graphs of the five-variable fixture -------------------

bool c1_graphs(std::ostream& log) {
  const auto sys = bernoulli_triple(Rational(1, 2));
  const auto vdl = build_vdl_graph(sys);
  const auto expected_vdl = std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 1}};
  bool ok = vdl.edge_list() == expected_vdl && vdl.d == 1;
  const auto lops = build_lops_graph(sys);
  const auto expected_lops = std::vector<std::pair<int, int>>{{0, 1}, {1, 2}};
  ok = ok && lops.edge_list() == expected_lops && lops.d_prime == 2;
  log << "  directed edges (1-based): (1,2) (2,3) (3,2), d=" << vdl.d
      << "; undirected {1,2} {2,3}, d'=" << lops.d_prime << "\n";
  return ok;
}

// ---- c2: closed-form probabilities -----------------------------------------

bool c2_probabilities(std::ostream& log) {
  bool ok = true;
  for (const auto& x : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(4, 5)}) {
    const auto sys = bernoulli_triple(x);
    const Rational p1 = -x * x * x + 2 * x * x - 2 * x + 1;
    const Rational p2 = x * (1 - x);
    ok = ok && event_probability(sys, 0) == p1;
    ok = ok && event_probability(sys, 1) == p2;
    ok = ok && event_probability(sys, 2) == p2;
    log << "  x=" << format_rational(x) << ": Pr[E1]=" << format_rational(p1)
        << ", Pr[E2]=Pr[E3]=" << format_rational(p2) << "\n";
  }
  return ok;
}

// ---- c3: least grid points satisfying the symmetric conditions -------------

bool c3_thresholds(std::ostream& log) {
  int least_d1 = -1;
  int least_d2 = -1;
  for (int k = 1; k <= 999; ++k) {
    const auto sys = bernoulli_triple(Rational(k, 1000));
    const Rational p = max_probability(sys);
    if (least_d1 < 0 && condition_report(p, 1).holds_e) least_d1 = k;
    if (least_d2 < 0 && condition_report(p, 2).holds_e) least_d2 = k;
    if (least_d1 >= 0 && least_d2 >= 0) break;
  }
  log << "  least x with e*p*(d+1)<=1: d=1 -> 0." << least_d1 << ", d'=2 -> 0." << least_d2
      << "\n";
  return std::abs(least_d1 - 778) <= 2 && std::abs(least_d2 - 861) <= 2;
}

// ---- c4: golden replay of the published four-round trace -------------------

bool c4_golden_replay(std::ostream& log) {
  const auto sys = bernoulli_triple(Rational(1, 2));
  const auto graph = build_vdl_graph(sys);
  // Scripted draws taken positionally from the target assignment sequence
  // (0,0,1,0,0) -> (0,1,1,0,0) -> (0,0,1,1,0) -> (1,1,0,1,0) -> (1,1,0,0,1),
  // with each resample reading its scope's values from the next assignment.
  const std::vector<int> draws{0, 0, 1, 0, 0, /*round 1, scope {1,2,3}*/ 0, 1, 1,
                               /*round 2, scope {3,4}*/ 1, 1, /*round 3, scope {1,2,3}*/ 1, 1, 0,
                               /*round 4, scope {4,5}*/ 0, 1};
  auto tape = RandomTape::forced_then_seeded(draws, 424242);
  const auto log_run = m_algorithm(sys, graph, tape, {});
  const auto forest = witness_from_log(log_run, &graph);
  const auto order = one_based(canonical_labels(forest));

  const std::vector<int> target_final{1, 1, 0, 0, 1};
  const std::vector<int> target_order{1, 2, 1, 3};
  const bool final_ok = log_run.final_assignment.values == target_final;
  const bool rounds_ok = log_run.rounds == 4;
  const bool order_ok = order == target_order;

  log << "  target: final=" << join(target_final) << " rounds=4 order=" << join(target_order)
      << "\n";
  log << "  actual: final=" << join(log_run.final_assignment.values)
      << " rounds=" << log_run.rounds << " order=" << join(order) << "\n";
  if (!order_ok) {
    log << "  note: the target order needs a node labeled 1 as a child of a node labeled 2,\n"
        << "  i.e. edge (2,1) in the dependency graph; the computed graph has no such edge\n"
        << "  (see c1), and the target trace alters variable 2 inside a resample of scope\n"
        << "  {3,4}. No tape can reproduce it; this check documents the discrepancy.\n";
  }
  return final_ok && rounds_ok && order_ok;
}

// ---- c5: counting ----------------------------------------------------------

bool c5_counting(std::ostream& log) {
  bool ok = true;
  for (int d : {1, 2}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto brute = testsupport::brute::count_kary_trees(d, n);
      ok = ok && count_tn(d, n) == BigInt(static_cast<unsigned long>(brute));
    }
  }
  log << "  t_n matches shape enumeration for d in {1,2}, n <= 6 (t_2 = "
      << count_tn(1, 2).get_str() << " | " << count_tn(2, 2).get_str() << ")\n";
  ok = ok && count_fn(1, 2, 2) == 5;

  const auto graph = build_vdl_graph(bernoulli_triple(Rational(1, 2)));
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto forests = enumerate_feasible(graph, n);
    const BigInt fn = count_fn(graph.d, graph.m, n);
    ok = ok && BigInt(static_cast<unsigned long>(forests.size())) <= fn;
    std::set<std::string> seen;
    for (const auto& forest : forests) {
      ok = ok && is_feasible(forest, graph).feasible;
      seen.insert(forest_to_json(forest));
    }
    ok = ok && seen.size() == forests.size();
    log << "  n=" << n << ": feasible forests " << forests.size() << " <= f_n "
        << fn.get_str() << "\n";
  }
  return ok;
}

// ---- c6 and c10 share one deterministic sweep ------------------------------

std::vector<EventSystem> sweep_systems() {
  std::vector<EventSystem> systems;
  std::mt19937_64 rng(20240815);
  testsupport::RandomSystemOptions dense;
  testsupport::RandomSystemOptions sparse;
  sparse.sparse = true;
  for (int i = 0; i < 200; ++i) {
    systems.push_back(testsupport::random_system(rng, i % 2 == 0 ? dense : sparse));
  }
  return systems;
}

bool c6_lemma_suite(std::ostream& log) {
  const auto systems = sweep_systems();
  std::size_t runs = 0;
  std::size_t violations = 0;
  SolveOptions options;
  options.max_rounds = 300;
  options.snapshots = true;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& sys = systems[s];
    const auto graph = build_vdl_graph_serial(sys);
    if (!check_claim1(sys).holds) {
      ++violations;
      log << "  claim-1 violation on system " << s << "\n";
    }
    if (!check_erdos_spencer(sys, graph).holds) {
      ++violations;
      log << "  negative-correlation violation on system " << s << "\n";
    }
    for (int run = 0; run < 5; ++run) {
      ++runs;
      const std::uint64_t seed = 100000 + s * 10 + run;
      RandomTape tape(seed);
      const auto exec = m_algorithm(sys, graph, tape, options);
      if (!assert_progress(exec, sys).holds) {
        ++violations;
        log << "  progress violation on system " << s << " run " << run << "\n";
      }
      const auto forest = witness_from_log(exec, &graph);
      if (!is_feasible(forest, graph).feasible) {
        ++violations;
        log << "  infeasible witness on system " << s << " run " << run << "\n";
      }
      const auto roots = root_call_indices(exec);
      bool roots_ok = roots.size() <= sys.num_events();
      for (std::size_t k = 1; k < roots.size(); ++k) {
        roots_ok = roots_ok && roots[k - 1] < roots[k];
      }
      if (!roots_ok) {
        ++violations;
        log << "  root-call violation on system " << s << " run " << run << "\n";
      }
      if (!replay_check(sys, graph, seed, options)) {
        ++violations;
        log << "  replay violation on system " << s << " run " << run << "\n";
      }
    }
  }
  log << "  " << systems.size() << " systems, " << runs << " solver runs, " << violations
      << " violations\n";
  return violations == 0 && systems.size() >= 200 && runs >= 1000;
}

// ---- c7: exact tail bound against seeded trials ----------------------------

bool c7_tail_bound(std::ostream& log) {
  const auto sys = bernoulli_triple(Rational(4, 5));
  const auto graph = build_vdl_graph(sys);
  SolveOptions options;
  options.max_rounds = 10000;
  const std::size_t trials = 10000;
  const auto stats = estimate_survival(sys, graph, trials, options, 777);
  if (stats.limited != 0) {
    log << "  " << stats.limited << " trials hit the round cap\n";
    return false;
  }
  const Rational p = max_probability(sys);
  bool ok = true;
  for (std::size_t n = 0; n <= 10; ++n) {
    const double bound = to_double(bound_report(graph.d, sys.num_events(), n, p).fn_pn);
    const double limit = bound + 3 * stats.std_error(n);
    const double observed = stats.p_hat(n);
    if (n <= 4 || observed > 0) {
      log << "  n=" << n << ": p_hat=" << observed << " <= " << limit << "\n";
    }
    ok = ok && observed <= limit;
  }
  log << "  all " << trials << " trials terminated (max rounds observed: "
      << stats.survivors.size() - 1 << ")\n";
  return ok;
}

// ---- c8: fresh-sample distribution at validation round starts --------------

bool c8_randomness(std::ostream& log) {
  const auto sys = testsupport::unit_events(3);
  const auto graph = build_vdl_graph(sys);
  LabeledForest forest;
  forest.nodes = {{0, {}}, {1, {}}, {2, {}}};
  forest.roots = {0, 1, 2};
  const int replays = 100000;
  std::vector<std::vector<long>> counts(4, std::vector<long>(8, 0));
  std::vector<long> reached(4, 0);
  for (int t = 0; t < replays; ++t) {
    RandomTape tape(3000000 + t);
    val_alg(sys, graph, forest, tape, [&](std::size_t round, const Assignment& a) {
      ++reached[round];
      ++counts[round][a.values[0] * 4 + a.values[1] * 2 + a.values[2]];
    });
  }
  bool ok = true;
  for (std::size_t round = 1; round <= 3; ++round) {
    double stat = 0;
    const double expected = reached[round] / 8.0;
    for (int cell = 0; cell < 8; ++cell) {
      const double diff = counts[round][cell] - expected;
      stat += diff * diff / expected;
    }
    const double pvalue = testsupport::chi_square_pvalue(stat, 7);
    log << "  round " << round << ": " << reached[round] << " replays, chi2=" << stat
        << ", p-value=" << pvalue << "\n";
    ok = ok && pvalue > 1e-3;
  }
  return ok;
}

// ---- c9: bounded-occurrence CNF pipeline ------------------------------------

bool c9_sat_pipeline(std::ostream& log) {
  std::size_t solved = 0;
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto instance = random_bounded_sat(10 + i % 6, 4, 2, 5000 + i);
    const std::string text = write_dimacs(instance);
    const auto reparsed = parse_dimacs(text);
    if (!(reparsed.instance == instance) || write_dimacs(reparsed.instance) != text) {
      log << "  round-trip mismatch on instance " << i << "\n";
      ok = false;
      continue;
    }
    const auto sys = sat_to_system(instance);
    const auto graph = build_vdl_graph(sys);
    const auto condition = check_condition(sys, graph);
    if (!condition.holds_e) {
      log << "  instance " << i << " misses the condition (d=" << condition.d << ")\n";
      ok = false;
      continue;
    }
    SolveOptions options;
    options.max_rounds = 10000;
    RandomTape tape(9999 + i);
    const auto exec = m_algorithm(sys, graph, tape, options);
    if (exec.outcome != Outcome::Success || !instance_satisfied(instance, exec.final_assignment)) {
      log << "  instance " << i << " not solved\n";
      ok = false;
      continue;
    }
    ++solved;
  }
  // A commented file re-emits as itself minus the comment lines.
  const std::string payload = write_dimacs(random_bounded_sat(8, 4, 2, 4242));
  ok = ok && write_dimacs(parse_dimacs("c note\n" + payload).instance) == payload;
  log << "  " << solved << "/50 instances passed the condition and were solved; "
      << "round-trips byte-identical modulo comments\n";
  return ok && solved == 50;
}

// ---- c10: existence under the symmetric condition ---------------------------

bool c10_existence(std::ostream& log) {
  const auto systems = sweep_systems();
  std::size_t holding = 0;
  std::size_t violations = 0;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& sys = systems[s];
    const auto graph = build_vdl_graph_serial(sys);
    if (!check_condition(sys, graph).holds_e) continue;
    ++holding;
    const auto table = build_omega_serial(sys);
    if (!exists_good_assignment(table).has_value()) {
      ++violations;
      log << "  system " << s << " satisfies the condition but has no good assignment\n";
    }
  }
  log << "  " << holding << "/" << systems.size()
      << " sweep systems satisfy e*p*(d+1) <= 1; violations: " << violations << "\n";
  return violations == 0 && holding > 0;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  const std::vector<Check> checks = {
      {1, "graph reproduction", c1_graphs},
      {2, "probability formulas", c2_probabilities},
      {3, "condition thresholds", c3_thresholds},
      {4, "golden replay", c4_golden_replay},
      {5, "counting", c5_counting},
      {6, "lemma suite", c6_lemma_suite},
      {7, "tail bound", c7_tail_bound},
      {8, "round-start randomness", c8_randomness},
      {9, "cnf pipeline", c9_sat_pipeline},
      {10, "existence under the condition", c10_existence},
  };
  int failures = 0;
  for (const auto& check : checks) {
    if (only != 0 && check.id != only) continue;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = check.run(detail);
    } catch (const std::exception& e) {
      detail << "  exception: " << e.what() << "\n";
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "C" << check.id << " " << check.name << ": " << (passed ? "PASS" : "FAIL")
              << " (" << seconds << "s)\n"
              << detail.str();
    if (!passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
