#include "lll/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace lll {

namespace {

OmegaTable build_omega_impl(const EventSystem& system, const Budget& budget, bool parallel) {
  const auto& vars = system.variables();
  std::vector<int> all_vars(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) all_vars[v] = static_cast<int>(v);
  const std::uint64_t rows = scope_product(all_vars, vars, budget.omega);
  if (rows > budget.omega) {
    throw BudgetError("product space exceeds the omega budget");
  }
  OmegaTable table;
  table.domain_sizes.reserve(vars.size());
  for (const auto& v : vars) table.domain_sizes.push_back(v.domain_size);
  table.rows = rows;
  table.weights.resize(rows);
  table.occurs.assign(system.num_events(), std::vector<std::uint8_t>(rows, 0));
#pragma omp parallel if (parallel)
  {
    Assignment a;
    a.values.assign(vars.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t row = 0; row < static_cast<std::int64_t>(rows); ++row) {
      decode_assignment(static_cast<std::uint64_t>(row), all_vars, vars, a);
      Rational w = 1;
      for (std::size_t v = 0; v < vars.size(); ++v) w *= vars[v].weights[a.values[v]];
      table.weights[row] = std::move(w);
      for (std::size_t e = 0; e < system.num_events(); ++e) {
        table.occurs[e][row] = evaluate(system.event(e), a) ? 1 : 0;
      }
    }
  }
  return table;
}

SimulationStats estimate_survival_impl(const EventSystem& system, const VDLGraph& graph,
                                       std::size_t trials, const SolveOptions& options,
                                       std::uint64_t base_seed, bool parallel) {
  SolveOptions run_options = options;
  run_options.snapshots = false;
  std::vector<std::size_t> rounds(trials, 0);
  std::vector<std::uint8_t> limited(trials, 0);
  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    try {
      RandomTape tape(base_seed + static_cast<std::uint64_t>(t));
      const ExecutionLog log = m_algorithm(system, graph, tape, run_options);
      rounds[t] = log.rounds;
      limited[t] = log.outcome == Outcome::RoundLimit ? 1 : 0;
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  SimulationStats stats;
  stats.base_seed = base_seed;
  stats.trials = trials;
  std::size_t max_rounds = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    ++stats.rounds_histogram[rounds[t]];
    stats.limited += limited[t];
    max_rounds = std::max(max_rounds, rounds[t]);
  }
  stats.survivors.assign(max_rounds + 1, 0);
  for (const auto& [r, count] : stats.rounds_histogram) {
    for (std::size_t n = 0; n <= r; ++n) stats.survivors[n] += count;
  }
  return stats;
}

}  // namespace

Assignment OmegaTable::row_assignment(std::size_t row) const {
  Assignment a;
  a.values.assign(domain_sizes.size(), 0);
  std::uint64_t idx = row;
  for (std::size_t k = domain_sizes.size(); k-- > 0;) {
    const auto dom = static_cast<std::uint64_t>(domain_sizes[k]);
    a.values[k] = static_cast<int>(idx % dom);
    idx /= dom;
  }
  return a;
}

OmegaTable build_omega(const EventSystem& system, const Budget& budget) {
  return build_omega_impl(system, budget, true);
}

OmegaTable build_omega_serial(const EventSystem& system, const Budget& budget) {
  return build_omega_impl(system, budget, false);
}

Rational omega_probability(const OmegaTable& table, std::size_t event) {
  Rational sum = 0;
  for (std::size_t row = 0; row < table.rows; ++row) {
    if (table.occurs[event][row]) sum += table.weights[row];
  }
  return sum;
}

std::optional<Rational> exact_conditional(const OmegaTable& table, std::size_t target,
                                          const std::vector<int>& negated) {
  Rational cond_weight = 0;
  Rational joint = 0;
  for (std::size_t row = 0; row < table.rows; ++row) {
    bool none = true;
    for (int e : negated) {
      if (table.occurs[e][row]) {
        none = false;
        break;
      }
    }
    if (!none) continue;
    cond_weight += table.weights[row];
    if (table.occurs[target][row]) joint += table.weights[row];
  }
  if (cond_weight == 0) return std::nullopt;
  return joint / cond_weight;
}

std::optional<Assignment> exists_good_assignment(const OmegaTable& table) {
  for (std::size_t row = 0; row < table.rows; ++row) {
    bool good = true;
    for (const auto& column : table.occurs) {
      if (column[row]) {
        good = false;
        break;
      }
    }
    if (good) return table.row_assignment(row);
  }
  return std::nullopt;
}

bool is_vdl_full(const EventSystem& system, const OmegaTable& table, std::size_t i,
                 std::size_t j) {
  if (i == j) return false;
  const auto& sci = system.event(i).scope;
  for (std::size_t alpha = 0; alpha < table.rows; ++alpha) {
    if (!table.occurs[i][alpha] || table.occurs[j][alpha]) continue;
    const Assignment a = table.row_assignment(alpha);
    for (std::size_t beta = 0; beta < table.rows; ++beta) {
      if (!table.occurs[j][beta]) continue;
      const Assignment b = table.row_assignment(beta);
      bool inside_scope = true;
      for (std::size_t v = 0; v < a.values.size(); ++v) {
        if (a.values[v] != b.values[v] &&
            !std::binary_search(sci.begin(), sci.end(), static_cast<int>(v))) {
          inside_scope = false;
          break;
        }
      }
      if (inside_scope) return true;
    }
  }
  return false;
}

bool is_lopsidependent_full(const EventSystem& system, const OmegaTable& table, std::size_t i,
                            std::size_t j) {
  if (i == j) return false;
  const auto shared = sorted_intersection(system.event(i).scope, system.event(j).scope);
  for (std::size_t alpha = 0; alpha < table.rows; ++alpha) {
    if (!table.occurs[i][alpha]) continue;
    const Assignment a = table.row_assignment(alpha);
    for (std::size_t beta = 0; beta < table.rows; ++beta) {
      if (!table.occurs[j][beta]) continue;
      if (table.occurs[j][alpha] && table.occurs[i][beta]) continue;
      const Assignment b = table.row_assignment(beta);
      bool inside_shared = true;
      for (std::size_t v = 0; v < a.values.size(); ++v) {
        if (a.values[v] != b.values[v] &&
            !std::binary_search(shared.begin(), shared.end(), static_cast<int>(v))) {
          inside_shared = false;
          break;
        }
      }
      if (inside_shared) return true;
    }
  }
  return false;
}

double SimulationStats::p_hat(std::size_t n) const {
  if (trials == 0) return 0.0;
  if (n >= survivors.size()) return 0.0;
  return static_cast<double>(survivors[n]) / static_cast<double>(trials);
}

double SimulationStats::std_error(std::size_t n) const {
  if (trials == 0) return 0.0;
  const double p = p_hat(n);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

SimulationStats estimate_survival(const EventSystem& system, const VDLGraph& graph,
                                  std::size_t trials, const SolveOptions& options,
                                  std::uint64_t base_seed) {
  return estimate_survival_impl(system, graph, trials, options, base_seed, true);
}

SimulationStats estimate_survival_serial(const EventSystem& system, const VDLGraph& graph,
                                         std::size_t trials, const SolveOptions& options,
                                         std::uint64_t base_seed) {
  return estimate_survival_impl(system, graph, trials, options, base_seed, false);
}

}  // namespace lll
