#include "lll/dependency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lll/oracle.hpp"

namespace lll {

namespace {

std::uint64_t pair_enum_size(const EventSystem& system, std::size_t i, std::size_t j,
                             std::uint64_t cap) {
  const auto u = sorted_union(system.event(i).scope, system.event(j).scope);
  return scope_product(u, system.variables(), cap);
}

void check_pair_budget(const EventSystem& system, std::size_t i, std::size_t j,
                       const Budget& budget) {
  if (pair_enum_size(system, i, j, budget.enumeration) > budget.enumeration) {
    throw BudgetError("dependency check for events " + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + " exceeds the enumeration budget");
  }
}

// Index of an assignment projected onto the sorted variable set `key`.
std::uint64_t key_index(const Assignment& a, const std::vector<int>& key,
                        const std::vector<VariableSpec>& vars) {
  std::uint64_t idx = 0;
  for (int v : key) {
    idx = idx * static_cast<std::uint64_t>(vars[v].domain_size) +
          static_cast<std::uint64_t>(a.values[v]);
  }
  return idx;
}

VDLGraph build_vdl_graph_impl(const EventSystem& system, const Budget& budget, bool parallel) {
  const auto m = static_cast<std::int64_t>(system.num_events());
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i + 1; j < m; ++j) check_pair_budget(system, i, j, budget);
  }
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(m * m), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t k = 0; k < m * m; ++k) {
    const auto i = static_cast<std::size_t>(k / m);
    const auto j = static_cast<std::size_t>(k % m);
    if (i != j) adj[static_cast<std::size_t>(k)] = is_vdl(system, i, j, budget) ? 1 : 0;
  }
  VDLGraph g;
  g.m = static_cast<std::size_t>(m);
  g.gamma.resize(g.m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      if (adj[static_cast<std::size_t>(i * m + j)]) g.gamma[i].push_back(static_cast<int>(j));
    }
    g.d = std::max(g.d, static_cast<int>(g.gamma[i].size()));
  }
  return g;
}

}  // namespace

bool VDLGraph::has_edge(int i, int j) const {
  const auto& out = gamma[i];
  return std::binary_search(out.begin(), out.end(), j);
}

std::vector<std::pair<int, int>> VDLGraph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (int j : gamma[i]) edges.emplace_back(static_cast<int>(i), j);
  }
  return edges;
}

std::vector<std::pair<int, int>> LopsGraph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    for (int j : neighbors[i]) {
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return edges;
}

bool is_vdl(const EventSystem& system, std::size_t i, std::size_t j, const Budget& budget) {
  if (i == j) return false;
  const auto& sci = system.event(i).scope;
  const auto& scj = system.event(j).scope;
  if (sorted_intersection(sci, scj).empty()) return false;
  const auto& vars = system.variables();
  const auto u = sorted_union(sci, scj);
  const std::uint64_t total = scope_product(u, vars, budget.enumeration);
  if (total > budget.enumeration) {
    throw BudgetError("dependency check for events " + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + " exceeds the enumeration budget");
  }
  // Assignments that agree outside sc(E_i) form one resampling class. E_j is
  // VDL on E_i iff some class contains both a point with E_i and not E_j and
  // a point with E_j. Variables outside the scope union influence neither
  // event, so the enumeration is restricted to the union.
  const auto key = sorted_difference(u, sci);
  const std::uint64_t groups = scope_product(key, vars, budget.enumeration);
  std::vector<std::uint8_t> has_i_not_j(groups, 0);
  std::vector<std::uint8_t> has_j(groups, 0);
  Assignment a;
  a.values.assign(vars.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_assignment(idx, u, vars, a);
    const bool ei = evaluate(system.event(i), a);
    const bool ej = evaluate(system.event(j), a);
    if (!ei && !ej) continue;
    const std::uint64_t k = key_index(a, key, vars);
    if (ei && !ej) has_i_not_j[k] = 1;
    if (ej) has_j[k] = 1;
    if (has_i_not_j[k] && has_j[k]) return true;
  }
  return false;
}

bool is_lopsidependent(const EventSystem& system, std::size_t i, std::size_t j,
                       const Budget& budget) {
  if (i == j) return false;
  const auto& sci = system.event(i).scope;
  const auto& scj = system.event(j).scope;
  const auto shared = sorted_intersection(sci, scj);
  if (shared.empty()) return false;
  const auto& vars = system.variables();
  const auto u = sorted_union(sci, scj);
  const std::uint64_t total = scope_product(u, vars, budget.enumeration);
  if (total > budget.enumeration) {
    throw BudgetError("dependency check for events " + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + " exceeds the enumeration budget");
  }
  // Classes now group assignments that agree outside the scope intersection;
  // a witnessing pair must have E_i on one side, E_j on the other, and at
  // least one side missing the other event.
  const auto key = sorted_difference(u, shared);
  const std::uint64_t groups = scope_product(key, vars, budget.enumeration);
  std::vector<std::uint8_t> has_i(groups, 0), has_j(groups, 0);
  std::vector<std::uint8_t> has_i_not_j(groups, 0), has_j_not_i(groups, 0);
  Assignment a;
  a.values.assign(vars.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_assignment(idx, u, vars, a);
    const bool ei = evaluate(system.event(i), a);
    const bool ej = evaluate(system.event(j), a);
    if (!ei && !ej) continue;
    const std::uint64_t k = key_index(a, key, vars);
    if (ei) has_i[k] = 1;
    if (ej) has_j[k] = 1;
    if (ei && !ej) has_i_not_j[k] = 1;
    if (ej && !ei) has_j_not_i[k] = 1;
    if ((has_i_not_j[k] && has_j[k]) || (has_j_not_i[k] && has_i[k])) return true;
  }
  return false;
}

VDLGraph build_vdl_graph(const EventSystem& system, const Budget& budget) {
  return build_vdl_graph_impl(system, budget, true);
}

VDLGraph build_vdl_graph_serial(const EventSystem& system, const Budget& budget) {
  return build_vdl_graph_impl(system, budget, false);
}

LopsGraph build_lops_graph(const EventSystem& system, const Budget& budget) {
  const std::size_t m = system.num_events();
  LopsGraph g;
  g.m = m;
  g.neighbors.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (is_lopsidependent(system, i, j, budget)) {
        g.neighbors[i].push_back(static_cast<int>(j));
        g.neighbors[j].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& n : g.neighbors) {
    std::sort(n.begin(), n.end());
    g.d_prime = std::max(g.d_prime, static_cast<int>(n.size()));
  }
  return g;
}

LopsGraph underlying_undirected(const VDLGraph& graph) {
  LopsGraph g;
  g.m = graph.m;
  g.neighbors.resize(graph.m);
  for (std::size_t i = 0; i < graph.m; ++i) {
    for (int j : graph.gamma[i]) {
      if (!std::binary_search(g.neighbors[i].begin(), g.neighbors[i].end(), j)) {
        g.neighbors[i].insert(
            std::upper_bound(g.neighbors[i].begin(), g.neighbors[i].end(), j), j);
        g.neighbors[j].insert(
            std::upper_bound(g.neighbors[j].begin(), g.neighbors[j].end(), static_cast<int>(i)),
            static_cast<int>(i));
      }
    }
  }
  for (const auto& n : g.neighbors) g.d_prime = std::max(g.d_prime, static_cast<int>(n.size()));
  return g;
}

Claim1Report check_claim1(const EventSystem& system, const Budget& budget) {
  const VDLGraph vdl = build_vdl_graph_serial(system, budget);
  const LopsGraph lops = build_lops_graph(system, budget);
  const LopsGraph under = underlying_undirected(vdl);
  Claim1Report report;
  for (std::size_t i = 0; i < system.num_events(); ++i) {
    for (std::size_t j = i + 1; j < system.num_events(); ++j) {
      const bool lopsided =
          std::binary_search(lops.neighbors[i].begin(), lops.neighbors[i].end(),
                             static_cast<int>(j));
      const bool vdl_either = vdl.has_edge(static_cast<int>(i), static_cast<int>(j)) ||
                              vdl.has_edge(static_cast<int>(j), static_cast<int>(i));
      const bool undirected =
          std::binary_search(under.neighbors[i].begin(), under.neighbors[i].end(),
                             static_cast<int>(j));
      if (lopsided != vdl_either || lopsided != undirected) {
        report.holds = false;
        report.counterexample = {static_cast<int>(i), static_cast<int>(j)};
        return report;
      }
    }
  }
  return report;
}

ESReport check_erdos_spencer(const EventSystem& system, const VDLGraph& graph, bool exhaustive,
                             const Budget& budget) {
  const OmegaTable table = build_omega_serial(system, budget);
  const std::size_t m = system.num_events();
  ESReport report;

  auto run_check = [&](int j, const std::vector<int>& conditioning) {
    const auto cond = exact_conditional(table, static_cast<std::size_t>(j), conditioning);
    if (!cond) {
      report.skipped.emplace_back(j, conditioning);
      return;
    }
    const Rational pj = omega_probability(table, static_cast<std::size_t>(j));
    if (*cond > pj) {
      report.holds = false;
      report.violations.push_back({j, conditioning, *cond, pj});
    }
  };

  if (!exhaustive) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> conditioning;
      for (std::size_t i = 0; i < m; ++i) {
        if (i != j && !graph.has_edge(static_cast<int>(j), static_cast<int>(i))) {
          conditioning.push_back(static_cast<int>(i));
        }
      }
      run_check(static_cast<int>(j), conditioning);
    }
    return report;
  }

  if (m > 20) throw BudgetError("exhaustive non-neighbor subsets infeasible for m > 20");
  const LopsGraph under = underlying_undirected(graph);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> non_neighbors;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != j && !std::binary_search(under.neighbors[j].begin(), under.neighbors[j].end(),
                                        static_cast<int>(i))) {
        non_neighbors.push_back(static_cast<int>(i));
      }
    }
    const std::size_t subsets = std::size_t{1} << non_neighbors.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<int> conditioning;
      for (std::size_t b = 0; b < non_neighbors.size(); ++b) {
        if (mask & (std::size_t{1} << b)) conditioning.push_back(non_neighbors[b]);
      }
      run_check(static_cast<int>(j), conditioning);
    }
  }
  return report;
}

CondReport check_condition(const EventSystem& system, const VDLGraph& graph,
                           const Budget& budget) {
  return condition_report(max_probability(system, budget), graph.d);
}

CondReport condition_report(const Rational& p, int d) {
  CondReport r;
  r.p = p;
  r.p_double = to_double(p);
  r.d = d;
  const double factor = d == 0 ? 1.0 : std::pow(1.0 + 1.0 / d, d);
  r.rate = factor * r.p_double * (d + 1);
  r.holds_e = std::numbers::e * r.p_double * (d + 1) <= 1.0 + kConditionEpsilon;
  r.holds_strong = r.rate < 1.0;
  return r;
}

}  // namespace lll
