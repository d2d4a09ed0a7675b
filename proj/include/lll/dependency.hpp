#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lll/model.hpp"

namespace lll {

// Float tolerance used only when comparing against thresholds that involve
// irrational constants (e and (1+1/d)^d); everything else is exact.
inline constexpr double kConditionEpsilon = 1e-12;

// Directed dependency graph. Edge (i, j) means resampling the scope of event
// i can make event j newly occur: there is an assignment under which E_i
// occurs and E_j does not, and another differing only inside sc(E_i) under
// which E_j occurs. Never reflexive; never joins events with disjoint scopes.
struct VDLGraph {
  std::size_t m = 0;
  std::vector<std::vector<int>> gamma;  // sorted out-neighborhoods, 0-based
  int d = 0;                            // max out-degree

  bool has_edge(int i, int j) const;
  std::vector<std::pair<int, int>> edge_list() const;  // sorted lexicographically
};

// Undirected counterpart: two events are lopsidependent when two assignments
// differing only on the intersection of their scopes make one occur each,
// with at least one side newly occurring.
struct LopsGraph {
  std::size_t m = 0;
  std::vector<std::vector<int>> neighbors;  // sorted, 0-based
  int d_prime = 0;                          // max degree

  std::vector<std::pair<int, int>> edge_list() const;  // pairs with i < j
};

bool is_vdl(const EventSystem& system, std::size_t i, std::size_t j, const Budget& budget = {});
bool is_lopsidependent(const EventSystem& system, std::size_t i, std::size_t j,
                       const Budget& budget = {});

// Pairwise graph construction. The default entry point fans the pair checks
// out over OpenMP; the serial variant is the reference the tests compare
// against. Both throw BudgetError before any work if a pair is too large.
VDLGraph build_vdl_graph(const EventSystem& system, const Budget& budget = {});
VDLGraph build_vdl_graph_serial(const EventSystem& system, const Budget& budget = {});
LopsGraph build_lops_graph(const EventSystem& system, const Budget& budget = {});

LopsGraph underlying_undirected(const VDLGraph& graph);

// Equivalence of the two dependency notions: lopsidependent(i, j) iff
// j in Gamma(i) or i in Gamma(j), plus graph-level agreement of the
// undirected graph with the underlying undirected VDL graph.
struct Claim1Report {
  bool holds = true;
  std::optional<std::pair<int, int>> counterexample;  // 0-based pair
};
Claim1Report check_claim1(const EventSystem& system, const Budget& budget = {});

// Conditioning an event on the non-occurrence of events outside its
// out-neighborhood never raises its probability. The default mode checks the
// single maximal index set per event; exhaustive mode checks every subset of
// the event's non-neighbors in the underlying undirected graph.
struct ESViolation {
  int target = 0;
  std::vector<int> conditioning;
  Rational conditional;
  Rational unconditional;
};
struct ESReport {
  bool holds = true;
  std::vector<ESViolation> violations;
  // Conditionings with probability zero: undefined, skipped and reported.
  std::vector<std::pair<int, std::vector<int>>> skipped;
};
ESReport check_erdos_spencer(const EventSystem& system, const VDLGraph& graph,
                             bool exhaustive = false, const Budget& budget = {});

// Symmetric condition report. rate is (1+1/d)^d * p * (d+1), the base of the
// exponential tail bound; for d = 0 the factor (1+1/d)^d is taken as 1.
struct CondReport {
  Rational p;
  double p_double = 0.0;
  int d = 0;
  bool holds_e = false;       // e * p * (d+1) <= 1
  bool holds_strong = false;  // (1+1/d)^d * p * (d+1) < 1
  double rate = 0.0;
};
CondReport check_condition(const EventSystem& system, const VDLGraph& graph,
                           const Budget& budget = {});
CondReport condition_report(const Rational& p, int d);

}  // namespace lll
