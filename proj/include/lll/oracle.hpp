#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lll/solver.hpp"

namespace lll {

// Complete enumeration of the product space: exact weight and per-event
// indicator for every assignment, in lexicographic order (variable 0 most
// significant).
struct OmegaTable {
  std::vector<int> domain_sizes;
  std::size_t rows = 0;
  std::vector<Rational> weights;
  std::vector<std::vector<std::uint8_t>> occurs;  // [event][row]

  Assignment row_assignment(std::size_t row) const;
};

OmegaTable build_omega(const EventSystem& system, const Budget& budget = {});  // OpenMP rows
OmegaTable build_omega_serial(const EventSystem& system, const Budget& budget = {});

// Exact Pr[event] as the weighted indicator sum over the table.
Rational omega_probability(const OmegaTable& table, std::size_t event);

// Exact Pr[target | all events in `negated` not occurring]; empty when the
// conditioning has probability zero.
std::optional<Rational> exact_conditional(const OmegaTable& table, std::size_t target,
                                          const std::vector<int>& negated);

// Lexicographically first assignment avoiding every event, if any.
std::optional<Assignment> exists_good_assignment(const OmegaTable& table);

// Definition checks re-derived over the full table, independent of the
// scope-restricted implementations they cross-check.
bool is_vdl_full(const EventSystem& system, const OmegaTable& table, std::size_t i,
                 std::size_t j);
bool is_lopsidependent_full(const EventSystem& system, const OmegaTable& table, std::size_t i,
                            std::size_t j);

struct SimulationStats {
  std::uint64_t base_seed = 0;
  std::size_t trials = 0;
  std::size_t limited = 0;  // trials that hit the round cap
  std::map<std::size_t, std::size_t> rounds_histogram;
  std::vector<std::size_t> survivors;  // survivors[n] = #trials with rounds >= n

  double p_hat(std::size_t n) const;
  double std_error(std::size_t n) const;
};

// Runs the solver once per trial with tape seed base_seed + trial index.
// Results are merged by trial index, so the statistics are identical no
// matter how the trials are scheduled.
SimulationStats estimate_survival(const EventSystem& system, const VDLGraph& graph,
                                  std::size_t trials, const SolveOptions& options,
                                  std::uint64_t base_seed);  // OpenMP trials
SimulationStats estimate_survival_serial(const EventSystem& system, const VDLGraph& graph,
                                         std::size_t trials, const SolveOptions& options,
                                         std::uint64_t base_seed);

}  // namespace lll
