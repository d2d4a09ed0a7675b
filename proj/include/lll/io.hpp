#pragma once

#include <string>
#include <string_view>

#include "lll/counting.hpp"
#include "lll/forest.hpp"
#include "lll/oracle.hpp"

namespace lll {

// Instance JSON:
//   { "variables": [ {"domain": 2, "weights": ["1/2", "1/2"]}, ... ],
//     "events":    [ {"dnf": [[{"var": 0, "rel": "eq", "val": 1}, ...], ...],
//                     "scope": [0, 1]}, ... ] }
// Weights are rational strings; "rel" is "eq" or "ne"; "scope" is optional
// and adds declared variables beyond those mentioned in the atoms. Written
// instances carry the computed scope.
EventSystem instance_from_json(std::string_view text, const Budget& budget = {});
std::string instance_to_json(const EventSystem& system);

// Forest JSON: { "roots": [ {"label": 1, "children": [...]}, ... ] } with
// 1-based event labels.
LabeledForest forest_from_json(std::string_view text);
std::string forest_to_json(const LabeledForest& forest);

std::string log_to_json(const ExecutionLog& log);

std::string vdl_to_json(const VDLGraph& graph);
std::string lops_to_json(const LopsGraph& graph);
std::string vdl_to_dot(const VDLGraph& graph);
std::string lops_to_dot(const LopsGraph& graph);

// CSV with one row per n: survivors, empirical survival, binomial standard
// error and, when counting inputs are supplied, the f_n * p^n bound.
std::string stats_to_csv(const SimulationStats& stats, std::size_t max_n, int d, std::size_t m,
                         const Rational& p);
std::string stats_to_json(const SimulationStats& stats, std::size_t max_n);

// CSV of n, t_n, f_n and optionally f_n * p^n.
std::string counts_to_csv(int d, std::size_t m, std::size_t n_max, const Rational* p);

}  // namespace lll
