#pragma once

#include <functional>
#include <vector>

#include "lll/solver.hpp"

namespace lll {

// Ordered rooted forest with event labels (0-based). Children are stored in
// creation order; the canonical order sorts roots and siblings by label and
// lists each tree in preorder.
struct ForestNode {
  int label = 0;
  std::vector<int> children;  // node ids
};

struct LabeledForest {
  std::vector<ForestNode> nodes;
  std::vector<int> roots;  // node ids

  std::size_t size() const { return nodes.size(); }
};

std::vector<int> canonical_order(const LabeledForest& forest);   // node ids
std::vector<int> canonical_labels(const LabeledForest& forest);  // 0-based labels

// Feasibility: (1) root labels pairwise distinct, (2) sibling labels
// distinct, (3) every child's label lies in Gamma(parent label) + {parent}.
struct FeasibilityReport {
  bool feasible = true;
  int violated_condition = 0;      // 1, 2 or 3 when infeasible
  std::vector<int> witness_nodes;  // offending node ids
};
FeasibilityReport is_feasible(const LabeledForest& forest, const VDLGraph& graph);

// Witness forest of an execution: one node per resample call, labeled by its
// event, parented by the recursion structure; roots in chronological order.
// For a successful log the result is feasible; when check_graph is supplied
// this is asserted and a violation throws InternalError.
LabeledForest witness_from_log(const ExecutionLog& log, const VDLGraph* check_graph = nullptr);

// Validation run over a feasible forest: sample all variables, then walk the
// labels in canonical order; fail at the first label whose event does not
// occur, otherwise resample its scope and continue. Events occurring after
// the walk are irrelevant. The observer, when set, sees the assignment at the
// start of every round (before the occurrence check).
struct ValResult {
  bool success = false;
  std::size_t failed_at = 0;  // 1-based round of the failure
};
using RoundObserver = std::function<void(std::size_t round, const Assignment&)>;
ValResult val_alg(const EventSystem& system, const VDLGraph& graph, const LabeledForest& forest,
                  RandomTape& tape, const RoundObserver& observer = {});

// Runs the solver on a fresh tape with the given seed, extracts the witness
// forest, and validates it against a second tape with the same seed. Both
// consume draws in the same order, so this must always return true.
bool replay_check(const EventSystem& system, const VDLGraph& graph, std::uint64_t seed,
                  const SolveOptions& options = {});

// Embeds a feasible forest into a forest of m full (d+1)-ary trees: missing
// root labels become single-leaf trees, every original node gets leaves until
// its children cover Gamma(label) + {label}, then further leaves (labels
// taken in index order, siblings distinct) until it has exactly d+1 children.
// Original nodes are exactly the internal nodes of the result, and distinct
// inputs map to distinct outputs.
LabeledForest complete_forest(const LabeledForest& forest, const VDLGraph& graph);

// All feasible forests with exactly n nodes, in canonical form, pairwise
// distinct. Guarded by the enumeration budget.
std::vector<LabeledForest> enumerate_feasible(const VDLGraph& graph, std::size_t n,
                                              const Budget& budget = {});

}  // namespace lll
