#include "lll/forest.hpp"

#include <algorithm>
#include <set>

namespace lll {

namespace {

std::vector<int> sorted_by_label(const LabeledForest& forest, std::vector<int> ids) {
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return forest.nodes[a].label < forest.nodes[b].label;
  });
  return ids;
}

void preorder(const LabeledForest& forest, int node, std::vector<int>& out) {
  out.push_back(node);
  for (int child : sorted_by_label(forest, forest.nodes[node].children)) {
    preorder(forest, child, out);
  }
}

void check_labels(const LabeledForest& forest, const VDLGraph& graph) {
  for (const auto& node : forest.nodes) {
    if (node.label < 0 || static_cast<std::size_t>(node.label) >= graph.m) {
      throw MalformedError("forest label " + std::to_string(node.label + 1) +
                           " outside 1.." + std::to_string(graph.m));
    }
  }
}

}  // namespace

std::vector<int> canonical_order(const LabeledForest& forest) {
  std::vector<int> out;
  out.reserve(forest.size());
  for (int root : sorted_by_label(forest, forest.roots)) preorder(forest, root, out);
  return out;
}

std::vector<int> canonical_labels(const LabeledForest& forest) {
  std::vector<int> labels;
  labels.reserve(forest.size());
  for (int id : canonical_order(forest)) labels.push_back(forest.nodes[id].label);
  return labels;
}

FeasibilityReport is_feasible(const LabeledForest& forest, const VDLGraph& graph) {
  check_labels(forest, graph);
  FeasibilityReport report;
  auto fail = [&](int condition, std::vector<int> witness) {
    report.feasible = false;
    report.violated_condition = condition;
    report.witness_nodes = std::move(witness);
  };

  std::set<int> root_labels;
  for (int root : forest.roots) {
    if (!root_labels.insert(forest.nodes[root].label).second) {
      fail(1, {root});
      return report;
    }
  }
  for (std::size_t u = 0; u < forest.nodes.size(); ++u) {
    const auto& node = forest.nodes[u];
    std::set<int> child_labels;
    for (int child : node.children) {
      if (!child_labels.insert(forest.nodes[child].label).second) {
        fail(2, {static_cast<int>(u), child});
        return report;
      }
      const int cl = forest.nodes[child].label;
      if (cl != node.label && !graph.has_edge(node.label, cl)) {
        fail(3, {static_cast<int>(u), child});
        return report;
      }
    }
  }
  return report;
}

LabeledForest witness_from_log(const ExecutionLog& log, const VDLGraph* check_graph) {
  LabeledForest forest;
  forest.nodes.resize(log.records.size());
  for (std::size_t r = 0; r < log.records.size(); ++r) {
    const auto& rec = log.records[r];
    forest.nodes[r].label = rec.event;
    if (rec.parent) {
      if (*rec.parent >= r) throw MalformedError("record parent points forward");
      if (log.records[*rec.parent].depth != rec.depth - 1) {
        throw MalformedError("record depth inconsistent with its parent");
      }
      forest.nodes[*rec.parent].children.push_back(static_cast<int>(r));
    } else {
      if (rec.depth != 0) throw MalformedError("parentless record with nonzero depth");
      forest.roots.push_back(static_cast<int>(r));
    }
  }
  if (check_graph && log.outcome == Outcome::Success) {
    const auto report = is_feasible(forest, *check_graph);
    if (!report.feasible) {
      throw InternalError("witness forest of a successful run violates feasibility condition " +
                          std::to_string(report.violated_condition));
    }
  }
  return forest;
}

ValResult val_alg(const EventSystem& system, const VDLGraph& graph, const LabeledForest& forest,
                  RandomTape& tape, const RoundObserver& observer) {
  const auto report = is_feasible(forest, graph);
  if (!report.feasible) {
    throw MalformedError("validation requires a feasible forest (condition " +
                         std::to_string(report.violated_condition) + " violated)");
  }
  const auto labels = canonical_labels(forest);
  Assignment a = sample(system, tape);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (observer) observer(s + 1, a);
    const Event& ev = system.event(labels[s]);
    if (!evaluate(ev, a)) return {false, s + 1};
    a = resample_step(system, ev, a, tape);
  }
  return {true, 0};
}

bool replay_check(const EventSystem& system, const VDLGraph& graph, std::uint64_t seed,
                  const SolveOptions& options) {
  RandomTape run_tape(seed);
  const ExecutionLog log = m_algorithm(system, graph, run_tape, options);
  const LabeledForest forest = witness_from_log(log, &graph);
  RandomTape replay_tape(seed);
  return val_alg(system, graph, forest, replay_tape).success;
}

LabeledForest complete_forest(const LabeledForest& forest, const VDLGraph& graph) {
  const auto feas = is_feasible(forest, graph);
  if (!feas.feasible) throw MalformedError("completion requires a feasible forest");
  const int m = static_cast<int>(graph.m);
  const int want = graph.d + 1;

  LabeledForest out;
  out.nodes = forest.nodes;
  out.roots = forest.roots;

  auto add_leaf = [&](int parent, int label) {
    out.nodes.push_back({label, {}});
    out.nodes[parent].children.push_back(static_cast<int>(out.nodes.size() - 1));
  };

  // Pad every original node: first cover Gamma(label)+{label}, then fill up
  // to d+1 children with the first event indices not already used.
  const std::size_t original = forest.nodes.size();
  for (std::size_t u = 0; u < original; ++u) {
    const int label = out.nodes[u].label;
    std::set<int> present;
    for (int child : out.nodes[u].children) present.insert(out.nodes[child].label);
    std::set<int> target(graph.gamma[label].begin(), graph.gamma[label].end());
    target.insert(label);
    if (static_cast<int>(target.size()) > want) {
      throw MalformedError("closed neighborhood of event " + std::to_string(label + 1) +
                           " exceeds d+1");
    }
    for (int t : target) {
      if (!present.count(t)) {
        add_leaf(static_cast<int>(u), t);
        present.insert(t);
      }
    }
    for (int cand = 0; cand < m && static_cast<int>(present.size()) < want; ++cand) {
      if (!present.count(cand)) {
        add_leaf(static_cast<int>(u), cand);
        present.insert(cand);
      }
    }
    auto& ch = out.nodes[u].children;
    std::sort(ch.begin(), ch.end(),
              [&](int a, int b) { return out.nodes[a].label < out.nodes[b].label; });
  }

  // Single-leaf trees for the root labels not yet present.
  std::set<int> root_labels;
  for (int r : out.roots) root_labels.insert(out.nodes[r].label);
  for (int e = 0; e < m; ++e) {
    if (!root_labels.count(e)) {
      out.nodes.push_back({e, {}});
      out.roots.push_back(static_cast<int>(out.nodes.size() - 1));
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [&](int a, int b) { return out.nodes[a].label < out.nodes[b].label; });
  return out;
}

namespace {

struct TmpTree {
  int label;
  std::vector<TmpTree> kids;
};

class FeasibleEnumerator {
 public:
  FeasibleEnumerator(const VDLGraph& graph, std::uint64_t budget)
      : graph_(graph), budget_(budget) {}

  std::vector<std::vector<TmpTree>> forests(int min_label, std::size_t n) {
    std::vector<std::vector<TmpTree>> out;
    if (n == 0) {
      out.push_back({});
      return out;
    }
    for (int root = min_label; root < static_cast<int>(graph_.m); ++root) {
      for (std::size_t size = 1; size <= n; ++size) {
        const auto heads = trees(root, size);
        if (heads.empty()) continue;
        const auto tails = forests(root + 1, n - size);
        for (const auto& head : heads) {
          for (const auto& tail : tails) {
            charge();
            std::vector<TmpTree> forest;
            forest.reserve(tail.size() + 1);
            forest.push_back(head);
            forest.insert(forest.end(), tail.begin(), tail.end());
            out.push_back(std::move(forest));
          }
        }
      }
    }
    return out;
  }

 private:
  void charge() {
    if (++work_ > budget_) {
      throw BudgetError("feasible-forest enumeration exceeds the enumeration budget");
    }
  }

  // All trees rooted at `label` with exactly `size` nodes: children carry
  // distinct labels from the closed out-neighborhood, listed in label order.
  std::vector<TmpTree> trees(int label, std::size_t size) {
    std::vector<TmpTree> out;
    if (size == 1) {
      charge();
      out.push_back({label, {}});
      return out;
    }
    std::vector<int> allowed = graph_.gamma[label];
    allowed.insert(std::upper_bound(allowed.begin(), allowed.end(), label), label);
    std::vector<TmpTree> partial;
    extend(allowed, 0, size - 1, partial, label, out);
    return out;
  }

  // Chooses the remaining children (labels strictly increasing within
  // `allowed` from position `from`) and splits `remaining` nodes among them.
  void extend(const std::vector<int>& allowed, std::size_t from, std::size_t remaining,
              std::vector<TmpTree>& partial, int label, std::vector<TmpTree>& out) {
    if (remaining == 0) {
      charge();
      out.push_back({label, partial});
      return;
    }
    for (std::size_t k = from; k < allowed.size(); ++k) {
      for (std::size_t size = 1; size <= remaining; ++size) {
        for (const auto& sub : trees(allowed[k], size)) {
          partial.push_back(sub);
          extend(allowed, k + 1, remaining - size, partial, label, out);
          partial.pop_back();
        }
      }
    }
  }

  const VDLGraph& graph_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
};

void flatten(const TmpTree& tree, LabeledForest& forest, int parent) {
  forest.nodes.push_back({tree.label, {}});
  const int id = static_cast<int>(forest.nodes.size() - 1);
  if (parent < 0) {
    forest.roots.push_back(id);
  } else {
    forest.nodes[parent].children.push_back(id);
  }
  for (const auto& kid : tree.kids) flatten(kid, forest, id);
}

}  // namespace

std::vector<LabeledForest> enumerate_feasible(const VDLGraph& graph, std::size_t n,
                                              const Budget& budget) {
  FeasibleEnumerator enumerator(graph, budget.enumeration);
  std::vector<LabeledForest> out;
  for (const auto& tmp : enumerator.forests(0, n)) {
    LabeledForest forest;
    for (const auto& tree : tmp) flatten(tree, forest, -1);
    out.push_back(std::move(forest));
  }
  return out;
}

}  // namespace lll
