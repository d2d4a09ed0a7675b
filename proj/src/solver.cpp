#include "lll/solver.hpp"

#include <algorithm>

namespace lll {

namespace {

int least_occurring(const EventSystem& system, const Assignment& a) {
  for (std::size_t e = 0; e < system.num_events(); ++e) {
    if (evaluate(system.event(e), a)) return static_cast<int>(e);
  }
  return -1;
}

int least_occurring_among(const EventSystem& system, const Assignment& a,
                          const std::vector<int>& candidates) {
  for (int e : candidates) {
    if (evaluate(system.event(e), a)) return e;
  }
  return -1;
}

}  // namespace

ExecutionLog m_algorithm(const EventSystem& system, const VDLGraph& graph, RandomTape& tape,
                         const SolveOptions& options) {
  if (graph.m != system.num_events()) {
    throw MalformedError("dependency graph does not match the event system");
  }
  if (options.max_rounds < 1) throw MalformedError("max_rounds must be >= 1");

  // Closed out-neighborhoods Gamma(e) + {e}, sorted, reused per call.
  std::vector<std::vector<int>> closed(graph.m);
  for (std::size_t e = 0; e < graph.m; ++e) {
    closed[e] = graph.gamma[e];
    closed[e].insert(std::upper_bound(closed[e].begin(), closed[e].end(), static_cast<int>(e)),
                     static_cast<int>(e));
  }

  ExecutionLog log;
  log.seed = tape.seed();
  Assignment a = sample(system, tape);
  log.initial_assignment = a;
  if (options.snapshots) log.snapshots.push_back(a);

  // The recursion of the resample procedure is realized with an explicit
  // stack; the while-loop of each call re-examines its closed neighborhood
  // after every child call returns, exactly as the recursive form does.
  struct Frame {
    int event;
    std::size_t record;
  };
  std::vector<Frame> stack;

  bool limit_hit = false;
  auto start_call = [&](int event, std::optional<std::size_t> parent) -> bool {
    if (log.records.size() >= options.max_rounds) {
      limit_hit = true;
      return false;
    }
    if (stack.size() >= options.depth_limit) {
      throw LimitError("resample recursion exceeded the depth limit of " +
                       std::to_string(options.depth_limit));
    }
    ResampleRecord rec;
    rec.event = event;
    rec.depth = static_cast<int>(stack.size());
    rec.parent = parent;
    rec.round = log.records.size() + 1;
    log.records.push_back(rec);
    a = resample_step(system, system.event(event), a, tape);
    if (options.snapshots) log.snapshots.push_back(a);
    stack.push_back({event, log.records.size() - 1});
    return true;
  };

  while (!limit_hit) {
    const int root = least_occurring(system, a);
    if (root < 0) break;
    if (!start_call(root, std::nullopt)) break;
    while (!stack.empty() && !limit_hit) {
      const Frame frame = stack.back();
      const int next = least_occurring_among(system, a, closed[frame.event]);
      if (next < 0) {
        log.records[frame.record].completed = true;
        log.records[frame.record].subtree_end_round = log.records.size();
        stack.pop_back();
      } else {
        start_call(next, frame.record);
      }
    }
  }

  log.final_assignment = a;
  log.rounds = log.records.size();
  log.outcome = limit_hit ? Outcome::RoundLimit : Outcome::Success;
  return log;
}

ProgressReport assert_progress(const ExecutionLog& log, const EventSystem& system) {
  if (log.snapshots.size() != log.rounds + 1) {
    throw MalformedError("assert_progress requires a log recorded with snapshots enabled");
  }
  ProgressReport report;
  for (std::size_t r = 0; r < log.records.size(); ++r) {
    const auto& rec = log.records[r];
    if (!rec.completed) continue;
    const Assignment& start = log.snapshots[rec.round - 1];
    const Assignment& end = log.snapshots[rec.subtree_end_round];
    for (std::size_t e = 0; e < system.num_events(); ++e) {
      const bool watched =
          e == static_cast<std::size_t>(rec.event) || !evaluate(system.event(e), start);
      if (watched && evaluate(system.event(e), end)) {
        report.holds = false;
        report.violating_record = r;
        report.violating_event = static_cast<int>(e);
        return report;
      }
    }
  }
  return report;
}

std::vector<int> root_call_indices(const ExecutionLog& log) {
  std::vector<int> roots;
  for (const auto& rec : log.records) {
    if (rec.depth == 0) roots.push_back(rec.event + 1);
  }
  return roots;
}

}  // namespace lll
