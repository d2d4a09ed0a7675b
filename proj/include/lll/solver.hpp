#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lll/dependency.hpp"
#include "lll/tape.hpp"

namespace lll {

struct SolveOptions {
  std::uint64_t max_rounds = 1'000'000;
  std::uint64_t depth_limit = 1'000'000;
  bool snapshots = false;  // keep a per-round assignment trail for assert_progress
};

// One resample call. Rounds are 1-based and consecutive; a root call has
// depth 0 and no parent. subtree_end_round is the last round executed inside
// this call (itself included) and is only meaningful once completed.
struct ResampleRecord {
  int event = 0;  // 0-based event id
  int depth = 0;
  std::optional<std::size_t> parent;  // index into the record list
  std::size_t round = 0;
  std::size_t subtree_end_round = 0;
  bool completed = false;
};

enum class Outcome { Success, RoundLimit };

struct ExecutionLog {
  std::uint64_t seed = 0;
  Assignment initial_assignment;
  Assignment final_assignment;
  std::vector<ResampleRecord> records;
  std::size_t rounds = 0;
  Outcome outcome = Outcome::Success;
  // snapshots[r] = assignment after round r; snapshots[0] = initial. Present
  // only when SolveOptions::snapshots was set.
  std::vector<Assignment> snapshots;
};

// Samples every variable, then while any event occurs picks the least-indexed
// one and resamples it recursively: a call on event e redraws sc(e) and keeps
// recursing on the least-indexed occurring event among Gamma(e) and e itself
// until none occurs. Each call is one round. On success the final assignment
// avoids every event. When the next call would exceed max_rounds the run
// stops with Outcome::RoundLimit and the partial log. Exceeding depth_limit
// throws LimitError.
ExecutionLog m_algorithm(const EventSystem& system, const VDLGraph& graph, RandomTape& tape,
                         const SolveOptions& options = {});

// Verifies, over a snapshot-enabled log, that every completed call left all
// events that were non-occurring at its start, plus its own event,
// non-occurring at its end. A violation indicates an implementation bug.
struct ProgressReport {
  bool holds = true;
  std::optional<std::size_t> violating_record;
  std::optional<int> violating_event;  // 0-based
};
ProgressReport assert_progress(const ExecutionLog& log, const EventSystem& system);

// 1-based event indices of the root calls in chronological order. Always
// pairwise distinct and strictly increasing for logs produced above.
std::vector<int> root_call_indices(const ExecutionLog& log);

}  // namespace lll
