#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lll/errors.hpp"
#include "lll/rational.hpp"

namespace lll {

// One finite-domain variable with exact rational value weights. Weights are
// indexed by value, must be nonnegative and must sum to exactly 1.
struct VariableSpec {
  int domain_size = 0;
  std::vector<Rational> weights;
};

// A point of the product space: one value index per variable.
struct Assignment {
  std::vector<int> values;

  bool operator==(const Assignment&) const = default;
};

enum class Rel : std::uint8_t { Eq, Ne };

struct Atom {
  int var = 0;
  Rel rel = Rel::Eq;
  int value = 0;
};

// Conjunction of atoms. An empty term is always true.
using Term = std::vector<Atom>;

// Disjunctive normal form. No terms at all is the impossible event; a single
// empty term is the sure event.
struct EventExpr {
  std::vector<Term> terms;
};

// Construction-time description of an event: the expression plus any extra
// variables the caller wants counted into the declared scope.
struct EventSpec {
  EventExpr expr;
  std::vector<int> extra_scope;
};

struct Event {
  EventExpr expr;
  std::vector<int> declared_scope;  // sorted; atom variables plus extras
  std::vector<int> scope;           // sorted; minimal when scope_minimized
  bool scope_minimized = true;
  std::size_t pos = 0;  // 0-based position in the system

  int index() const { return static_cast<int>(pos) + 1; }
};

// Immutable system of independent variables and ordered events. Construction
// validates every invariant (weight sums, atom ranges) and computes minimal
// scopes where the enumeration budget allows; events whose declared scope is
// too large to minimize keep it, flagged with scope_minimized = false.
class EventSystem {
 public:
  EventSystem(std::vector<VariableSpec> variables, std::vector<EventSpec> events,
              const Budget& budget = {});

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_events() const { return events_.size(); }
  const VariableSpec& variable(std::size_t v) const { return variables_[v]; }
  const Event& event(std::size_t e) const { return events_[e]; }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const std::vector<Event>& events() const { return events_; }

 private:
  std::vector<VariableSpec> variables_;
  std::vector<Event> events_;
};

bool evaluate_expr(const EventExpr& expr, const Assignment& a);
bool evaluate(const Event& event, const Assignment& a);

// Relevance-tested minimal scope: a variable stays iff two assignments that
// differ only in it evaluate differently. Enumerates the declared-scope
// product space; throws BudgetError when that exceeds `budget`.
std::vector<int> minimal_scope(const EventExpr& expr, const std::vector<int>& declared_scope,
                               const std::vector<VariableSpec>& variables, std::uint64_t budget);
std::vector<int> minimal_scope(const EventSystem& system, std::size_t event_idx,
                               const Budget& budget = {});

// Exact probability by enumeration over the event's scope.
Rational event_probability(const EventSystem& system, std::size_t event_idx,
                           const Budget& budget = {});

// Maximum event probability; 0 for an empty event list.
Rational max_probability(const EventSystem& system, const Budget& budget = {});

// --- enumeration helpers shared by the dependency and oracle modules ---

// Product of domain sizes over `vars`, capped: returns cap + 1 on overflow.
std::uint64_t scope_product(const std::vector<int>& vars,
                            const std::vector<VariableSpec>& variables, std::uint64_t cap);

// Writes the `idx`-th assignment of the sub-space spanned by sorted `vars`
// into `a` (variable 0 varies slowest, so idx order is lexicographic).
void decode_assignment(std::uint64_t idx, const std::vector<int>& vars,
                       const std::vector<VariableSpec>& variables, Assignment& a);

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace lll
