#include "lll/model.hpp"

#include <algorithm>
#include <set>

namespace lll {

namespace {

void validate_variables(const std::vector<VariableSpec>& variables) {
  for (std::size_t v = 0; v < variables.size(); ++v) {
    const auto& spec = variables[v];
    if (spec.domain_size < 1) {
      throw MalformedError("variable " + std::to_string(v) + ": domain_size must be >= 1");
    }
    if (spec.weights.size() != static_cast<std::size_t>(spec.domain_size)) {
      throw MalformedError("variable " + std::to_string(v) + ": weight count != domain_size");
    }
    Rational total = 0;
    for (const auto& w : spec.weights) {
      if (w < 0) throw MalformedError("variable " + std::to_string(v) + ": negative weight");
      total += w;
    }
    if (total != 1) {
      throw MalformedError("variable " + std::to_string(v) + ": weights sum to " +
                           format_rational(total) + ", expected 1");
    }
  }
}

void validate_expr(const EventExpr& expr, const std::vector<VariableSpec>& variables,
                   std::size_t event_pos) {
  for (const auto& term : expr.terms) {
    for (const auto& atom : term) {
      if (atom.var < 0 || static_cast<std::size_t>(atom.var) >= variables.size()) {
        throw MalformedError("event " + std::to_string(event_pos + 1) +
                             ": atom references variable " + std::to_string(atom.var));
      }
      if (atom.value < 0 || atom.value >= variables[atom.var].domain_size) {
        throw MalformedError("event " + std::to_string(event_pos + 1) +
                             ": atom references value " + std::to_string(atom.value) +
                             " outside the domain of variable " + std::to_string(atom.var));
      }
    }
  }
}

std::vector<int> atom_variables(const EventExpr& expr) {
  std::set<int> vars;
  for (const auto& term : expr.terms) {
    for (const auto& atom : term) vars.insert(atom.var);
  }
  return {vars.begin(), vars.end()};
}

}  // namespace

EventSystem::EventSystem(std::vector<VariableSpec> variables, std::vector<EventSpec> events,
                         const Budget& budget)
    : variables_(std::move(variables)) {
  validate_variables(variables_);
  events_.reserve(events.size());
  for (std::size_t pos = 0; pos < events.size(); ++pos) {
    auto& spec = events[pos];
    validate_expr(spec.expr, variables_, pos);
    Event ev;
    ev.expr = std::move(spec.expr);
    ev.pos = pos;
    std::set<int> declared;
    for (int v : atom_variables(ev.expr)) declared.insert(v);
    for (int v : spec.extra_scope) {
      if (v < 0 || static_cast<std::size_t>(v) >= variables_.size()) {
        throw MalformedError("event " + std::to_string(pos + 1) +
                             ": declared scope references variable " + std::to_string(v));
      }
      declared.insert(v);
    }
    ev.declared_scope.assign(declared.begin(), declared.end());
    try {
      ev.scope = minimal_scope(ev.expr, ev.declared_scope, variables_, budget.enumeration);
      ev.scope_minimized = true;
    } catch (const BudgetError&) {
      ev.scope = ev.declared_scope;  // conservative fallback
      ev.scope_minimized = false;
    }
    events_.push_back(std::move(ev));
  }
}

bool evaluate_expr(const EventExpr& expr, const Assignment& a) {
  for (const auto& term : expr.terms) {
    bool all = true;
    for (const auto& atom : term) {
      const bool eq = a.values[atom.var] == atom.value;
      if (eq != (atom.rel == Rel::Eq)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool evaluate(const Event& event, const Assignment& a) {
  return evaluate_expr(event.expr, a);
}

std::vector<int> minimal_scope(const EventExpr& expr, const std::vector<int>& declared_scope,
                               const std::vector<VariableSpec>& variables, std::uint64_t budget) {
  if (declared_scope.empty()) return {};
  const std::uint64_t total = scope_product(declared_scope, variables, budget);
  if (total > budget) {
    throw BudgetError("scope minimization over " + std::to_string(declared_scope.size()) +
                      " variables exceeds the enumeration budget");
  }
  Assignment a;
  a.values.assign(variables.size(), 0);
  std::vector<int> relevant;
  for (int v : declared_scope) {
    std::vector<int> others;
    others.reserve(declared_scope.size() - 1);
    for (int u : declared_scope) {
      if (u != v) others.push_back(u);
    }
    const std::uint64_t combos = total / static_cast<std::uint64_t>(variables[v].domain_size);
    bool flips = false;
    for (std::uint64_t idx = 0; idx < combos && !flips; ++idx) {
      decode_assignment(idx, others, variables, a);
      a.values[v] = 0;
      const bool base = evaluate_expr(expr, a);
      for (int val = 1; val < variables[v].domain_size; ++val) {
        a.values[v] = val;
        if (evaluate_expr(expr, a) != base) {
          flips = true;
          break;
        }
      }
    }
    if (flips) relevant.push_back(v);
  }
  return relevant;
}

std::vector<int> minimal_scope(const EventSystem& system, std::size_t event_idx,
                               const Budget& budget) {
  const Event& ev = system.event(event_idx);
  return minimal_scope(ev.expr, ev.declared_scope, system.variables(), budget.enumeration);
}

Rational event_probability(const EventSystem& system, std::size_t event_idx,
                           const Budget& budget) {
  const Event& ev = system.event(event_idx);
  const auto& vars = system.variables();
  const std::uint64_t total = scope_product(ev.scope, vars, budget.enumeration);
  if (total > budget.enumeration) {
    throw BudgetError("probability enumeration for event " + std::to_string(ev.index()) +
                      " exceeds the enumeration budget");
  }
  Assignment a;
  a.values.assign(vars.size(), 0);
  Rational sum = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_assignment(idx, ev.scope, vars, a);
    if (!evaluate_expr(ev.expr, a)) continue;
    Rational w = 1;
    for (int v : ev.scope) w *= vars[v].weights[a.values[v]];
    sum += w;
  }
  return sum;
}

Rational max_probability(const EventSystem& system, const Budget& budget) {
  Rational best = 0;
  for (std::size_t e = 0; e < system.num_events(); ++e) {
    Rational p = event_probability(system, e, budget);
    if (p > best) best = std::move(p);
  }
  return best;
}

std::uint64_t scope_product(const std::vector<int>& vars,
                            const std::vector<VariableSpec>& variables, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int v : vars) {
    const auto dom = static_cast<std::uint64_t>(variables[v].domain_size);
    if (total > cap / dom + 1) return cap + 1;
    total *= dom;
    if (total > cap) return cap + 1;
  }
  return total;
}

void decode_assignment(std::uint64_t idx, const std::vector<int>& vars,
                       const std::vector<VariableSpec>& variables, Assignment& a) {
  for (std::size_t k = vars.size(); k-- > 0;) {
    const int v = vars[k];
    const auto dom = static_cast<std::uint64_t>(variables[v].domain_size);
    a.values[v] = static_cast<int>(idx % dom);
    idx /= dom;
  }
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace lll
