#include "support/generators.hpp"

#include <numeric>

namespace testsupport {

using namespace lll;

EventSystem bernoulli_triple(const Rational& x) {
  std::vector<VariableSpec> vars(5, VariableSpec{2, {Rational(1) - x, x}});
  EventExpr e1{{
      {{0, Rel::Eq, 0}, {1, Rel::Eq, 0}},
      {{2, Rel::Eq, 1}, {1, Rel::Eq, 0}},
  }};
  EventExpr e2{{{{2, Rel::Eq, 1}, {3, Rel::Eq, 0}}}};
  EventExpr e3{{{{3, Rel::Eq, 1}, {4, Rel::Eq, 0}}}};
  return EventSystem(std::move(vars), {{e1, {}}, {e2, {}}, {e3, {}}});
}

EventSystem unit_events(std::size_t count) {
  std::vector<VariableSpec> vars(count, VariableSpec{2, {Rational(1, 2), Rational(1, 2)}});
  std::vector<EventSpec> events;
  for (std::size_t i = 0; i < count; ++i) {
    events.push_back({EventExpr{{{{static_cast<int>(i), Rel::Eq, 1}}}}, {}});
  }
  return EventSystem(std::move(vars), std::move(events));
}

EventSystem random_system(std::mt19937_64& rng, const RandomSystemOptions& options) {
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int l = pick(1, options.max_vars);
  std::vector<VariableSpec> vars;
  for (int v = 0; v < l; ++v) {
    const int domain = pick(2, options.max_domain);
    VariableSpec spec;
    spec.domain_size = domain;
    if (rng() % 2 == 0) {
      for (int k = 0; k < domain; ++k) spec.weights.emplace_back(1, domain);
      // Domains not dividing evenly get the remainder on value 0.
      Rational total = std::accumulate(spec.weights.begin(), spec.weights.end(), Rational(0));
      spec.weights[0] += Rational(1) - total;
    } else {
      std::vector<int> raw(domain);
      int sum = 0;
      for (int k = 0; k < domain; ++k) {
        raw[k] = pick(1, 6);
        sum += raw[k];
      }
      for (int k = 0; k < domain; ++k) spec.weights.emplace_back(raw[k], sum);
    }
    vars.push_back(std::move(spec));
  }
  const int m = pick(1, options.max_events);
  std::vector<EventSpec> events;
  for (int e = 0; e < m; ++e) {
    EventExpr expr;
    const int terms = options.sparse ? 1 : pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      Term term;
      const int atoms = options.sparse ? pick(2, std::max(2, l)) : pick(1, 3);
      for (int a = 0; a < atoms; ++a) {
        const int var = pick(0, l - 1);
        const Rel rel = (!options.sparse && rng() % 3 == 0) ? Rel::Ne : Rel::Eq;
        term.push_back({var, rel, pick(0, vars[var].domain_size - 1)});
      }
      expr.terms.push_back(std::move(term));
    }
    events.push_back({std::move(expr), {}});
  }
  return EventSystem(std::move(vars), std::move(events));
}

EventExpr complement_expr(const EventExpr& expr, const std::vector<int>& scope,
                          const std::vector<VariableSpec>& variables) {
  EventExpr complement;
  Assignment a;
  a.values.assign(variables.size(), 0);
  const std::uint64_t total = scope_product(scope, variables, std::uint64_t{1} << 30);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_assignment(idx, scope, variables, a);
    if (evaluate_expr(expr, a)) continue;
    Term row;
    for (int v : scope) row.push_back({v, Rel::Eq, a.values[v]});
    complement.terms.push_back(std::move(row));
  }
  if (scope.empty() && !evaluate_expr(expr, a)) {
    complement.terms.push_back({});  // complement of the impossible event
  }
  return complement;
}

}  // namespace testsupport
