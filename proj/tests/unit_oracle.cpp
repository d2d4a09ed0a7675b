#include <doctest.h>

#include <random>

#include "lll/oracle.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"

using namespace lll;
using testsupport::bernoulli_triple;

TEST_CASE("full table of the fixture at x=1/2") {
  const auto sys = bernoulli_triple(Rational(1, 2));
  const auto table = build_omega_serial(sys);
  CHECK(table.rows == 32);
  for (const auto& w : table.weights) CHECK(w == Rational(1, 32));
  Rational total = 0;
  for (const auto& w : table.weights) total += w;
  CHECK(total == 1);
  CHECK(omega_probability(table, 0) == Rational(3, 8));
  CHECK(omega_probability(table, 1) == Rational(1, 4));
}

TEST_CASE("table rows carry the given weights") {
  const EventSystem sys(
      {VariableSpec{3, {Rational(1, 2), Rational(1, 3), Rational(1, 6)}}}, {});
  const auto table = build_omega_serial(sys);
  REQUIRE(table.rows == 3);
  CHECK(table.weights[0] == Rational(1, 2));
  CHECK(table.weights[1] == Rational(1, 3));
  CHECK(table.weights[2] == Rational(1, 6));
  CHECK(table.row_assignment(1).values == std::vector<int>{1});
}

TEST_CASE("weighted indicator sums equal scope-enumeration probabilities") {
  const auto quarter = bernoulli_triple(Rational(1, 4));
  const auto table = build_omega_serial(quarter);
  CHECK(omega_probability(table, 1) == Rational(3, 16));  // x(1-x) at x = 1/4

  std::mt19937_64 rng(51);
  for (int round = 0; round < 50; ++round) {
    const auto sys = testsupport::random_system(rng);
    const auto rtable = build_omega_serial(sys);
    for (std::size_t e = 0; e < sys.num_events(); ++e) {
      CHECK(omega_probability(rtable, e) == event_probability(sys, e));
    }
  }
}

TEST_CASE("exact conditionals") {
  const auto sys = bernoulli_triple(Rational(1, 2));
  const auto table = build_omega_serial(sys);

  const auto unconditional = exact_conditional(table, 0, {});
  REQUIRE(unconditional.has_value());
  CHECK(*unconditional == Rational(3, 8));

  // Conditioning on the complement of a sure event is undefined.
  const EventSystem with_omega(
      sys.variables(), {{sys.event(0).expr, {}}, {EventExpr{{{}}}, {}}});
  const auto omega_table = build_omega_serial(with_omega);
  CHECK_FALSE(exact_conditional(omega_table, 0, {1}).has_value());
}

TEST_CASE("lexicographically first good assignment") {
  const auto sys = bernoulli_triple(Rational(1, 2));
  const auto table = build_omega_serial(sys);
  const auto good = exists_good_assignment(table);
  REQUIRE(good.has_value());

  // Independent scan in lexicographic order.
  std::optional<std::vector<int>> expected;
  std::vector<int> values(5, 0);
  bool done = false;
  std::function<void(std::size_t)> scan = [&](std::size_t at) {
    if (done) return;
    if (at == 5) {
      for (const auto& event : sys.events()) {
        if (testsupport::brute::eval(event.expr, values)) return;
      }
      expected = values;
      done = true;
      return;
    }
    for (int v = 0; v < 2 && !done; ++v) {
      values[at] = v;
      scan(at + 1);
    }
  };
  scan(0);
  REQUIRE(expected.has_value());
  CHECK(good->values == *expected);
  CHECK(good->values == std::vector<int>{0, 1, 0, 0, 0});

  // The run-of-the-algorithm answer is also event-free, just not the first.
  const Assignment other{{1, 1, 0, 0, 1}};
  for (const auto& event : sys.events()) CHECK_FALSE(evaluate(event, other));

  const EventSystem blocked(sys.variables(), {{EventExpr{{{}}}, {}}});
  CHECK_FALSE(exists_good_assignment(build_omega_serial(blocked)).has_value());
}

TEST_CASE("omega budget") {
  std::vector<VariableSpec> vars(30, VariableSpec{2, {Rational(1, 2), Rational(1, 2)}});
  const EventSystem sys(vars, {});
  Budget tiny;
  tiny.omega = 1 << 16;
  CHECK_THROWS_AS(build_omega_serial(sys, tiny), BudgetError);
}

TEST_CASE("survival statistics basics") {
  // No events: a single trial finishes in zero rounds.
  const EventSystem empty({VariableSpec{2, {Rational(1, 2), Rational(1, 2)}}}, {});
  const auto empty_graph = build_vdl_graph_serial(empty);
  SolveOptions options;
  options.max_rounds = 100;
  const auto stats = estimate_survival_serial(empty, empty_graph, 1, options, 5);
  CHECK(stats.trials == 1);
  CHECK(stats.rounds_histogram.at(0) == 1);
  CHECK(stats.p_hat(0) == 1.0);
  CHECK(stats.p_hat(1) == 0.0);
  CHECK(stats.limited == 0);

  const auto sys = bernoulli_triple(Rational(4, 5));
  const auto graph = build_vdl_graph_serial(sys);
  const auto a = estimate_survival_serial(sys, graph, 500, options, 99);
  const auto b = estimate_survival_serial(sys, graph, 500, options, 99);
  CHECK(a.rounds_histogram == b.rounds_histogram);
  CHECK(a.survivors == b.survivors);
  for (std::size_t n = 1; n < a.survivors.size(); ++n) {
    CHECK(a.survivors[n] <= a.survivors[n - 1]);
  }
  CHECK(a.p_hat(0) == 1.0);
}
