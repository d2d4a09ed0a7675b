#include <doctest.h>

#include <random>
#include <set>

#include "lll/dependency.hpp"
#include "lll/oracle.hpp"
#include "lll/sat.hpp"

using namespace lll;

TEST_CASE("parsing the basics") {
  const auto parsed = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(parsed.instance.num_vars == 2);
  REQUIRE(parsed.instance.clauses.size() == 1);
  CHECK(parsed.instance.clauses[0] == std::vector<int>{1, -2});
  CHECK(parsed.warnings.empty());

  const auto multi = parse_dimacs("c header comment\np cnf 3 2\n1 2 0 -3\n1 0\n");
  CHECK(multi.instance.clauses.size() == 2);
  CHECK(multi.instance.clauses[1] == std::vector<int>{-3, 1});
}

TEST_CASE("tautological clauses are dropped with a warning") {
  const auto parsed = parse_dimacs("p cnf 1 1\n1 -1 0\n");
  CHECK(parsed.instance.clauses.empty());
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].find("tautological") != std::string::npos);
  CHECK(sat_to_system(parsed.instance).num_events() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const char* text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("p dnf 2 1\n1 0\n").find("line 1") != std::string::npos);
  CHECK(message_of("p cnf 2 1\n3 0\n").find("line 2") != std::string::npos);
  CHECK(message_of("p cnf 2 1\n1 2\n").find("terminator") != std::string::npos);
  CHECK(message_of("p cnf 2 2\n1 0\n").find("clauses") != std::string::npos);
  CHECK(message_of("1 0\n").find("header") != std::string::npos);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\nx 0\n"), ParseError);
}

TEST_CASE("writer and parser are mutually inverse") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 20; ++round) {
    const auto instance = random_bounded_sat(10 + round % 5, 4, 2, rng());
    const std::string text = write_dimacs(instance);
    const auto reparsed = parse_dimacs(text);
    CHECK(reparsed.instance == instance);
    CHECK(write_dimacs(reparsed.instance) == text);
  }

  // Comment lines vanish, everything else survives byte-for-byte.
  const auto base = random_bounded_sat(6, 4, 2, 99);
  const std::string canonical = write_dimacs(base);
  std::string with_comments = "c generated instance\n" + canonical + "c trailing note\n";
  CHECK(write_dimacs(parse_dimacs(with_comments).instance) == canonical);
}

TEST_CASE("clause falsification events") {
  // (x1 or not x2): falsified by x1=0, x2=1, probability 1/4.
  const auto parsed = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  const auto sys = sat_to_system(parsed.instance);
  REQUIRE(sys.num_events() == 1);
  CHECK(event_probability(sys, 0) == Rational(1, 4));
  CHECK(evaluate(sys.event(0), Assignment{{0, 1}}));
  CHECK_FALSE(evaluate(sys.event(0), Assignment{{1, 1}}));
  CHECK(sys.event(0).scope == std::vector<int>{0, 1});

  // An empty clause is never satisfiable: the event is sure.
  const auto empty_clause = parse_dimacs("p cnf 2 1\n0\n");
  const auto hopeless = sat_to_system(empty_clause.instance);
  CHECK(event_probability(hopeless, 0) == 1);
  CHECK(hopeless.event(0).scope.empty());
}

TEST_CASE("same-polarity sharing creates no directed dependency") {
  const auto parsed = parse_dimacs("p cnf 5 2\n1 2 3 0\n1 4 5 0\n");
  const auto sys = sat_to_system(parsed.instance);
  CHECK_FALSE(is_vdl(sys, 0, 1));
  CHECK_FALSE(is_vdl(sys, 1, 0));
  const auto table = build_omega_serial(sys);
  CHECK_FALSE(is_vdl_full(sys, table, 0, 1));
  CHECK_FALSE(is_vdl_full(sys, table, 1, 0));

  // Flipping the shared variable's polarity creates the conflict edges.
  const auto flipped = sat_to_system(parse_dimacs("p cnf 5 2\n1 2 3 0\n-1 4 5 0\n").instance);
  CHECK(is_vdl(flipped, 0, 1));
  CHECK(is_vdl(flipped, 1, 0));
}

TEST_CASE("satisfaction helpers agree with event evaluation") {
  const auto instance = random_bounded_sat(8, 4, 2, 7);
  const auto sys = sat_to_system(instance);
  std::mt19937_64 rng(62);
  for (int round = 0; round < 50; ++round) {
    Assignment a;
    for (int v = 0; v < instance.num_vars; ++v) a.values.push_back(rng() % 2);
    bool any_event = false;
    for (std::size_t e = 0; e < sys.num_events(); ++e) {
      any_event = any_event || evaluate(sys.event(e), a);
    }
    CHECK(instance_satisfied(instance, a) == !any_event);
  }
}

TEST_CASE("generator respects the occurrence bound") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto instance = random_bounded_sat(20, 4, 2, seed);
    std::vector<int> occurrences(instance.num_vars, 0);
    for (const auto& clause : instance.clauses) {
      CHECK(clause.size() == 4);
      std::set<int> vars;
      for (int literal : clause) {
        vars.insert(std::abs(literal));
        ++occurrences[std::abs(literal) - 1];
      }
      CHECK(vars.size() == 4);  // distinct variables, hence no tautologies
    }
    for (int count : occurrences) CHECK(count <= 2);
  }
}
