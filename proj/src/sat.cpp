#include "lll/sat.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace lll {

DimacsResult parse_dimacs(std::string_view text) {
  DimacsResult result;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int expected_clauses = 0;
  std::vector<int> current;
  bool open_clause = false;
  int parsed_clauses = 0;

  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (have_header) fail("duplicate header");
      std::istringstream hs(line);
      std::string p, cnf;
      hs >> p >> cnf >> result.instance.num_vars >> expected_clauses;
      if (hs.fail() || p != "p" || cnf != "cnf" || result.instance.num_vars < 0 ||
          expected_clauses < 0) {
        fail("malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (hs >> extra) fail("trailing tokens after header");
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause data before header");
    std::istringstream ls(line);
    int literal = 0;
    while (ls >> literal) {
      if (literal == 0) {
        if (parsed_clauses == expected_clauses) fail("more clauses than the header declares");
        ++parsed_clauses;
        std::set<int> seen(current.begin(), current.end());
        const bool tautological = std::any_of(current.begin(), current.end(),
                                              [&](int l) { return seen.count(-l) > 0; });
        if (tautological) {
          result.warnings.push_back("line " + std::to_string(line_no) +
                                    ": tautological clause dropped");
        } else {
          result.instance.clauses.push_back(current);
        }
        current.clear();
        open_clause = false;
      } else {
        if (std::abs(literal) > result.instance.num_vars) {
          fail("literal " + std::to_string(literal) + " out of range");
        }
        current.push_back(literal);
        open_clause = true;
      }
    }
    if (!ls.eof()) fail("unexpected token");
  }
  line_no = std::max(line_no, 1);
  if (!have_header) fail("missing header");
  if (open_clause) fail("clause missing its 0 terminator");
  if (parsed_clauses != expected_clauses) {
    fail("header declares " + std::to_string(expected_clauses) + " clauses, found " +
         std::to_string(parsed_clauses));
  }
  return result;
}

std::string write_dimacs(const SatInstance& instance) {
  std::ostringstream out;
  out << "p cnf " << instance.num_vars << ' ' << instance.clauses.size() << '\n';
  for (const auto& clause : instance.clauses) {
    for (int literal : clause) out << literal << ' ';
    out << "0\n";
  }
  return out.str();
}

EventSystem sat_to_system(const SatInstance& instance) {
  std::vector<VariableSpec> variables(
      instance.num_vars, VariableSpec{2, {Rational(1, 2), Rational(1, 2)}});
  std::vector<EventSpec> events;
  events.reserve(instance.clauses.size());
  for (const auto& clause : instance.clauses) {
    Term falsified;
    falsified.reserve(clause.size());
    for (int literal : clause) {
      // The clause is falsified when every literal is: a positive literal
      // forces value 0, a negative one forces value 1.
      falsified.push_back({std::abs(literal) - 1, Rel::Eq, literal > 0 ? 0 : 1});
    }
    events.push_back({EventExpr{{falsified}}, {}});
  }
  return EventSystem(std::move(variables), std::move(events));
}

bool clause_satisfied(const std::vector<int>& clause, const Assignment& a) {
  for (int literal : clause) {
    const int value = a.values[std::abs(literal) - 1];
    if ((literal > 0 && value == 1) || (literal < 0 && value == 0)) return true;
  }
  return false;
}

bool instance_satisfied(const SatInstance& instance, const Assignment& a) {
  return std::all_of(instance.clauses.begin(), instance.clauses.end(),
                     [&](const auto& clause) { return clause_satisfied(clause, a); });
}

SatInstance random_bounded_sat(std::size_t clauses, int k, int max_occurrences,
                               std::uint64_t seed) {
  if (k < 1 || max_occurrences < 1) throw MalformedError("bad generator parameters");
  std::mt19937_64 rng(seed);
  // Enough variables that k fresh slots always exist.
  const int num_vars = static_cast<int>((clauses * k + max_occurrences - 1) / max_occurrences) +
                       k;
  std::vector<int> occurrences(num_vars, 0);
  SatInstance instance;
  instance.num_vars = num_vars;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<int> pool;
    for (int v = 0; v < num_vars; ++v) {
      if (occurrences[v] < max_occurrences) pool.push_back(v);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> clause;
    for (int slot = 0; slot < k; ++slot) {
      const int v = pool[slot];
      ++occurrences[v];
      const bool positive = (rng() & 1) != 0;
      clause.push_back(positive ? v + 1 : -(v + 1));
    }
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    instance.clauses.push_back(std::move(clause));
  }
  return instance;
}

}  // namespace lll
