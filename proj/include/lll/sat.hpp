#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lll/model.hpp"

namespace lll {

// CNF instance with 1-based signed literals.
struct SatInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const SatInstance&) const = default;
};

struct DimacsResult {
  SatInstance instance;
  std::vector<std::string> warnings;  // e.g. dropped tautological clauses
};

// Strict DIMACS CNF reader: "p cnf V C" header, clauses terminated by 0,
// comment lines starting with 'c'. Clause order is preserved; clauses
// containing a complementary literal pair are dropped with a warning. Errors
// carry the offending line number.
DimacsResult parse_dimacs(std::string_view text);

// Canonical writer: header plus one "l1 l2 ... 0" line per clause. Parsing
// the output reproduces the instance byte-for-byte.
std::string write_dimacs(const SatInstance& instance);

// Uniform binary variables; event j occurs iff clause j is falsified (one
// conjunction negating each literal). An empty clause yields the sure event.
EventSystem sat_to_system(const SatInstance& instance);

bool clause_satisfied(const std::vector<int>& clause, const Assignment& a);
bool instance_satisfied(const SatInstance& instance, const Assignment& a);

// Random k-CNF where no variable occurs in more than `max_occurrences`
// clauses. With k = 4 and max_occurrences = 2 every clause conflicts with at
// most 4 others, which keeps e * p * (d+1) below 1.
SatInstance random_bounded_sat(std::size_t clauses, int k, int max_occurrences,
                               std::uint64_t seed);

}  // namespace lll
