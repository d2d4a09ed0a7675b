#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lll {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input: JSON instances, DIMACS files, forest files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid in-memory objects: events referencing undeclared
// variables, forests with bad labels, inconsistent execution logs.
class MalformedError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Execution limits (recursion depth) reached before completion.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Forced tape misuse: exhausted draw list or out-of-domain forced value.
class TapeError : public Error {
 public:
  using Error::Error;
};

// Invariant violations that indicate a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Caps for exhaustive enumerations. `enumeration` guards per-event and
// per-pair scope products; `omega` guards full product-space tables.
struct Budget {
  std::uint64_t enumeration = std::uint64_t{1} << 20;
  std::uint64_t omega = std::uint64_t{1} << 22;
};

}  // namespace lll
