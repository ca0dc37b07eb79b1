#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trb/scalar.hpp"

namespace trb {

enum class ErrorKind {
  SingularMatrix,
  DimensionMismatch,
  DuplicateAssignment,
  IndexOutOfRange,
  NotLie,
  NotRepresentation,
  NotNijenhuis,
  NotTwistedRB,
  NotCocycle,
  NotAdmissible,
  NotDerivation,
  NotNilpotent,
  NotSkew,
  NotNsLie,
  NotAssocNs,
  NonzeroH,
  NotGcs,
  InvalidInput,
  // A theorem checked at run time disagreed with a computation: a bug, not bad input.
  InvariantViolated,
};

const char* to_string(ErrorKind kind);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

/// A failing instance of an identity: the identity's name, the basis tuple
/// it was evaluated on, and the nonzero defect.
struct Defect {
  std::string identity;
  std::vector<std::size_t> tuple;
  Vec value;
};

/// Outcome of an exact identity check. Checks iterate basis tuples in
/// lexicographic order and keep the first failure only.
struct Verdict {
  bool holds = true;
  std::optional<Defect> witness;

  explicit operator bool() const { return holds; }

  /// Records `value` as a witness for `identity` at `tuple` if it is nonzero
  /// and no earlier failure was recorded. Returns whether value was zero.
  bool note(const std::string& identity, const std::vector<std::size_t>& tuple, const Vec& value);
  void merge(const Verdict& other);

  std::string describe() const;
};

}  // namespace trb
