#pragma once

#include <stdexcept>
#include <string>

namespace omod {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structure-file (or canonical-string) parsing failure.
struct ParseError : Error {
  enum class Kind {
    DuplicateElement,
    UnknownElement,
    CycleDetected,
    EmptyStructure,
    UnknownDirective,
    BadSyntax,
    InvalidRelation,
  };

  ParseError(Kind k, int line_no, const std::string& what)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        kind(k),
        line(line_no) {}

  Kind kind;
  int line;  // 1-based; 0 when not tied to a source line
};

/// Some pair of elements has no least upper bound.
struct NotAJoinSemilattice : Error {
  NotAJoinSemilattice(int i, int j, const std::string& what) : Error(what), lo(i), hi(j) {}
  int lo, hi;  // first offending pair in index order
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct EmptySetError : Error {
  using Error::Error;
};

struct NotJoinClosed : Error {
  using Error::Error;
};

struct NotALattice : Error {
  using Error::Error;
};

struct InvalidWitness : Error {
  using Error::Error;
};

/// A derivation fact that must hold by construction failed; indicates an
/// invalid labeling or an implementation bug, never a property of the input.
struct FactViolation : Error {
  FactViolation(std::string id, const std::string& what) : Error(what), fact_id(std::move(id)) {}
  std::string fact_id;
};

struct UnknownBuiltin : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

}  // namespace omod
