#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omod/semilattice.hpp"

namespace omod {

enum class Strength { Strict, Lu, Both };

/// One census violation, reproducible from its canonical string alone.
struct Violation {
  std::string claim;           // "A:lu", "A:strict", "B", "C:lu", "C:strict", "D"
  std::string canonical;       // canonical_form of the offending structure
  std::string structure_file;  // same structure in the input file format
};

/// Tallies for one size, plus any violations of the census claims:
///   A: semi-strong M2 or strength-strong M4 present implies non-o-modular.
///   B: non-o-modular implies semi-strong M2 or semi-strong M4 present.
///   C: non-o-modular iff semi-strong M2 or strength-strong M4 present.
///   D: the construction pipeline completes on every non-o-modular structure.
struct EnumerationReport {
  int n = 0;
  Strength strength = Strength::Lu;
  std::int64_t jsl_count = 0;
  std::int64_t omodular_count = 0;
  std::int64_t non_omodular_count = 0;
  std::int64_t with_semi_strong_m2 = 0;
  std::int64_t with_semi_strong_m4 = 0;
  std::int64_t with_strict_strong_m4 = 0;
  std::int64_t with_lu_strong_m4 = 0;
  std::vector<Violation> violations;

  /// Violations that count against the exit status: A, B, D always, C only
  /// under the lu reading (strict C entries are data, not failures).
  bool asserted_claims_ok() const;
};

/// Exactly one representative per isomorphism class of n-element join
/// semilattices, in canonical-string order, each relabeled into canonical
/// form. Grown by repeatedly inserting a new minimal element below an
/// up-closed subset of a smaller structure. Throws SizeLimitExceeded when
/// n is outside 1..max_n.
std::vector<JoinSemilattice> enum_jsls(int n, int max_n = 8);

/// Runs the census for size n under the given strength reading(s).
/// jobs > 1 partitions the per-structure work across threads; reports are
/// byte-identical for any worker count.
EnumerationReport validate_theorems(int n, Strength strength, int jobs = 1, int max_n = 8);

const char* strength_name(Strength s);

}  // namespace omod
