#pragma once

#include <string>
#include <string_view>

#include "omod/semilattice.hpp"

namespace omod {

/// Parses the structure file format:
///
///   # optional comments
///   elements: a c top b
///   covers:
///   a < c
///   c < top
///   b < top
///
/// The order relation is the reflexive-transitive closure of the declared
/// covers. Throws ParseError (with a 1-based line number) or
/// NotAJoinSemilattice.
JoinSemilattice parse_structure(std::string_view text);

/// Renders a structure back into the file format, covers in index order.
std::string write_structure(const JoinSemilattice& s);

/// Rebuilds a structure from a canonical_form bit-string ("1101..." of
/// length n*n, row-major). Elements get generated names by position.
JoinSemilattice from_canonical(std::string_view bits);

/// Hasse diagram in DOT digraph format, edges lower -> upper, bottom-up rank
/// direction. Elements in `highlight` are drawn filled.
std::string to_dot(const JoinSemilattice& s, ElementSet highlight = ElementSet{});

/// Generated element name for position i (a, b, ..., then e10, e11, ...).
std::string position_name(int i);

}  // namespace omod
