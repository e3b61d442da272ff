#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omod/semilattice.hpp"

namespace omod {

/// Order- and join-preserving bijection mapping indices of p to indices of q,
/// if one exists. Backtracking with per-element invariant pruning; adequate
/// for the small structures this library targets.
std::optional<std::vector<int>> is_isomorphic(const JoinSemilattice& p, const JoinSemilattice& q);

/// Lexicographically minimal row-major bit-string of the order matrix over
/// all element permutations. Equal strings characterize isomorphism classes.
/// Throws SizeLimitExceeded above max_n (default 10).
std::string canonical_form(const JoinSemilattice& s, int max_n = 10);

namespace detail {

/// Same as canonical_form on a bare poset; also reports the permutation used
/// (perm[pos] = original index placed at canonical position pos).
std::pair<std::string, std::vector<int>> canonical_form_poset(const Poset& p, int max_n);

/// Relabels so that elements appear in canonical order with generated names;
/// canonical_form of the result is the identity permutation's string.
JoinSemilattice canonicalize(const JoinSemilattice& s, int max_n);

}  // namespace detail

}  // namespace omod
