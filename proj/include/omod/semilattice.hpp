#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omod/core.hpp"

namespace omod {

/// A finite join semilattice: a poset in which every pair of elements has a
/// least upper bound. The full join table is precomputed at construction, so
/// downstream checks are table lookups.
class JoinSemilattice {
 public:
  /// Validates that every pair has a least upper bound; otherwise throws
  /// NotAJoinSemilattice naming the first offending pair in index order.
  static JoinSemilattice from_poset(Poset p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& name(int i) const { return poset_.name(i); }

  int join(int i, int j) const { return join_[static_cast<std::size_t>(i) * size() + j]; }

  /// The greatest element (exists in every finite join semilattice).
  int top() const { return top_; }

  /// The least element, when one exists. Finite join semilattices with a
  /// bottom are exactly the lattices.
  std::optional<int> bottom() const;

  /// Greatest lower bound of {i, j} when it exists.
  std::optional<int> meet(int i, int j) const;

 private:
  explicit JoinSemilattice(Poset p) : poset_(std::move(p)) {}

  Poset poset_;
  std::vector<std::uint8_t> join_;
  int top_ = 0;
};

/// Least upper bound of a nonempty set, folded over binary joins in index
/// order. Throws EmptySetError on the empty set.
int join_of_set(const JoinSemilattice& s, ElementSet y);

/// True iff all pairwise joins of members of t land inside t. t must be
/// nonempty.
bool is_join_closed(const JoinSemilattice& s, ElementSet t);

/// The sub join semilattice induced on a join-closed subset: members keep
/// their ambient names, local index order follows ambient index order.
JoinSemilattice induced_sub(const JoinSemilattice& s, ElementSet t);

}  // namespace omod
