#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omod/errors.hpp"

namespace omod {

/// Element subsets are bitmasks over element indices; structures are capped
/// at 64 elements, far above the enumeration scale this library targets.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

int popcount(Mask m);

/// Index of the lowest set bit; m must be nonzero.
int lowest_bit(Mask m);

/// Calls fn(i) for every set bit of m, in ascending index order.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    int i = lowest_bit(m);
    fn(i);
    m &= m - Mask{1};
  }
}

/// Subset of element indices of some ambient structure.
struct ElementSet {
  Mask bits = 0;

  ElementSet() = default;
  explicit ElementSet(Mask m) : bits(m) {}

  bool contains(int i) const { return (bits & bit(i)) != 0; }
  void add(int i) { bits |= bit(i); }
  int count() const { return popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(ElementSet o) const { return (bits & ~o.bits) == 0; }

  friend bool operator==(ElementSet a, ElementSet b) { return a.bits == b.bits; }
};

/// A finite poset: named elements and a reflexive, antisymmetric, transitive
/// relation stored densely as per-element up-set / down-set bitmasks.
class Poset {
 public:
  /// Builds from complete up-set rows (up[i] = all j with i <= j).
  /// Validates the order axioms; offending input yields ParseError.
  Poset(std::vector<std::string> names, std::vector<Mask> up);

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool leq(int i, int j) const { return (up_[i] & bit(j)) != 0; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool incomparable(int i, int j) const { return !leq(i, j) && !leq(j, i); }

  Mask up_set(int i) const { return up_[i]; }      // {j : i <= j}
  Mask down_set(int i) const { return down_[i]; }  // {j : j <= i}
  Mask all() const { return all_; }

  /// Transitive reduction as (lower, upper) pairs, lexicographic by index.
  std::vector<std::pair<int, int>> covers() const;

  /// Longest-chain height of each element (minimal elements have height 0).
  std::vector<int> heights() const;

 private:
  int n_ = 0;
  Mask all_ = 0;
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

ElementSet lower_bounds(const Poset& p, ElementSet x, ElementSet y);
ElementSet upper_bounds(const Poset& p, ElementSet x, ElementSet y);

/// Mask-level variants used on hot paths.
Mask lower_bounds_mask(const Poset& p, Mask x, Mask y);
Mask upper_bounds_mask(const Poset& p, Mask x, Mask y);

}  // namespace omod
