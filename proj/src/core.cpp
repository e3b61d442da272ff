#include "omod/core.hpp"

#include <bit>

namespace omod {

int popcount(Mask m) { return std::popcount(m); }

int lowest_bit(Mask m) { return std::countr_zero(m); }

Poset::Poset(std::vector<std::string> names, std::vector<Mask> up)
    : n_(static_cast<int>(names.size())), names_(std::move(names)), up_(std::move(up)) {
  if (n_ == 0) throw ParseError(ParseError::Kind::EmptyStructure, 0, "structure has no elements");
  if (n_ > kMaxElements)
    throw SizeLimitExceeded("structure exceeds " + std::to_string(kMaxElements) + " elements");
  if (static_cast<int>(up_.size()) != n_)
    throw ParseError(ParseError::Kind::InvalidRelation, 0, "relation size mismatch");
  all_ = (n_ == kMaxElements) ? ~Mask{0} : (bit(n_) - 1);

  for (int i = 0; i < n_; ++i) {
    if ((up_[i] & ~all_) != 0)
      throw ParseError(ParseError::Kind::InvalidRelation, 0, "relation references bad index");
    if ((up_[i] & bit(i)) == 0)
      throw ParseError(ParseError::Kind::InvalidRelation, 0,
                       "relation is not reflexive at '" + names_[i] + "'");
  }
  for (int i = 0; i < n_; ++i) {
    for_each_bit(up_[i] & ~bit(i), [&](int j) {
      if (leq(j, i))
        throw ParseError(ParseError::Kind::CycleDetected, 0,
                         "cycle through '" + names_[i] + "' and '" + names_[j] + "'");
      if ((up_[j] & ~up_[i]) != 0)
        throw ParseError(ParseError::Kind::InvalidRelation, 0,
                         "relation is not transitive at '" + names_[i] + "' <= '" + names_[j] +
                             "'");
    });
  }

  down_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for_each_bit(up_[i], [&](int j) { down_[j] |= bit(i); });
}

std::optional<int> Poset::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    Mask strict = up_[i] & ~bit(i);
    for_each_bit(strict, [&](int j) {
      // j covers i iff nothing sits strictly between them
      Mask between = strict & (down_[j] & ~bit(j));
      if (between == 0) out.emplace_back(i, j);
    });
  }
  return out;
}

std::vector<int> Poset::heights() const {
  std::vector<int> h(n_, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n_; ++i) {
      for_each_bit(down_[i] & ~bit(i), [&](int j) {
        if (h[j] + 1 > h[i]) {
          h[i] = h[j] + 1;
          changed = true;
        }
      });
    }
  }
  return h;
}

Mask lower_bounds_mask(const Poset& p, Mask x, Mask y) {
  Mask acc = x;
  for_each_bit(y, [&](int e) { acc &= p.down_set(e); });
  return acc;
}

Mask upper_bounds_mask(const Poset& p, Mask x, Mask y) {
  Mask acc = x;
  for_each_bit(y, [&](int e) { acc &= p.up_set(e); });
  return acc;
}

namespace {
void check_in_range(const Poset& p, ElementSet s, const char* which) {
  if ((s.bits & ~p.all()) != 0)
    throw IndexOutOfRange(std::string(which) + " contains an index outside the structure");
}
}  // namespace

ElementSet lower_bounds(const Poset& p, ElementSet x, ElementSet y) {
  check_in_range(p, x, "X");
  check_in_range(p, y, "Y");
  return ElementSet(lower_bounds_mask(p, x.bits, y.bits));
}

ElementSet upper_bounds(const Poset& p, ElementSet x, ElementSet y) {
  check_in_range(p, x, "X");
  check_in_range(p, y, "Y");
  return ElementSet(upper_bounds_mask(p, x.bits, y.bits));
}

}  // namespace omod
