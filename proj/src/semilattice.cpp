#include "omod/semilattice.hpp"

#include <algorithm>

namespace omod {

namespace {
// Least element of a nonempty mask under p's order, if it has one.
std::optional<int> least_of(const Poset& p, Mask m) {
  std::optional<int> out;
  for_each_bit(m, [&](int e) {
    if (!out && (m & ~p.up_set(e)) == 0) out = e;
  });
  return out;
}
}  // namespace

JoinSemilattice JoinSemilattice::from_poset(Poset p) {
  JoinSemilattice s(std::move(p));
  const Poset& po = s.poset_;
  const int n = po.size();
  s.join_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Mask ub = po.up_set(i) & po.up_set(j);
      std::optional<int> lub = ub == 0 ? std::nullopt : least_of(po, ub);
      if (!lub)
        throw NotAJoinSemilattice(
            i, j,
            "pair ('" + po.name(i) + "', '" + po.name(j) + "') has no least upper bound");
      s.join_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(*lub);
      s.join_[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint8_t>(*lub);
    }
  }
  int t = 0;
  for (int i = 1; i < n; ++i) t = s.join(t, i);
  s.top_ = t;
  return s;
}

std::optional<int> JoinSemilattice::bottom() const {
  for (int i = 0; i < size(); ++i)
    if (poset_.up_set(i) == poset_.all()) return i;
  return std::nullopt;
}

std::optional<int> JoinSemilattice::meet(int i, int j) const {
  Mask lb = poset_.down_set(i) & poset_.down_set(j);
  std::optional<int> out;
  for_each_bit(lb, [&](int e) {
    if (!out && (lb & ~poset_.down_set(e)) == 0) out = e;
  });
  return out;
}

int join_of_set(const JoinSemilattice& s, ElementSet y) {
  if ((y.bits & ~s.poset().all()) != 0)
    throw IndexOutOfRange("set contains an index outside the structure");
  if (y.empty()) throw EmptySetError("join of the empty set is undefined");
  int acc = lowest_bit(y.bits);
  for_each_bit(y.bits & (y.bits - 1), [&](int e) { acc = s.join(acc, e); });
  return acc;
}

bool is_join_closed(const JoinSemilattice& s, ElementSet t) {
  if ((t.bits & ~s.poset().all()) != 0)
    throw IndexOutOfRange("set contains an index outside the structure");
  bool closed = !t.empty();
  for_each_bit(t.bits, [&](int i) {
    for_each_bit(t.bits, [&](int j) {
      if (j >= i && !t.contains(s.join(i, j))) closed = false;
    });
  });
  return closed;
}

JoinSemilattice induced_sub(const JoinSemilattice& s, ElementSet t) {
  if (!is_join_closed(s, t)) throw NotJoinClosed("subset is not closed under joins");
  std::vector<int> members;
  for_each_bit(t.bits, [&](int e) { members.push_back(e); });
  const int m = static_cast<int>(members.size());
  std::vector<std::string> names(m);
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i) {
    names[i] = s.name(members[i]);
    for (int j = 0; j < m; ++j)
      if (s.poset().leq(members[i], members[j])) up[i] |= bit(j);
  }
  return JoinSemilattice::from_poset(Poset(std::move(names), std::move(up)));
}

}  // namespace omod
