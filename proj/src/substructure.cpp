#include "omod/substructure.hpp"

#include <array>

#include "omod/builtins.hpp"
#include "omod/iso.hpp"

namespace omod {

namespace {

constexpr std::array<const char*, 4> kM2Roles = {"a", "c", "b", "top"};
constexpr std::array<const char*, 5> kM4Roles = {"v", "a", "c", "b", "top"};

int incomparable_pairs(const Poset& p, const std::vector<int>& members) {
  int count = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (p.incomparable(members[i], members[j])) ++count;
  return count;
}

template <std::size_t N>
std::optional<EmbeddedSub> match_template(const JoinSemilattice& s, const JoinSemilattice& tmpl,
                                          SubTemplate which,
                                          const std::array<const char*, N>& role_order,
                                          const std::vector<int>& members, ElementSet mask) {
  // Both templates have exactly two incomparable pairs; cheap reject first.
  if (incomparable_pairs(s.poset(), members) != 2) return std::nullopt;
  if (!is_join_closed(s, mask)) return std::nullopt;
  JoinSemilattice induced = induced_sub(s, mask);
  auto iso = is_isomorphic(tmpl, induced);
  if (!iso) return std::nullopt;

  EmbeddedSub sub;
  sub.members = mask;
  sub.tmpl = which;
  for (const char* role : role_order) {
    int t_idx = *tmpl.poset().index_of(role);
    sub.roles.emplace_back(role, members[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(
                                     t_idx)])]);
  }
  auto flags = classify_strength(s, mask);
  sub.semi_strong = flags.semi_strong;
  sub.strong_strict = flags.strong_strict;
  sub.strong_lu = flags.strong_lu;
  return sub;
}

template <std::size_t N>
std::vector<EmbeddedSub> find_template(const JoinSemilattice& s, const JoinSemilattice& tmpl,
                                       SubTemplate which,
                                       const std::array<const char*, N>& role_order) {
  std::vector<EmbeddedSub> out;
  const int n = s.size();
  const int k = static_cast<int>(N);
  if (n < k) return out;
  std::vector<int> members(static_cast<std::size_t>(k));
  // Lexicographic k-subset enumeration keeps the result sorted by members.
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == k) {
      ElementSet mask;
      for (int m : members) mask.add(m);
      if (auto sub = match_template(s, tmpl, which, role_order, members, mask))
        out.push_back(std::move(*sub));
      return;
    }
    for (int e = start; e <= n - (k - depth); ++e) {
      members[static_cast<std::size_t>(depth)] = e;
      self(self, depth + 1, e + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

StrengthFlags classify_strength(const JoinSemilattice& s, ElementSet t) {
  if (t.empty() || !is_join_closed(s, t)) throw NotJoinClosed("subset is not closed under joins");
  const Poset& p = s.poset();
  StrengthFlags flags{true, true, true};
  for_each_bit(t.bits, [&](int a) {
    for_each_bit(t.bits, [&](int b) {
      if (b < a) return;
      Mask ls = p.down_set(a) & p.down_set(b);
      Mask lt = ls & t.bits;
      if ((ls & ~t.bits) != 0) flags.strong_strict = false;
      if (lt == 0) {
        if (ls != 0) {
          flags.semi_strong = false;
          flags.strong_lu = false;
        }
      } else {
        Mask ub = upper_bounds_mask(p, p.all(), lt);
        Mask lsu = lower_bounds_mask(p, p.all(), ub);
        if ((ls & ~lsu) != 0) flags.strong_lu = false;
      }
    });
  });
  return flags;
}

std::vector<EmbeddedSub> find_m2(const JoinSemilattice& s) {
  static const JoinSemilattice tmpl = builtin("m2");
  return find_template(s, tmpl, SubTemplate::M2, kM2Roles);
}

std::vector<EmbeddedSub> find_m4(const JoinSemilattice& s) {
  static const JoinSemilattice tmpl = builtin("m4");
  return find_template(s, tmpl, SubTemplate::M4, kM4Roles);
}

}  // namespace omod
