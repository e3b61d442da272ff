#include "omod/iso.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "omod/io.hpp"

namespace omod {

namespace {

// Per-element fingerprint preserved by every isomorphism.
using Invariant = std::tuple<int, int, int, int>;

std::vector<Invariant> invariants(const Poset& p) {
  auto h = p.heights();
  std::vector<Invariant> inv(static_cast<std::size_t>(p.size()));
  auto covers = p.covers();
  std::vector<int> up_deg(static_cast<std::size_t>(p.size()), 0);
  std::vector<int> down_deg(static_cast<std::size_t>(p.size()), 0);
  for (auto [lo, hi] : covers) {
    ++up_deg[static_cast<std::size_t>(lo)];
    ++down_deg[static_cast<std::size_t>(hi)];
  }
  for (int i = 0; i < p.size(); ++i)
    inv[static_cast<std::size_t>(i)] = {popcount(p.down_set(i)), popcount(p.up_set(i)),
                                        h[static_cast<std::size_t>(i)],
                                        up_deg[static_cast<std::size_t>(i)] * 16 +
                                            down_deg[static_cast<std::size_t>(i)]};
  return inv;
}

bool extend(const Poset& a, const Poset& b, const std::vector<Invariant>& ia,
            const std::vector<Invariant>& ib, std::vector<int>& map, Mask& used, int next) {
  if (next == a.size()) return true;
  for (int cand = 0; cand < b.size(); ++cand) {
    if ((used & bit(cand)) != 0) continue;
    if (ia[static_cast<std::size_t>(next)] != ib[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int j = 0; j < next && ok; ++j) {
      if (a.leq(next, j) != b.leq(cand, map[static_cast<std::size_t>(j)])) ok = false;
      if (a.leq(j, next) != b.leq(map[static_cast<std::size_t>(j)], cand)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used |= bit(cand);
    if (extend(a, b, ia, ib, map, used, next + 1)) return true;
    used &= ~bit(cand);
  }
  return false;
}

std::optional<std::vector<int>> poset_iso(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ia = invariants(a);
  auto ib = invariants(b);
  auto sa = ia;
  auto sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
  Mask used = 0;
  if (extend(a, b, ia, ib, map, used, 0)) return map;
  return std::nullopt;
}

// 128-bit big-endian bit-string: bit 0 is the most significant, so numeric
// comparison matches lexicographic comparison of the row-major string.
struct Bits128 {
  std::uint64_t hi = 0, lo = 0;

  void set(int k) {
    if (k < 64)
      hi |= std::uint64_t{1} << (63 - k);
    else
      lo |= std::uint64_t{1} << (127 - k);
  }
  friend bool operator<(const Bits128& a, const Bits128& b) {
    return std::tie(a.hi, a.lo) < std::tie(b.hi, b.lo);
  }
  friend bool operator==(const Bits128& a, const Bits128& b) {
    return a.hi == b.hi && a.lo == b.lo;
  }
};

struct CanonSearch {
  const Poset& p;
  int n;
  std::vector<int> order;  // candidate exploration order (heuristic only)
  std::vector<int> perm;   // perm[pos] = original element at position pos
  std::vector<int> best_perm;
  Bits128 best;

  explicit CanonSearch(const Poset& poset) : p(poset), n(poset.size()) {}

  Bits128 full(const std::vector<int>& pm) const {
    Bits128 out;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(pm[static_cast<std::size_t>(i)], pm[static_cast<std::size_t>(j)]))
          out.set(i * n + j);
    return out;
  }

  // Bitwise lower bound on every completion of the current prefix: the
  // assigned block is exact, diagonals are 1, everything else optimistic 0.
  Bits128 bound(int depth) const {
    Bits128 out;
    for (int i = 0; i < depth; ++i)
      for (int j = 0; j < depth; ++j)
        if (p.leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
          out.set(i * n + j);
    for (int i = depth; i < n; ++i) out.set(i * n + i);
    return out;
  }

  void dfs(int depth, Mask used) {
    if (depth == n) {
      Bits128 leaf = full(perm);
      if (leaf < best) {
        best = leaf;
        best_perm = perm;
      }
      return;
    }
    for (int c : order) {
      if ((used & bit(c)) != 0) continue;
      perm[static_cast<std::size_t>(depth)] = c;
      if (!(best < bound(depth + 1))) dfs(depth + 1, used | bit(c));
    }
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const JoinSemilattice& p, const JoinSemilattice& q) {
  return poset_iso(p.poset(), q.poset());
}

namespace detail {

std::pair<std::string, std::vector<int>> canonical_form_poset(const Poset& p, int max_n) {
  const int n = p.size();
  if (n > max_n || n > 11)
    throw SizeLimitExceeded("canonical form limited to " + std::to_string(std::min(max_n, 11)) +
                            " elements, structure has " + std::to_string(n));

  CanonSearch search(p);
  search.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) search.order[static_cast<std::size_t>(i)] = i;
  // Small up-sets first tends to reach near-minimal strings early.
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    return std::pair(popcount(p.up_set(a)), popcount(p.down_set(a))) <
           std::pair(popcount(p.up_set(b)), popcount(p.down_set(b)));
  });
  search.perm.assign(static_cast<std::size_t>(n), 0);
  search.best_perm = search.order;
  search.best = search.full(search.best_perm);
  search.dfs(0, 0);

  std::string out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(search.best_perm[static_cast<std::size_t>(i)],
                search.best_perm[static_cast<std::size_t>(j)]))
        out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] = '1';
  return {out, search.best_perm};
}

JoinSemilattice canonicalize(const JoinSemilattice& s, int max_n) {
  auto [bits, perm] = canonical_form_poset(s.poset(), max_n);
  return from_canonical(bits);
}

}  // namespace detail

std::string canonical_form(const JoinSemilattice& s, int max_n) {
  return detail::canonical_form_poset(s.poset(), max_n).first;
}

}  // namespace omod
