#include "oracle.hpp"

#include <algorithm>
#include <numeric>

#include "omod/io.hpp"

namespace oracle {

namespace {

std::vector<int> common_lower(const Rel& r, int a, int b) {
  std::vector<int> out;
  for (int z = 0; z < r.n; ++z)
    if (r.leq[z][a] && r.leq[z][b]) out.push_back(z);
  return out;
}

bool is_transitive(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      for (int k = 0; k < r.n; ++k)
        if (r.leq[i][j] && r.leq[j][k] && !r.leq[i][k]) return false;
  return true;
}

// Refined per-element colors (degree counts plus two rounds of neighborhood
// refinement); isomorphism-invariant by construction.
std::vector<unsigned long long> colors(const Rel& r) {
  std::vector<unsigned long long> c(static_cast<std::size_t>(r.n));
  for (int i = 0; i < r.n; ++i) {
    int below = 0, above = 0;
    for (int j = 0; j < r.n; ++j) {
      if (r.leq[j][i]) ++below;
      if (r.leq[i][j]) ++above;
    }
    c[static_cast<std::size_t>(i)] =
        static_cast<unsigned long long>(below) * 97 + static_cast<unsigned long long>(above);
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<unsigned long long> next(static_cast<std::size_t>(r.n));
    for (int i = 0; i < r.n; ++i) {
      std::vector<unsigned long long> lo, hi;
      for (int j = 0; j < r.n; ++j) {
        if (j == i) continue;
        if (r.leq[j][i]) lo.push_back(c[static_cast<std::size_t>(j)]);
        if (r.leq[i][j]) hi.push_back(c[static_cast<std::size_t>(j)]);
      }
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      unsigned long long h = c[static_cast<std::size_t>(i)];
      for (auto v : lo) h = h * 1000003ull + v + 1;
      h = h * 1000003ull + 777ull;
      for (auto v : hi) h = h * 1000003ull + v + 1;
      next[static_cast<std::size_t>(i)] = h;
    }
    c = std::move(next);
  }
  return c;
}

// Sorted color multiset, the fingerprint used for bucketing.
std::vector<unsigned long long> degree_seq(const Rel& r) {
  auto c = colors(r);
  std::sort(c.begin(), c.end());
  return c;
}

// Order ideals (down-closed subsets) of a Rel, as element lists.
std::vector<std::vector<int>> ideals(const Rel& r) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << r.n); ++mask) {
    bool closed = true;
    for (int i = 0; i < r.n && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < r.n; ++j)
        if (r.leq[j][i] && !(mask & (1u << j))) closed = false;
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int i = 0; i < r.n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    out.push_back(std::move(members));
  }
  return out;
}

template <typename Keep>
void dedup_insert(std::vector<Rel>& classes, std::vector<std::vector<unsigned long long>>& keys,
                  Rel cand, Keep keep) {
  if (!keep(cand)) return;
  auto key = degree_seq(cand);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (keys[i] == key && isomorphic(classes[i], cand)) return;
  classes.push_back(std::move(cand));
  keys.push_back(std::move(key));
}

// Bottomed posets on k elements, one per isomorphism class, built by adding
// maximal elements above ideals that contain the bottom.
std::vector<Rel> bottomed_posets(int k) {
  std::vector<Rel> level;
  level.push_back(Rel(1));
  for (int size = 2; size <= k; ++size) {
    std::vector<Rel> next;
    std::vector<std::vector<unsigned long long>> keys;
    for (const Rel& base : level) {
      for (const auto& ideal : ideals(base)) {
        // The new maximal element must sit above the bottom to keep it global.
        bool has_bottom = false;
        for (int m : ideal) {
          bool bottom = true;
          for (int j = 0; j < base.n; ++j)
            if (!base.leq[m][j]) bottom = false;
          has_bottom |= bottom;
        }
        if (!has_bottom) continue;
        Rel cand(base.n + 1);
        for (int i = 0; i < base.n; ++i)
          for (int j = 0; j < base.n; ++j) cand.leq[i][j] = base.leq[i][j];
        for (int m : ideal) cand.leq[m][base.n] = 1;
        dedup_insert(next, keys, std::move(cand), [](const Rel&) { return true; });
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

Rel rel_of(const omod::JoinSemilattice& s) {
  Rel r(s.size());
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) r.leq[i][j] = s.poset().leq(i, j) ? 1 : 0;
  return r;
}

std::optional<int> lub(const Rel& r, int x, int y) {
  std::vector<int> uppers;
  for (int u = 0; u < r.n; ++u)
    if (r.leq[x][u] && r.leq[y][u]) uppers.push_back(u);
  for (int u : uppers) {
    bool least = true;
    for (int v : uppers)
      if (!r.leq[u][v]) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

bool is_join_semilattice(const Rel& r) {
  for (int i = 0; i < r.n; ++i)
    for (int j = i; j < r.n; ++j)
      if (!lub(r, i, j)) return false;
  return true;
}

bool is_omodular(const Rel& r) {
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      for (int c = 0; c < r.n; ++c) {
        if (!r.leq[c][a]) continue;
        int bc = *lub(r, b, c);
        // left = L(a, b v c)
        std::vector<int> left = common_lower(r, a, bc);
        // ub = U(L(a,b) u {c})
        std::vector<int> lab = common_lower(r, a, b);
        std::vector<int> ub;
        for (int u = 0; u < r.n; ++u) {
          if (!r.leq[c][u]) continue;
          bool above_all = true;
          for (int z : lab)
            if (!r.leq[z][u]) above_all = false;
          if (above_all) ub.push_back(u);
        }
        for (int x : left) {
          for (int u : ub)
            if (!r.leq[x][u]) return false;
        }
      }
  return true;
}

namespace {

// Role-order template matrices: M2 over (a, c, b, top), M4 over
// (v, a, c, b, top).
constexpr char kM2[4][4] = {{1, 1, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
constexpr char kM4[5][5] = {{1, 1, 1, 1, 1},
                            {0, 1, 1, 0, 1},
                            {0, 0, 1, 0, 1},
                            {0, 0, 0, 1, 1},
                            {0, 0, 0, 0, 1}};

template <int K>
bool matches_template(const Rel& r, const char (&tmpl)[K][K], const std::vector<int>& members) {
  std::vector<int> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < K && ok; ++i)
      for (int j = 0; j < K && ok; ++j)
        if ((tmpl[i][j] != 0) !=
            (r.leq[members[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]]
                  [members[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]] != 0))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool join_closed(const Rel& r, const std::vector<int>& members) {
  for (int x : members)
    for (int y : members) {
      auto j = lub(r, x, y);
      if (!j || std::find(members.begin(), members.end(), *j) == members.end()) return false;
    }
  return true;
}

template <int K>
std::vector<std::vector<int>> find_members(const Rel& r, const char (&tmpl)[K][K]) {
  std::vector<std::vector<int>> out;
  std::vector<int> members(K);
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == K) {
      if (join_closed(r, members) && matches_template(r, tmpl, members)) out.push_back(members);
      return;
    }
    for (int e = start; e <= r.n - (K - depth); ++e) {
      members[static_cast<std::size_t>(depth)] = e;
      self(self, depth + 1, e + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> find_m2_members(const Rel& r) { return find_members(r, kM2); }

std::vector<std::vector<int>> find_m4_members(const Rel& r) { return find_members(r, kM4); }

omod::StrengthFlags classify(const Rel& r, const std::vector<int>& members) {
  omod::StrengthFlags flags{true, true, true};
  auto in_t = [&](int e) {
    return std::find(members.begin(), members.end(), e) != members.end();
  };
  for (int a : members)
    for (int b : members) {
      std::vector<int> ls = common_lower(r, a, b);
      std::vector<int> lt;
      for (int z : ls)
        if (in_t(z)) lt.push_back(z);
      for (int z : ls)
        if (!in_t(z)) flags.strong_strict = false;
      if (lt.empty()) {
        if (!ls.empty()) {
          flags.semi_strong = false;
          flags.strong_lu = false;
        }
      } else {
        for (int z : ls) {
          // z must lie below every upper bound of lt
          for (int u = 0; u < r.n; ++u) {
            bool above_all = true;
            for (int t : lt)
              if (!r.leq[t][u]) above_all = false;
            if (above_all && !r.leq[z][u]) flags.strong_lu = false;
          }
        }
      }
    }
  return flags;
}

namespace {

bool iso_extend(const Rel& a, const Rel& b, const std::vector<unsigned long long>& ca,
                const std::vector<unsigned long long>& cb, std::vector<int>& map,
                std::vector<char>& used, int next) {
  if (next == a.n) return true;
  for (int cand = 0; cand < b.n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    if (ca[static_cast<std::size_t>(next)] != cb[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int j = 0; j < next && ok; ++j) {
      if (a.leq[static_cast<std::size_t>(next)][static_cast<std::size_t>(j)] !=
          b.leq[static_cast<std::size_t>(cand)][static_cast<std::size_t>(map[static_cast<std::size_t>(j)])])
        ok = false;
      if (a.leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(next)] !=
          b.leq[static_cast<std::size_t>(map[static_cast<std::size_t>(j)])][static_cast<std::size_t>(cand)])
        ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (iso_extend(a, b, ca, cb, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const Rel& a, const Rel& b) {
  if (a.n != b.n) return false;
  auto ca = colors(a);
  auto cb = colors(b);
  auto sa = ca;
  auto sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(static_cast<std::size_t>(a.n), -1);
  std::vector<char> used(static_cast<std::size_t>(a.n), 0);
  return iso_extend(a, b, ca, cb, map, used, 0);
}

std::vector<Rel> enumerate_jsls_direct(int n) {
  // Every poset admits a linear extension, so relations aligned with the
  // natural order of 0..n-1 cover every isomorphism class.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Rel> classes;
  std::vector<std::vector<unsigned long long>> keys;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    Rel cand(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s)) cand.leq[slots[s].first][slots[s].second] = 1;
    if (!is_transitive(cand)) continue;
    dedup_insert(classes, keys, std::move(cand),
                 [](const Rel& r) { return is_join_semilattice(r); });
  }
  return classes;
}

long long count_lattices(int k) {
  long long count = 0;
  for (const Rel& r : bottomed_posets(k))
    if (is_join_semilattice(r)) ++count;  // bottomed + all joins = lattice
  return count;
}

omod::JoinSemilattice random_jsl(std::mt19937& rng, int n) {
  std::vector<omod::Mask> up = {omod::bit(0)};
  for (int size = 1; size < n; ++size) {
    omod::Mask all = omod::bit(size) - 1;
    std::uniform_int_distribution<omod::Mask> pick(1, all);
    omod::Mask filter = all;  // a new global bottom always extends
    for (int attempt = 0; attempt < 30; ++attempt) {
      omod::Mask seed = pick(rng);
      omod::Mask cand = 0;
      omod::for_each_bit(seed, [&](int i) { cand |= up[static_cast<std::size_t>(i)]; });
      std::vector<omod::Mask> trial = up;
      trial.push_back(cand | omod::bit(size));
      std::vector<std::string> names;
      for (int i = 0; i <= size; ++i) names.push_back(omod::position_name(i));
      try {
        (void)omod::JoinSemilattice::from_poset(omod::Poset(names, trial));
        filter = cand;
        break;
      } catch (const omod::NotAJoinSemilattice&) {
      }
    }
    up.push_back(filter | omod::bit(size));
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(omod::position_name(i));
  return omod::JoinSemilattice::from_poset(omod::Poset(std::move(names), std::move(up)));
}

}  // namespace oracle
