#include "omod/omod.hpp"

namespace omod {

namespace {

struct InclusionSides {
  Mask left;   // L(a, b v c)
  Mask ub;     // U(L(a,b) u {c})
  Mask right;  // L of ub
};

InclusionSides inclusion_sides(const JoinSemilattice& s, int a, int b, int c) {
  const Poset& p = s.poset();
  Mask left = p.down_set(a) & p.down_set(s.join(b, c));
  Mask lab = p.down_set(a) & p.down_set(b);
  Mask ub = upper_bounds_mask(p, p.all(), lab | bit(c));
  Mask right = lower_bounds_mask(p, p.all(), ub);
  return {left, ub, right};
}

void check_index(const JoinSemilattice& s, int i) {
  if (i < 0 || i >= s.size()) throw IndexOutOfRange("witness index outside the structure");
}

}  // namespace

std::optional<OModWitness> check_omodular(const JoinSemilattice& s) {
  const Poset& p = s.poset();
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!p.leq(c, a)) continue;
        auto [left, ub, right] = inclusion_sides(s, a, b, c);
        Mask missing = left & ~right;
        if (missing == 0) continue;
        int x = lowest_bit(missing);
        Mask bad = ub & ~p.up_set(x);  // the u with x !<= u; nonempty since x is missing
        int y = lowest_bit(bad);
        return OModWitness{a, b, c, x, y};
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const JoinSemilattice& s, const OModWitness& w) {
  for (int i : {w.a, w.b, w.c, w.x, w.y}) check_index(s, i);
  const Poset& p = s.poset();
  if (!p.leq(w.c, w.a)) return false;
  if (!p.leq(w.x, w.a) || !p.leq(w.x, s.join(w.b, w.c))) return false;
  Mask lab = p.down_set(w.a) & p.down_set(w.b);
  if (!p.leq(w.c, w.y)) return false;
  if ((lab & ~p.down_set(w.y)) != 0) return false;  // y must dominate L(a,b)
  if (p.leq(w.x, w.y)) return false;
  return true;
}

ProofLabeling to_proof_labels(const JoinSemilattice& s, const OModWitness& w) {
  if (!verify_witness(s, w))
    throw InvalidWitness("quintuple does not certify an o-modularity failure");
  ProofLabeling pl{w.c, w.b, w.a, w.x, w.y};

  const Poset& p = s.poset();
  auto expect = [](bool ok, const char* what) {
    if (!ok) throw InvalidWitness(std::string("labeling condition failed: ") + what);
  };
  expect(p.lt(pl.a, pl.c), "a < c");
  expect(p.leq(pl.x, pl.c), "x <= c");
  expect(p.leq(pl.x, s.join(pl.a, pl.b)), "x <= a v b");
  Mask lbc = p.down_set(pl.b) & p.down_set(pl.c);
  expect((lbc & ~p.down_set(pl.y)) == 0, "z <= b and z <= c imply z <= y");
  expect(p.leq(pl.a, pl.y), "a <= y");
  expect(!p.leq(pl.x, pl.y), "x !<= y");
  // Derived facts; these follow from the six conditions above.
  expect(!p.leq(pl.x, pl.a), "x !<= a");
  expect(p.incomparable(pl.a, pl.b), "a || b");
  expect(!p.leq(pl.b, pl.c), "b !<= c");
  return pl;
}

std::optional<ModularLawCounterexample> modular_law_check(const JoinSemilattice& s) {
  const int n = s.size();
  std::vector<int> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto m = s.meet(i, j);
      if (!m)
        throw NotALattice("pair ('" + s.name(i) + "', '" + s.name(j) +
                          "') has no greatest lower bound");
      meet[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j)] = *m;
    }
  }
  auto mt = [&](int i, int j) {
    return meet[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)];
  };
  const Poset& p = s.poset();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!p.leq(c, a)) continue;
        if (mt(a, s.join(b, c)) != s.join(mt(a, b), c)) return ModularLawCounterexample{a, b, c};
      }
  return std::nullopt;
}

}  // namespace omod
