#include "omod/construct.hpp"

#include "omod/builtins.hpp"
#include "omod/iso.hpp"

namespace omod {

namespace {

struct FactChecker {
  const JoinSemilattice& s;
  std::vector<Fact>* sink;

  void require(bool ok, const std::string& id, const std::string& statement) const {
    if (!ok)
      throw FactViolation(id, "fact (" + id + ") failed: " + statement);
    if (sink) sink->push_back({id, statement, true});
  }
};

// The builders return role assignments directly; the template match is
// rechecked structurally so a bad labeling cannot slip through.
EmbeddedSub make_sub(const JoinSemilattice& s, SubTemplate which,
                     std::vector<std::pair<std::string, int>> roles, const FactChecker& check,
                     const std::string& tag) {
  ElementSet mask;
  for (auto& [role, e] : roles) mask.add(e);
  check.require(mask.count() == static_cast<int>(roles.size()), tag + "-distinct",
                "members are pairwise distinct");
  check.require(is_join_closed(s, mask), tag + "-closed", "members are closed under joins");

  const JoinSemilattice& tmpl = which == SubTemplate::M2 ? builtin("m2") : builtin("m4");
  bool order_matches = true;
  for (auto& [r1, e1] : roles)
    for (auto& [r2, e2] : roles) {
      int t1 = *tmpl.poset().index_of(r1);
      int t2 = *tmpl.poset().index_of(r2);
      if (tmpl.poset().leq(t1, t2) != s.poset().leq(e1, e2)) order_matches = false;
    }
  check.require(order_matches, tag + "-iso",
                std::string("members form a copy of ") +
                    (which == SubTemplate::M2 ? "M2" : "M4"));

  EmbeddedSub sub;
  sub.members = mask;
  sub.tmpl = which;
  sub.roles = std::move(roles);
  auto flags = classify_strength(s, mask);
  sub.semi_strong = flags.semi_strong;
  sub.strong_strict = flags.strong_strict;
  sub.strong_lu = flags.strong_lu;
  return sub;
}

// Records the labeling conditions (i)-(ix); the pipeline calls this on
// labelings already validated by to_proof_labels. The builders themselves
// assert only their own construction facts, so an invalid labeling surfaces
// as a FactViolation naming the first inequality it breaks.
void check_labeling(const JoinSemilattice& s, const ProofLabeling& pl, const FactChecker& check) {
  const Poset& p = s.poset();
  for (int i : {pl.a, pl.b, pl.c, pl.x, pl.y})
    if (i < 0 || i >= s.size()) throw InvalidWitness("labeling index outside the structure");
  check.require(p.lt(pl.a, pl.c), "i", "a < c");
  check.require(p.leq(pl.x, pl.c), "ii", "x <= c");
  check.require(p.leq(pl.x, s.join(pl.a, pl.b)), "iii", "x <= a v b");
  Mask lbc = p.down_set(pl.b) & p.down_set(pl.c);
  check.require((lbc & ~p.down_set(pl.y)) == 0, "iv", "z <= b and z <= c imply z <= y");
  check.require(p.leq(pl.a, pl.y), "v", "a <= y");
  check.require(!p.leq(pl.x, pl.y), "vi", "x !<= y");
  check.require(!p.leq(pl.x, pl.a), "vii", "x !<= a");
  check.require(p.incomparable(pl.a, pl.b), "viii", "a || b");
  check.require(!p.leq(pl.b, pl.c), "ix", "b !<= c");
}

}  // namespace

EmbeddedSub build_t2(const JoinSemilattice& s, const ProofLabeling& pl, std::vector<Fact>* facts) {
  FactChecker check{s, facts};
  const Poset& p = s.poset();
  int ax = s.join(pl.a, pl.x);
  int ab = s.join(pl.a, pl.b);
  check.require(p.lt(pl.a, ax), "t2-1", "a < a v x");
  check.require(p.lt(ax, ab), "t2-2", "a v x < a v b");
  check.require(p.lt(pl.b, ab), "t2-3", "b < a v b");
  check.require(p.incomparable(pl.a, pl.b), "t2-4", "a || b");
  check.require(p.incomparable(ax, pl.b), "t2-5", "a v x || b");

  return make_sub(s, SubTemplate::M2,
                  {{"a", pl.a}, {"c", ax}, {"b", pl.b}, {"top", ab}}, check, "t2");
}

EmbeddedSub build_t4(const JoinSemilattice& s, const ProofLabeling& pl, int v,
                     std::vector<Fact>* facts) {
  FactChecker check{s, facts};
  const Poset& p = s.poset();
  if (v < 0 || v >= s.size()) throw IndexOutOfRange("v outside the structure");
  check.require(p.leq(v, pl.b), "x", "v <= b");
  check.require(p.leq(v, pl.c), "xi", "v <= c");

  int av = s.join(pl.a, v);
  int xav = s.join(s.join(pl.x, pl.a), v);
  int ab = s.join(pl.a, pl.b);
  check.require(p.lt(v, pl.b), "xii", "v < b");
  check.require(p.leq(v, pl.y), "xiii", "v <= y");
  check.require(p.lt(v, av), "xiv", "v < a v v");
  check.require(p.lt(av, xav), "xv", "a v v < x v a v v");
  check.require(p.lt(xav, ab), "xvi", "x v a v v < a v b");
  check.require(p.incomparable(av, pl.b), "xvii", "a v v || b");
  check.require(p.incomparable(xav, pl.b), "xviii", "x v a v v || b");

  EmbeddedSub sub = make_sub(
      s, SubTemplate::M4, {{"v", v}, {"a", av}, {"c", xav}, {"b", pl.b}, {"top", ab}}, check,
      "t4");
  check.require(sub.semi_strong, "t4-semi-strong", "T4 is semi-strong");
  return sub;
}

T5Result build_t5(const JoinSemilattice& s, const ProofLabeling& pl, int v,
                  std::vector<Fact>* facts) {
  FactChecker check{s, facts};
  const Poset& p = s.poset();
  if (v < 0 || v >= s.size()) throw IndexOutOfRange("v outside the structure");
  check.require(p.leq(v, pl.b), "x", "v <= b");
  check.require(p.leq(v, pl.c), "xi", "v <= c");

  int xav = s.join(s.join(pl.x, pl.a), v);
  int ab = s.join(pl.a, pl.b);
  ElementSet nset(p.down_set(pl.b) & p.down_set(xav));
  int w = join_of_set(s, nset);  // nonempty: v belongs to it
  int aw = s.join(pl.a, w);

  check.require(p.leq(w, pl.b) && p.leq(w, xav), "cor-1", "w <= b and w <= x v a v v");
  check.require(p.leq(w, pl.c), "cor-2", "w <= c");
  check.require(p.leq(w, pl.y), "cor-3", "w <= y");
  check.require(p.lt(w, pl.b), "cor-4", "w < b");
  check.require(p.lt(w, aw), "cor-5", "w < a v w");
  check.require(p.lt(aw, xav), "cor-6", "a v w < x v a v v");
  check.require(p.incomparable(aw, pl.b), "cor-7", "a v w || b");
  check.require((nset.bits & ~p.down_set(w)) == 0, "cor-8",
                "z <= b and z <= x v a v v imply z <= w");

  EmbeddedSub sub = make_sub(
      s, SubTemplate::M4, {{"v", w}, {"a", aw}, {"c", xav}, {"b", pl.b}, {"top", ab}}, check,
      "t5");
  check.require(sub.strong_lu, "t5-lu-strong", "T5 is LU-strong");
  return {std::move(sub), nset, w};
}

std::optional<ConstructionTrace> run_pipeline(const JoinSemilattice& s) {
  auto witness = check_omodular(s);
  if (!witness) return std::nullopt;

  ConstructionTrace trace;
  trace.witness = *witness;
  trace.labels = to_proof_labels(s, *witness);
  check_labeling(s, trace.labels, FactChecker{s, &trace.facts});
  trace.t2 = build_t2(s, trace.labels, &trace.facts);

  const Poset& p = s.poset();
  trace.lbc = ElementSet(p.down_set(trace.labels.b) & p.down_set(trace.labels.c));
  if (trace.lbc.empty()) {
    FactChecker check{s, &trace.facts};
    check.require(trace.t2.semi_strong, "t2-semi-strong",
                  "T2 is semi-strong when b and c have no common lower bound");
    return trace;
  }

  trace.v = lowest_bit(trace.lbc.bits);
  trace.t4 = build_t4(s, trace.labels, *trace.v, &trace.facts);

  // T5 re-checks v's defining conditions (x)/(xi); drop those duplicates.
  std::vector<Fact> t5_facts;
  auto t5 = build_t5(s, trace.labels, *trace.v, &t5_facts);
  for (auto& f : t5_facts)
    if (f.id.rfind("cor-", 0) == 0 || f.id.rfind("t5", 0) == 0)
      trace.facts.push_back(std::move(f));
  trace.nset = t5.nset;
  trace.w = t5.w;
  trace.t5 = std::move(t5.sub);
  return trace;
}

}  // namespace omod
