#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omod/omod.hpp"
#include "omod/substructure.hpp"

namespace omod {

/// One checked step of the constructive derivation. Every recorded fact is
/// true; a failing check aborts the construction with FactViolation instead
/// of being recorded.
struct Fact {
  std::string id;         // "i".."xviii", "t2-*", "t4-*", "cor-*", "t5-*"
  std::string statement;  // role-letter form, e.g. "a v v < x v a v v"
  bool pass = true;
};

/// Full audit log of the witness -> T2 -> v -> T4 -> T5 construction.
struct ConstructionTrace {
  OModWitness witness;
  ProofLabeling labels;
  EmbeddedSub t2;
  ElementSet lbc;  // common lower bounds of b and c, in proof labels
  std::optional<int> v;
  std::optional<EmbeddedSub> t4;
  std::optional<ElementSet> nset;  // {n : n <= b, n <= x v a v v}
  std::optional<int> w;            // join of nset
  std::optional<EmbeddedSub> t5;
  std::vector<Fact> facts;
};

/// T2 = {a, b, a v x, a v b}: a 4-chain-with-side matching m2, semi-strong
/// exactly when b and c have no common lower bound. Checks the chain
/// a < a v x < a v b, b < a v b and both incomparabilities; throws
/// FactViolation naming the first failed inequality.
EmbeddedSub build_t2(const JoinSemilattice& s, const ProofLabeling& pl,
                     std::vector<Fact>* facts = nullptr);

/// T4 = {v, a v v, x v a v v, b, a v b} for any v below both b and c;
/// checks facts (x)-(xviii), the m4 match, and semi-strongness.
EmbeddedSub build_t4(const JoinSemilattice& s, const ProofLabeling& pl, int v,
                     std::vector<Fact>* facts = nullptr);

/// T5 replaces v by w = join of every common lower bound of b and x v a v v,
/// which upgrades the substructure to LU-strong. strong_strict is recorded
/// as computed; it is not implied by the construction.
struct T5Result {
  EmbeddedSub sub;
  ElementSet nset;
  int w;
};
T5Result build_t5(const JoinSemilattice& s, const ProofLabeling& pl, int v,
                  std::vector<Fact>* facts = nullptr);

/// Full pipeline: decide o-modularity; on a witness, relabel and build T2;
/// if b and c have a common lower bound, pick the least-index one and build
/// T4 and T5. nullopt means o-modular.
std::optional<ConstructionTrace> run_pipeline(const JoinSemilattice& s);

}  // namespace omod
