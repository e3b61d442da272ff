#pragma once

#include <optional>

#include "omod/semilattice.hpp"

namespace omod {

/// Certificate that the defining inclusion of o-modularity fails, in
/// definition form: c <= a, x in L(a, b v c), y in U(L(a,b) u {c}), x !<= y.
struct OModWitness {
  int a, b, c, x, y;

  friend bool operator==(const OModWitness&, const OModWitness&) = default;
};

/// The same five elements relabeled the way the derivation works with them:
/// a < c, x <= c, x <= a v b, a <= y, x !<= y, and every common lower bound
/// of b and c lies below y.
struct ProofLabeling {
  int a, b, c, x, y;

  friend bool operator==(const ProofLabeling&, const ProofLabeling&) = default;
};

/// Decides o-modularity: for all a, b, c with c <= a,
///   L(a, b v c)  is contained in  L(U(L(a,b) u {c})).
/// Scans triples (a, b, c) in lexicographic index order and returns the first
/// failure as a witness (least x missing from the right-hand set, then least
/// y with x !<= y); nullopt means o-modular.
std::optional<OModWitness> check_omodular(const JoinSemilattice& s);

/// Rechecks a witness from its defining conditions, independent of the
/// search order used to find it.
bool verify_witness(const JoinSemilattice& s, const OModWitness& w);

/// Swaps the a/c pair into the derivation's convention (a < c) and checks
/// all labeling conditions, including the derived facts x !<= a, a || b,
/// b !<= c. Throws InvalidWitness if the input does not verify.
ProofLabeling to_proof_labels(const JoinSemilattice& s, const OModWitness& w);

/// First triple (lexicographic, c <= a) violating the modular law
///   a ^ (b v c) = (a ^ b) v c,
/// or nullopt when the law holds. Requires every pair to have a greatest
/// lower bound; throws NotALattice otherwise.
struct ModularLawCounterexample {
  int a, b, c;

  friend bool operator==(const ModularLawCounterexample&, const ModularLawCounterexample&) =
      default;
};
std::optional<ModularLawCounterexample> modular_law_check(const JoinSemilattice& s);

}  // namespace omod
