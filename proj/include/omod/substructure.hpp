#pragma once

#include <string>
#include <vector>

#include "omod/semilattice.hpp"

namespace omod {

enum class SubTemplate { M2, M4 };

/// Strength of a sub join semilattice T inside S, per pair p, q of T:
///   semi_strong:   L_T(p,q) empty implies L_S(p,q) empty.
///   strong_strict: L_S(p,q) contained in L_T(p,q), i.e. every ambient
///                  common lower bound already lies in T.
///   strong_lu:     on pairs with L_T(p,q) empty, same as semi_strong; on
///                  the rest, every ambient common lower bound lies below
///                  every ambient upper bound of L_T(p,q).
/// strong_strict implies strong_lu implies semi_strong.
struct StrengthFlags {
  bool semi_strong = false;
  bool strong_strict = false;
  bool strong_lu = false;
};

/// A subset of the ambient structure matching one of the two templates,
/// with its role assignment and strength flags.
struct EmbeddedSub {
  ElementSet members;
  SubTemplate tmpl = SubTemplate::M2;
  /// Template role name -> ambient element index, in fixed role order
  /// (M2: a, c, b, top; M4: v, a, c, b, top).
  std::vector<std::pair<std::string, int>> roles;
  bool semi_strong = false;
  bool strong_strict = false;
  bool strong_lu = false;
};

/// All three flags for an arbitrary join-closed subset.
/// Throws NotJoinClosed when t is empty or not closed under joins.
StrengthFlags classify_strength(const JoinSemilattice& s, ElementSet t);

/// Every 4-element join-closed subset order-isomorphic to m2, sorted by
/// member index vector, flags computed.
std::vector<EmbeddedSub> find_m2(const JoinSemilattice& s);

/// Every 5-element join-closed subset order-isomorphic to m4, likewise.
std::vector<EmbeddedSub> find_m4(const JoinSemilattice& s);

}  // namespace omod
