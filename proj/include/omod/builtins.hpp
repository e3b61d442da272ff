#pragma once

#include <string_view>

#include "omod/semilattice.hpp"

namespace omod {

/// Built-in structures:
///   m2              a < c < top, b < top
///   m4              v < a < c < top, v < b < top (the pentagon)
///   m3              diamond: bot, three atoms, top
///   chain:k         k-element total order c1 < ... < ck
///   antichain-top:k k incomparable atoms a1..ak below top
/// Throws UnknownBuiltin or BadParameter.
JoinSemilattice builtin(std::string_view name);

}  // namespace omod
