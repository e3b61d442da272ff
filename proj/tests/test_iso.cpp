#include <algorithm>
#include <random>

#include "doctest.h"
#include "omod/builtins.hpp"
#include "omod/enumerate.hpp"
#include "omod/io.hpp"
#include "omod/iso.hpp"

using namespace omod;

namespace {

// Relabels s by a random permutation with fresh names.
JoinSemilattice shuffled(const JoinSemilattice& s, std::mt19937& rng) {
  const int n = s.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(i)] = "n" + std::to_string(i);
    for (int j = 0; j < n; ++j)
      if (s.poset().leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
        up[static_cast<std::size_t>(i)] |= bit(j);
  }
  return JoinSemilattice::from_poset(Poset(std::move(names), std::move(up)));
}

}  // namespace

TEST_CASE("is_isomorphic on the documented pairs") {
  std::mt19937 rng(7);
  auto m2 = builtin("m2");
  auto renamed = shuffled(m2, rng);
  auto iso = is_isomorphic(m2, renamed);
  REQUIRE(iso.has_value());
  for (int i = 0; i < m2.size(); ++i)
    for (int j = 0; j < m2.size(); ++j)
      CHECK(m2.poset().leq(i, j) ==
            renamed.poset().leq((*iso)[static_cast<std::size_t>(i)],
                                (*iso)[static_cast<std::size_t>(j)]));

  CHECK_FALSE(is_isomorphic(m2, builtin("chain:4")).has_value());
  CHECK_FALSE(is_isomorphic(builtin("m4"), builtin("m3")).has_value());
}

TEST_CASE("isomorphism preserves joins") {
  std::mt19937 rng(11);
  for (const char* which : {"m4", "m3", "antichain-top:4"}) {
    auto s = builtin(which);
    auto t = shuffled(s, rng);
    auto iso = is_isomorphic(s, t);
    REQUIRE(iso.has_value());
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        CHECK((*iso)[static_cast<std::size_t>(s.join(i, j))] ==
              t.join((*iso)[static_cast<std::size_t>(i)], (*iso)[static_cast<std::size_t>(j)]));
  }
}

TEST_CASE("canonical form basics") {
  CHECK(canonical_form(builtin("chain:1")) == "1");
  CHECK(canonical_form(builtin("m2")) != canonical_form(builtin("chain:4")));
  std::mt19937 rng(3);
  for (const char* which : {"m2", "m4", "m3"}) {
    auto s = builtin(which);
    CHECK(canonical_form(s) == canonical_form(shuffled(s, rng)));
  }
  CHECK_THROWS_AS(canonical_form(builtin("chain:11")), SizeLimitExceeded);
  CHECK_THROWS_AS(canonical_form(builtin("chain:5"), 4), SizeLimitExceeded);
}

TEST_CASE("canonical form is the minimum over all permutations (small sizes)") {
  // Independent check against plain full enumeration.
  for (const char* which : {"m2", "m4", "chain:3", "antichain-top:3", "m3"}) {
    auto s = builtin(which);
    const int n = s.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::string best;
    do {
      std::string bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), '0');
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (s.poset().leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
            bits[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)] = '1';
      if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canonical_form(s) == best);
  }
}

TEST_CASE("canonical form equality characterizes isomorphism at small sizes") {
  std::vector<JoinSemilattice> structures;
  for (int n = 1; n <= 5; ++n)
    for (auto& s : enum_jsls(n)) structures.push_back(std::move(s));
  std::mt19937 rng(23);
  std::vector<JoinSemilattice> extra;
  for (const auto& s : structures) extra.push_back(shuffled(s, rng));
  for (auto& s : extra) structures.push_back(std::move(s));

  std::vector<std::string> canon;
  for (const auto& s : structures) canon.push_back(canonical_form(s));
  for (std::size_t i = 0; i < structures.size(); ++i)
    for (std::size_t j = i + 1; j < structures.size(); ++j) {
      bool same = canon[i] == canon[j];
      bool iso = is_isomorphic(structures[i], structures[j]).has_value();
      CHECK(same == iso);
    }
}
