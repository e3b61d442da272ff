#include "doctest.h"
#include "omod/enumerate.hpp"
#include "omod/io.hpp"
#include "omod/iso.hpp"
#include "omod/omod.hpp"
#include "omod/render.hpp"
#include "omod/substructure.hpp"
#include "oracle.hpp"

using namespace omod;

TEST_CASE("class counts for small sizes") {
  const long long expected[] = {0, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 6; ++n) CHECK(enum_jsls(n).size() == static_cast<std::size_t>(expected[n]));
  CHECK_THROWS_AS(enum_jsls(0), SizeLimitExceeded);
  CHECK_THROWS_AS(enum_jsls(9), SizeLimitExceeded);
}

TEST_CASE("enumeration agrees with the direct labeled-relation filter") {
  for (int n = 1; n <= 5; ++n) {
    auto ours = enum_jsls(n);
    auto brute = oracle::enumerate_jsls_direct(n);
    REQUIRE(ours.size() == brute.size());
    // every brute class matches exactly one enumerated structure
    for (const auto& b : brute) {
      int matches = 0;
      for (const auto& s : ours)
        if (oracle::isomorphic(oracle::rel_of(s), b)) ++matches;
      CHECK(matches == 1);
    }
  }
}

namespace {
std::string dump_bits(const Poset& p) {
  std::string out(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(p.size()), '0');
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j))
        out[static_cast<std::size_t>(i) * static_cast<std::size_t>(p.size()) +
            static_cast<std::size_t>(j)] = '1';
  return out;
}
}  // namespace

TEST_CASE("no two emitted structures are isomorphic, stream is canonically sorted") {
  for (int n = 1; n <= 5; ++n) {
    auto structures = enum_jsls(n);
    std::vector<std::string> canon;
    for (const auto& s : structures) {
      canon.push_back(canonical_form(s));
      // emitted structures are already in canonical form
      CHECK(canon.back() == dump_bits(s.poset()));
    }
    for (std::size_t i = 0; i + 1 < canon.size(); ++i) CHECK(canon[i] < canon[i + 1]);
    for (std::size_t i = 0; i < structures.size(); ++i)
      for (std::size_t j = i + 1; j < structures.size(); ++j)
        CHECK_FALSE(is_isomorphic(structures[i], structures[j]).has_value());
  }
}

TEST_CASE("census at n=4 under lu strength") {
  auto report = validate_theorems(4, Strength::Lu);
  CHECK(report.jsl_count == 5);
  CHECK(report.omodular_count == 4);
  CHECK(report.non_omodular_count == 1);
  CHECK(report.with_semi_strong_m2 == 1);
  CHECK(report.with_semi_strong_m4 == 0);
  CHECK(report.violations.empty());
  CHECK(report.asserted_claims_ok());
}

TEST_CASE("census claims hold through n=6; strict strength fails C at n=6") {
  for (int n = 1; n <= 6; ++n) {
    auto report = validate_theorems(n, Strength::Both);
    CHECK(report.omodular_count + report.non_omodular_count == report.jsl_count);
    for (const auto& v : report.violations) CHECK(v.claim == "C:strict");
    CHECK(report.asserted_claims_ok());
    if (n < 6) CHECK(report.violations.empty());
    if (n == 6) CHECK_FALSE(report.violations.empty());
  }
}

TEST_CASE("strict C violations reproduce from their canonical strings") {
  auto report = validate_theorems(6, Strength::Strict);
  REQUIRE_FALSE(report.violations.empty());
  for (const auto& v : report.violations) {
    auto s = from_canonical(v.canonical);
    CHECK(check_omodular(s).has_value());
    bool semi_m2 = false, strict_m4 = false;
    for (const auto& sub : find_m2(s)) semi_m2 |= sub.semi_strong;
    for (const auto& sub : find_m4(s)) strict_m4 |= sub.strong_strict;
    CHECK_FALSE(semi_m2);
    CHECK_FALSE(strict_m4);
    // the dumped structure file parses back to the same class
    auto reparsed = parse_structure(v.structure_file);
    CHECK(canonical_form(reparsed) == v.canonical);
  }
}

TEST_CASE("reports are byte-identical for any worker count") {
  auto a = validate_theorems(5, Strength::Both, 1);
  auto b = validate_theorems(5, Strength::Both, 4);
  CHECK(render_report_text(a) == render_report_text(b));
  CHECK(report_json(a).dump() == report_json(b).dump());
}
