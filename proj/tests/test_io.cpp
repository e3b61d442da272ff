#include "doctest.h"
#include "omod/builtins.hpp"
#include "omod/io.hpp"

using namespace omod;

TEST_CASE("write_structure emits the canonical m2 file") {
  CHECK(write_structure(builtin("m2")) ==
        "elements: a c top b\n"
        "covers:\n"
        "a < c\n"
        "c < top\n"
        "b < top\n");
}

TEST_CASE("structure files round-trip") {
  for (const char* which : {"m2", "m4", "m3", "chain:5", "antichain-top:4"}) {
    auto s = builtin(which);
    auto back = parse_structure(write_structure(s));
    REQUIRE(back.size() == s.size());
    for (int i = 0; i < s.size(); ++i) {
      CHECK(back.name(i) == s.name(i));
      for (int j = 0; j < s.size(); ++j) CHECK(back.poset().leq(i, j) == s.poset().leq(i, j));
    }
  }
}

TEST_CASE("from_canonical") {
  auto one = from_canonical("1");
  CHECK(one.size() == 1);

  // 2-chain: a <= b
  auto chain2 = from_canonical("1101");
  CHECK(chain2.size() == 2);
  CHECK(chain2.poset().lt(0, 1));

  CHECK_THROWS_AS(from_canonical("101"), ParseError);
  CHECK_THROWS_AS(from_canonical("1x01"), ParseError);
  CHECK_THROWS_AS(from_canonical("0"), ParseError);        // not reflexive
  CHECK_THROWS_AS(from_canonical("1110"), ParseError);     // not reflexive
  CHECK_THROWS_AS(from_canonical("11110111011100101"), ParseError);
}

TEST_CASE("dot export is deterministic and structurally right") {
  auto m2 = builtin("m2");
  std::string dot = to_dot(m2);
  CHECK(dot == to_dot(m2));
  CHECK(dot ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  node [shape=ellipse];\n"
        "  \"a\";\n"
        "  \"c\";\n"
        "  \"top\";\n"
        "  \"b\";\n"
        "  \"a\" -> \"c\";\n"
        "  \"c\" -> \"top\";\n"
        "  \"b\" -> \"top\";\n"
        "}\n");

  auto singleton = parse_structure("elements: x\ncovers:\n");
  std::string sdot = to_dot(singleton);
  CHECK(sdot.find("\"x\";") != std::string::npos);
  CHECK(sdot.find("->") == std::string::npos);

  ElementSet hl;
  hl.add(*m2.poset().index_of("b"));
  std::string hdot = to_dot(m2, hl);
  CHECK(hdot.find("\"b\" [style=filled, fillcolor=lightgrey];") != std::string::npos);
}
