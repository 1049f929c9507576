#include "doctest.h"
#include "mudeg/errors.hpp"
#include "mudeg/expr.hpp"
#include "random_expr.hpp"

using namespace mudeg;
using K = GroupExpr::Kind;

TEST_CASE("parsing examples") {
  const GroupExpr p = parse_group("C4 x C4");
  CHECK(p.kind == K::Product);
  REQUIRE(p.children.size() == 2);
  CHECK(p.children[0] == GroupExpr::leaf(K::Cyclic, {4}));

  const GroupExpr w = parse_group("C4 wr S3");
  CHECK(w.kind == K::Wreath);
  CHECK(w.children[0] == GroupExpr::leaf(K::Cyclic, {4}));
  CHECK(w.children[1] == GroupExpr::leaf(K::Symmetric, {3}));

  CHECK(parse_group("G(4,4,3)") == GroupExpr::leaf(K::Reflection, {4, 4, 3}));
  CHECK(parse_group(" G ( 4 , 4 , 3 ) ") == parse_group("G(4,4,3)"));
  CHECK(parse_group("C4^3").kind == K::Power);
  CHECK(parse_group("C2 × S3") == parse_group("C2 x S3"));
  CHECK(parse_group("(C2 x S3)") == parse_group("C2 x S3"));
}

TEST_CASE("canonical printing") {
  CHECK(to_string(parse_group("C4  x C4")) == "C4 x C4");
  CHECK(to_string(parse_group("C4wrS3")) == "C4 wr S3");
  CHECK(to_string(parse_group("(C2 x C3)^2")) == "(C2 x C3)^2");
  CHECK(to_string(parse_group("(C2 x C3) x C4")) == "(C2 x C3) x C4");
  CHECK(to_string(parse_group("G( 4,4,3 )")) == "G(4,4,3)");
}

TEST_CASE("orders and construction") {
  CHECK(expected_order(parse_group("D6")) == 12);
  CHECK(expected_order(parse_group("C4 wr S3")) == 384);
  CHECK(expected_order(parse_group("C4^3")) == 64);
  CHECK(expected_order(parse_group("G(4,4,3) x C4")) == 384);
  CHECK(expected_order(parse_group("A5 x S3")) == 360);
  CHECK(expected_order(parse_group("S30^30")) == UINT64_MAX);
  for (const char* text : {"D6", "C4 wr S3", "C4^3", "G(4,2,3) x C2", "A4", "S1", "C1 x C1", "(C2 wr S2)^2"}) {
    CAPTURE(text);
    const GroupExpr e = parse_group(text);
    CHECK(build_group(e).order() == expected_order(e));
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_group("G(4,3,3)"), SemanticError);
  try {
    parse_group("G(4,3,3)");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()).find("does not divide") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group("A2"), SemanticError);
  CHECK_THROWS_AS(parse_group("C0"), SemanticError);
  CHECK_THROWS_AS(parse_group("D2"), SemanticError);
  CHECK_THROWS_AS(parse_group("C4^0"), SemanticError);
  CHECK_THROWS_AS(parse_group("S3 wr S3"), SemanticError);
  CHECK_THROWS_AS(parse_group("C3 wr C3"), SemanticError);
  CHECK_THROWS_AS(parse_group("G(4,4,1)"), SemanticError);
}

TEST_CASE("syntax errors report position and expectation") {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_group(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return SIZE_MAX;
  };
  CHECK(position("") == 0);
  CHECK(position("C") == 1);
  CHECK(position("C4 x") == 4);
  CHECK(position("G(4,4") == 5);
  CHECK(position("C4 C4") == 3);
  CHECK(position("(C4") == 3);
  CHECK(position("Z4") == 0);
  try {
    parse_group("C4 x");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
}

TEST_CASE("random round trip") {
  gen::ExprText g(2024);
  for (int i = 0; i < 300; ++i) {
    const std::string text = g.next();
    CAPTURE(text);
    const GroupExpr e = parse_group(text);
    const std::string canonical = to_string(e);
    CHECK(parse_group(canonical) == e);
    CHECK(to_string(parse_group(canonical)) == canonical);
  }
}
