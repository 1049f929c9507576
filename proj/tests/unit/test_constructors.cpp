#include "doctest.h"
#include "mudeg/constructors.hpp"
#include "mudeg/errors.hpp"
#include "mudeg/lattice.hpp"
#include "mudeg/presentation.hpp"
#include "oracles.hpp"

using namespace mudeg;

TEST_CASE("basic constructors") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(6).order() == 12);
  CHECK(!dihedral(6).is_abelian());
  const std::vector<std::size_t> orders{2, 3, 4};
  CHECK(abelian(orders).order() == 24);
  CHECK(abelian(orders).degree() == 9);
  CHECK(direct_product(symmetric(3), cyclic(4)).order() == 24);
  CHECK_THROWS_AS(cyclic(0), SemanticError);
  CHECK_THROWS_AS(alternating(2), SemanticError);
  CHECK_THROWS_AS(dihedral(2), SemanticError);
}

TEST_CASE("wreath products") {
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 3; ++n) {
      const WreathCyclic w = wreath_cyclic(m, n);
      std::uint64_t expected = n == 2 ? 2 : 6;
      for (std::size_t i = 0; i < n; ++i) expected *= m;
      CHECK(w.group().order() == expected);
      CHECK(w.degree() == m * n);
      for (const auto& g : w.group().generators()) CHECK(commute(g, w.diagonal()));
    }
  const WreathCyclic w = wreath_cyclic(4, 3);
  CHECK(w.gamma(1).to_string() == "(4 5 6 7)");
  CHECK(w.top_generators()[0].to_string() == "(4 8)(5 9)(6 10)(7 11)");
  CHECK(w.top_generators()[1].to_string() == "(0 4 8)(1 5 9)(2 6 10)(3 7 11)");
  CHECK(w.rotations(w.gamma(1).pow(3)) == std::vector<std::size_t>{0, 3, 0});
  CHECK_THROWS_AS(wreath_cyclic(1, 3), SemanticError);
  CHECK_THROWS_AS(wreath_cyclic(3, 1), SemanticError);
}

TEST_CASE("reflection group orders against closure") {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (std::size_t n = 2; n <= 3; ++n) {
        if (reflection_group_order(m, p, n) > 1000) continue;
        CAPTURE(m);
        CAPTURE(p);
        CAPTURE(n);
        const PermGroup g = reflection_group(m, p, n);
        CHECK(oracle::elements(g).size() == reflection_group_order(m, p, n));
      }
    }
  CHECK(reflection_group(4, 4, 3).order() == 96);
  CHECK(reflection_group(1, 1, 4).order() == 24);
  CHECK_THROWS_AS(reflection_group(4, 3, 3), SemanticError);
  CHECK_THROWS_AS(reflection_group(4, 4, 1), SemanticError);
}

TEST_CASE("G(4,4,3) generators satisfy the conjugation relations") {
  const WreathCyclic w = wreath_cyclic(4, 3);
  const G443Generators g = g443_generators(w);
  using oracle::conj;
  using oracle::from;
  using oracle::mul;
  CHECK(conj(from(g.x), from(g.a)) == from(g.y));
  CHECK(conj(from(g.y), from(g.a)) == from(g.x));
  CHECK(conj(from(g.x), from(g.b)) == from(g.y));
  CHECK(conj(from(g.y), from(g.b)) == mul(oracle::inv(from(g.x)), oracle::inv(from(g.y))));
  CHECK(element_order(g.x) == 4);
  CHECK(element_order(g.b) == 3);
  const auto gens = g.as_list();
  CHECK(oracle::closure(12, oracle::from(gens)).size() == 96);
  // the same subgroup as the reflection-group generators
  const auto r = reflection_group(4, 4, 3);
  CHECK(oracle::closure(12, oracle::from(gens)) == oracle::elements(r));
  CHECK_THROWS(g443_generators(wreath_cyclic(3, 3)));
}

TEST_CASE("diagonal centre of the wreath product") {
  const WreathCyclic w = wreath_cyclic(4, 3);
  const ElementTable t = enumerate_elements(w.group());
  const Subgroup h = diagonal_center(w, t);
  CHECK(h.order == 4);
  CHECK(is_normal(t, h));
}

TEST_CASE("word parsing") {
  const std::vector<std::string> g{"x", "y", "a"};
  CHECK(parse_word("x^3", g) == Word{1, 1, 1});
  CHECK(parse_word("x^-2", g) == Word{-1, -1});
  CHECK(parse_word("x^a", g) == Word{-3, 1, 3});
  CHECK(parse_word("[x,y]", g) == Word{-1, -2, 1, 2});
  CHECK(parse_word("(x*y)^2", g) == Word{1, 2, 1, 2});
  CHECK(parse_word("x^a = y", g) == Word{-3, 1, 3, -2});
  CHECK(parse_word("1", g).empty());
  CHECK(format_word(Word{1, -2, 3}, g) == "x*y^-1*a");
  CHECK(inverse_word(Word{1, -2, 3}) == Word{-3, 2, -1});
  CHECK_THROWS_AS(parse_word("z", g), ParseError);
  CHECK_THROWS_AS(parse_word("x y", g), ParseError);
  CHECK_THROWS_AS(parse_word("x^", g), ParseError);
  CHECK_THROWS_AS(parse_word("[x,y", g), ParseError);
}

TEST_CASE("presentation files") {
  const PresentationFile f = parse_presentation("# S3\ngens: a b\na^2\nb^3\n(a*b)^2\nsubgroup: a\n");
  CHECK(f.presentation.generators == std::vector<std::string>{"a", "b"});
  CHECK(f.presentation.relators.size() == 3);
  CHECK(f.subgroup.size() == 1);
  CHECK_THROWS_AS(parse_presentation("a^2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nb^2\n"), ParseError);
  try {
    parse_presentation("gens: a b\na^2\nb^^3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 15);
  }
}

TEST_CASE("Todd-Coxeter on small presentations") {
  auto index = [](const char* text) {
    const auto f = parse_presentation(text);
    return todd_coxeter(f.presentation, f.subgroup).index;
  };
  CHECK(index("gens: a b\na^2\nb^3\n(a*b)^2\n") == 6);
  CHECK(index("gens: a b\na^2\nb^3\n(a*b)^2\nsubgroup: a\n") == 3);
  CHECK(index("gens: a b\na^2\nb^3\n(a*b)^3\n") == 12);
  CHECK(index("gens: a b\na^2\nb^3\n(a*b)^4\n") == 24);
  CHECK(index("gens: a b\na^2\nb^3\n(a*b)^5\n") == 60);
  CHECK(index("gens: i j\ni^4\ni^2 = j^2\nj^-1*i*j*i\n") == 8);
  CHECK(index("gens: a\na^7\n") == 7);
  CHECK(index("gens: a b\na\nb\n") == 1);
  CHECK(index("gens: a b\na^4\nb^2\n(a*b)^2\n[a,b]\n") == 4);
}

TEST_CASE("coset table is consistent and its permutations generate the group") {
  const auto f = parse_presentation("gens: a b\na^2\nb^3\n(a*b)^4\n");
  const Enumeration e = todd_coxeter(f.presentation, {});
  CHECK(e.table.is_consistent(f.presentation));
  const auto perms = e.table.generator_permutations();
  CHECK(PermGroup(e.index, perms).order() == 24);
  for (const auto& r : f.presentation.relators) CHECK(evaluate_word(perms, r).is_identity());
}

TEST_CASE("coset cap") {
  const auto f = parse_presentation("gens: a b\na^2\nb^3\n");
  CHECK_THROWS_AS(todd_coxeter(f.presentation, {}, 1000), CapExceeded);
}

TEST_CASE("G(4,4,3) presentation") {
  const Presentation p = g443_presentation();
  const auto gens = g443_generators(wreath_cyclic(4, 3)).as_list();
  for (const auto& r : p.relators) CHECK(evaluate_word(gens, r).is_identity());
  const Enumeration e = todd_coxeter(p, {});
  CHECK(e.index == 96);
  CHECK(verify_presentation_isomorphism(p, gens));
  CHECK(todd_coxeter(g443_presentation_with_ya(), {}).index == 96);
  const Word xy_a = parse_word("y^a = x", p.generators);
  CHECK(evaluate_word(gens, xy_a).is_identity());
}

TEST_CASE("evaluate_word errors") {
  const std::vector<Permutation> images{Permutation::parse_cycles(3, "(0 1)")};
  CHECK_THROWS_AS(evaluate_word(images, Word{2}), std::out_of_range);
  CHECK_THROWS_AS(evaluate_word(std::span<const Permutation>(), Word{1}), std::invalid_argument);
  CHECK(evaluate_word(images, Word{1, 1}).is_identity());
}
