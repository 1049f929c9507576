#include <map>

#include "doctest.h"
#include "mudeg/action.hpp"
#include "mudeg/constructors.hpp"
#include "mudeg/errors.hpp"
#include "mudeg/lattice.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace mudeg;

namespace {

oracle::Set as_set(const ElementTable& t, const Subgroup& h) {
  oracle::Set s;
  h.members.for_each([&](std::size_t e) { s.insert(oracle::from(t.element(e))); });
  return s;
}

SubgroupLattice lattice_of(const PermGroup& g) {
  return all_subgroups(std::make_shared<const ElementTable>(enumerate_elements(g)));
}

}  // namespace

TEST_CASE("subgroup lattices match brute-force enumeration") {
  for (const auto& e : corpus::small_groups()) {
    CAPTURE(e.name);
    const SubgroupLattice lat = lattice_of(e.group);
    const auto& t = lat.table();
    const oracle::Set g = oracle::elements(e.group);
    const auto expected = oracle::all_subgroups(g);
    std::set<oracle::Set> got;
    for (const auto& h : lat.subgroups()) got.insert(as_set(t, h));
    CHECK(got.size() == lat.size());
    CHECK(got == expected);

    for (std::size_t id = 0; id < lat.size(); ++id) {
      const oracle::Set h = as_set(t, lat[id]);
      CHECK(lat.is_normal(id) == oracle::is_normal(g, h));
      CHECK(as_set(t, lat[lat.core_id(id)]) == oracle::core(g, h));
      CHECK(core(t, lat[id]) == lat[lat.core_id(id)]);
      CHECK(lat[id].order * lat[id].index == t.size());
    }
  }
}

TEST_CASE("known subgroup counts") {
  const std::map<std::string, std::size_t> counts{{"S3", 6},  {"S4", 30}, {"A4", 10}, {"D4", 10},
                                                  {"Q8", 6},  {"D6", 16}, {"C3:C4", 8}, {"C12", 6},
                                                  {"C2^3", 16}, {"C1", 1}};
  for (const auto& e : corpus::small_groups()) {
    auto it = counts.find(e.name);
    if (it == counts.end()) continue;
    CAPTURE(e.name);
    CHECK(lattice_of(e.group).size() == it->second);
  }
}

TEST_CASE("lattice ordering and conjugacy classes") {
  const SubgroupLattice lat = lattice_of(symmetric(4));
  CHECK(lat[lat.trivial_id()].is_trivial());
  CHECK(lat[lat.whole_id()].order == 24);
  for (std::size_t id = 1; id < lat.size(); ++id) CHECK(lat[id - 1].order <= lat[id].order);
  CHECK(lat.class_count() == 11);
  CHECK(lat.normal_subgroups().size() == 4);
  const auto minimal = lat.minimal_normal_subgroups();
  REQUIRE(minimal.size() == 1);
  CHECK(lat[minimal[0]].order == 4);

  const oracle::Set g = oracle::elements(symmetric(4));
  const auto& t = lat.table();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (lat[i].order != lat[j].order) continue;
      bool conj = false;
      const oracle::Set hi = as_set(t, lat[i]), hj = as_set(t, lat[j]);
      for (const auto& x : g) {
        oracle::Set c;
        for (const auto& y : hi) c.insert(oracle::conj(y, x));
        if (c == hj) conj = true;
      }
      CHECK((lat.class_id(i) == lat.class_id(j)) == conj);
    }
}

TEST_CASE("subgroup helpers") {
  const PermGroup s4 = symmetric(4);
  const ElementTable t = enumerate_elements(s4);
  const std::vector<Permutation> gens{Permutation::parse_cycles(4, "(0 1 2 3)")};
  const Subgroup c4 = generate_subgroup(t, std::span<const Permutation>(gens));
  CHECK(c4.order == 4);
  CHECK(c4.index == 6);
  CHECK(!is_normal(t, c4));
  CHECK(core(t, c4).order == 1);
  CHECK(trivial_subgroup(t).order == 1);
  CHECK(whole_group(t).order == 24);
  CHECK(is_closed(t, c4.members));
  ElementSet bad = c4.members;
  bad.erase(0);
  CHECK(!is_closed(t, bad));
  CHECK_THROWS_AS(make_subgroup(t, bad), std::invalid_argument);
  const Subgroup c = conjugate(t, c4, *t.index_of(Permutation::parse_cycles(4, "(1 2)")));
  CHECK(c.order == 4);
  CHECK(c != c4);
  CHECK(intersect(t, c, c4).order == 1);
  const auto profile = order_profile(t);
  CHECK(profile.at(1) == 1);
  CHECK(profile.at(2) == 9);
  CHECK(profile.at(3) == 8);
  CHECK(profile.at(4) == 6);
}

TEST_CASE("coset actions") {
  const PermGroup s4 = symmetric(4);
  const ElementTable t = enumerate_elements(s4);
  const CosetAction regular = coset_action(s4, t, trivial_subgroup(t));
  CHECK(regular.image.degree() == 24);
  CHECK(is_faithful_action(s4, regular.image));
  const CosetAction one = coset_action(s4, t, whole_group(t));
  CHECK(one.image.degree() == 1);
  CHECK(!is_faithful_action(s4, one.image));

  const SubgroupLattice lat = lattice_of(s4);
  for (std::size_t id = 0; id < lat.size(); ++id) {
    const CosetAction a = coset_action(s4, lat.table(), lat[id]);
    CHECK(a.image.degree() == lat[id].index);
    CHECK(is_faithful_action(s4, a.image) == (lat.core_id(id) == lat.trivial_id()));
    // stabilizer of the coset H is H
    for (std::size_t e = 0; e < lat.table().size(); ++e)
      CHECK((a.coset_of[e] == a.coset_of[0]) == lat[id].contains(e));
  }
  ElementSet bad(t.size());
  bad.insert(1);
  CHECK_THROWS(coset_action(s4, t, Subgroup{bad, 1, 24, {}}));
}

TEST_CASE("centralizer in the symmetric group equals N(H)/H for transitive actions") {
  for (const auto& g : {symmetric(3), alternating(4), dihedral(4), reflection_group(2, 2, 3)}) {
    const SubgroupLattice lat = lattice_of(g);
    const oracle::Set all = oracle::elements(g);
    for (std::size_t id = 0; id < lat.size(); ++id) {
      if (lat[id].index > 8) continue;
      const CosetAction a = coset_action(g, lat.table(), lat[id]);
      const PermGroup c = centralizer_in_sym(a.image);
      const oracle::Set h = as_set(lat.table(), lat[id]);
      CHECK(c.order() == oracle::normalizer(all, h).size() / h.size());
      for (const auto& z : c.generators())
        for (const auto& s : a.image.generators()) CHECK(commute(z, s));
    }
  }
  CHECK_THROWS_AS(centralizer_in_sym(symmetric(11)), std::invalid_argument);
}

TEST_CASE("internal direct products") {
  const WreathCyclic w = wreath_cyclic(4, 3);
  const ElementTable t = enumerate_elements(w.group());
  const PermGroup g = reflection_group(4, 4, 3);
  const Subgroup gs = generate_subgroup(t, std::span<const Permutation>(g.generators()));
  const Subgroup h = diagonal_center(w, t);
  CHECK(internal_direct_product(t, gs, h));
  const ElementTable t3 = enumerate_elements(wreath_cyclic(3, 3).group());
  const PermGroup g3 = reflection_group(3, 3, 3);
  const Subgroup gs3 = generate_subgroup(t3, std::span<const Permutation>(g3.generators()));
  CHECK(!internal_direct_product(t3, gs3, diagonal_center(wreath_cyclic(3, 3), t3)));
}

TEST_CASE("subgroup cap") {
  auto t = std::make_shared<const ElementTable>(enumerate_elements(symmetric(4)));
  CHECK_THROWS_AS(all_subgroups(t, 10), CapExceeded);
}
