#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "mudeg/action.hpp"
#include "mudeg/cli.hpp"
#include "mudeg/constructors.hpp"
#include "mudeg/expr.hpp"
#include "mudeg/mindeg.hpp"
#include "mudeg/presentation.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "random_expr.hpp"

using namespace mudeg;

namespace {

std::vector<corpus::Entry> lattice_corpus() {
  auto groups = corpus::small_groups();
  groups.push_back({"G(2,2,3)", reflection_group(2, 2, 3), false});
  groups.push_back({"G(3,3,3)", reflection_group(3, 3, 3), false});
  groups.push_back({"G(4,4,3)", reflection_group(4, 4, 3), false});
  return groups;
}

SubgroupLattice lattice_of(const PermGroup& g) {
  return all_subgroups(std::make_shared<const ElementTable>(enumerate_elements(g)));
}

}  // namespace

TEST_CASE("every lattice entry is closed under products") {
  for (const auto& e : lattice_corpus()) {
    CAPTURE(e.name);
    const SubgroupLattice lat = lattice_of(e.group);
    const ElementTable& t = lat.table();
    for (const auto& h : lat.subgroups()) {
      CHECK(is_closed(t, h.members));
      const auto members = h.members.members();
      for (std::size_t a : members)
        for (std::size_t b : members)
          if (!h.contains(t.product(a, b))) FAIL("subgroup not closed");
      CHECK(generate_subgroup(t, std::span<const std::size_t>(h.generators)) == h);
    }
  }
}

TEST_CASE("Lagrange identities") {
  for (const auto& e : lattice_corpus()) {
    CAPTURE(e.name);
    const SubgroupLattice lat = lattice_of(e.group);
    const std::size_t n = lat.table().size();
    std::map<std::size_t, std::size_t> class_size;
    std::size_t total = 0;
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const Subgroup& h = lat[id];
      CHECK(h.order * h.index == n);
      CHECK(n % h.order == 0);
      CHECK(h.members.count() == h.order);
      ++class_size[lat.class_id(id)];
    }
    for (const auto& [o, c] : lat.count_by_order()) {
      CHECK(n % o == 0);
      total += c;
    }
    CHECK(total == lat.size());
    // a class has |G : N_G(H)| members, which divides |G : H|
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const std::size_t size = class_size[lat.class_id(id)];
      CHECK(lat[id].index % size == 0);
      CHECK((size == 1) == lat.is_normal(id));
    }
    // element orders divide the group order and sum to it
    std::size_t elements = 0;
    for (const auto& [o, c] : order_profile(lat.table())) {
      CHECK(n % o == 0);
      elements += c;
    }
    CHECK(elements == n);
  }
}

TEST_CASE("a coset action is faithful exactly when the subgroup is core-free") {
  for (const auto& e : lattice_corpus()) {
    CAPTURE(e.name);
    const SubgroupLattice lat = lattice_of(e.group);
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const CosetAction a = coset_action(e.group, lat.table(), lat[id]);
      CHECK(is_faithful_action(e.group, a.image) == lat[lat.core_id(id)].is_trivial());
      // the kernel has order |G| / |image|, which is the core's order
      CHECK(e.group.order() / a.image.order() == lat[lat.core_id(id)].order);
    }
  }
}

TEST_CASE("degree is subadditive over direct products") {
  const std::vector<PermGroup> small{cyclic(2), cyclic(3), cyclic(4), symmetric(3), dihedral(4),
                                     corpus::quaternion(), alternating(4)};
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].order() * small[j].order() > 300) continue;
      const AdditivityReport r = additivity_check(small[i], small[j]);
      CHECK(r.mu_product <= r.mu_g + r.mu_h);
      CHECK(r.mu_product >= std::max(r.mu_g, r.mu_h));
    }
}

TEST_CASE("parse/print round trip on 1000 random expressions") {
  gen::ExprText g(0x5eed);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = g.next();
    CAPTURE(text);
    const GroupExpr e = parse_group(text);
    const std::string printed = to_string(e);
    const GroupExpr again = parse_group(printed);
    CHECK(again == e);
    CHECK(to_string(again) == printed);
    CHECK(expected_order(again) == expected_order(e));
  }
}

TEST_CASE("verify --json is byte-identical across runs") {
  auto once = [] {
    std::ostringstream out, err;
    const int code = run_cli({"verify-paper", "--json"}, out, err);
    CHECK(code == 0);
    return out.str();
  };
  CHECK(once() == once());
}

TEST_CASE("random permutation products are associative and match the oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 15;
    std::vector<Permutation> p;
    for (int k = 0; k < 3; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(img.begin(), img.end(), rng);
      p.emplace_back(img);
    }
    CHECK((p[0] * p[1]) * p[2] == p[0] * (p[1] * p[2]));
    CHECK(oracle::from(p[0] * p[1]) == oracle::mul(oracle::from(p[0]), oracle::from(p[1])));
    CHECK((p[0] * p[1]).inverse() == p[1].inverse() * p[0].inverse());
  }
}

TEST_CASE("Coxeter presentations of symmetric groups") {
  for (std::size_t n = 2; n <= 5; ++n) {
    Presentation p;
    for (std::size_t i = 0; i + 1 < n; ++i) p.generators.push_back("s" + std::to_string(i));
    const int k = static_cast<int>(n - 1);
    for (int i = 1; i <= k; ++i) {
      p.relators.push_back({i, i});
      for (int j = i + 1; j <= k; ++j) {
        if (j == i + 1) p.relators.push_back({i, j, i, j, i, j});
        else p.relators.push_back({i, j, i, j});
      }
    }
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    const Enumeration e = todd_coxeter(p, {});
    CHECK(e.index == factorial);
    CHECK(e.table.is_consistent(p));
  }
}
