#include "mudeg/mindeg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mudeg/action.hpp"
#include "mudeg/errors.hpp"

namespace mudeg {

std::optional<CoreCost> CoreCostTable::find(std::size_t core_id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), core_id,
                             [](const CoreCost& c, std::size_t id) { return c.core_id < id; });
  if (it == entries_.end() || it->core_id != core_id) return std::nullopt;
  return *it;
}

CoreCostTable core_cost_table(const SubgroupLattice& lattice) {
  std::vector<std::optional<CoreCost>> best(lattice.size());
  for (std::size_t id = 0; id < lattice.size(); ++id) {
    const std::size_t c = lattice.core_id(id);
    const std::size_t cost = lattice[id].index;
    if (!best[c] || cost < best[c]->cost) best[c] = CoreCost{c, cost, id};
  }
  std::vector<CoreCost> entries;
  for (const auto& b : best)
    if (b) entries.push_back(*b);
  return CoreCostTable(std::move(entries));
}

namespace {

struct Value {
  std::size_t degree;
  std::size_t count;
  friend auto operator<=>(const Value&, const Value&) = default;
};

class CoreSearch {
 public:
  CoreSearch(const SubgroupLattice& lattice, const CoreCostTable& costs)
      : lattice_(lattice), cores_(costs.entries()) {}

  Value best(std::size_t k) {
    if (lattice_[k].is_trivial()) return {0, 0};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Value result{std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
    for (const auto& c : cores_) {
      auto next = step(k, c);
      if (!next) continue;
      const Value sub = best(*next);
      result = std::min(result, Value{c.cost + sub.degree, 1 + sub.count});
    }
    memo_.emplace(k, result);
    return result;
  }

  // Every optimal core set, each listed once in increasing core-table order.
  void enumerate(std::size_t k, std::size_t start, std::vector<std::size_t>& chosen,
                 std::vector<std::vector<std::size_t>>& out) {
    if (lattice_[k].is_trivial()) {
      out.push_back(chosen);
      return;
    }
    const Value target = best(k);
    for (std::size_t pos = start; pos < cores_.size(); ++pos) {
      auto next = step(k, cores_[pos]);
      if (!next) continue;
      const Value sub = best(*next);
      if (Value{cores_[pos].cost + sub.degree, 1 + sub.count} != target) continue;
      chosen.push_back(pos);
      enumerate(*next, pos + 1, chosen, out);
      chosen.pop_back();
    }
  }

 private:
  // K ∩ N when it is strictly smaller than K.
  std::optional<std::size_t> step(std::size_t k, const CoreCost& c) const {
    const Subgroup& kk = lattice_[k];
    if (kk.members.is_subset_of(lattice_[c.core_id].members)) return std::nullopt;
    auto id = lattice_.find(kk.members & lattice_[c.core_id].members);
    if (!id) throw std::logic_error("intersection of normal subgroups missing from lattice");
    return id;
  }

  const SubgroupLattice& lattice_;
  const std::vector<CoreCost>& cores_;
  std::unordered_map<std::size_t, Value> memo_;
};

DegreeCertificate build_certificate(const PermGroup& group, const SubgroupLattice& lattice,
                                    std::vector<std::size_t> subgroup_ids) {
  const ElementTable& table = lattice.table();
  std::sort(subgroup_ids.begin(), subgroup_ids.end(), [&](std::size_t a, std::size_t b) {
    if (lattice[a].index != lattice[b].index) return lattice[a].index < lattice[b].index;
    return a < b;
  });
  DegreeCertificate cert;
  std::vector<const Subgroup*> parts;
  for (std::size_t id : subgroup_ids) {
    const Subgroup& h = lattice[id];
    CertificateEntry e;
    e.subgroup_id = id;
    for (std::size_t g : h.generators) e.generators.push_back(table.element(g));
    e.order = h.order;
    e.index = h.index;
    e.core_order = lattice[lattice.core_id(id)].order;
    cert.degree += h.index;
    cert.subgroups.push_back(std::move(e));
    parts.push_back(&h);
  }
  cert.action_images = combined_action(group, table, parts);
  cert.faithful = PermGroup(cert.degree, cert.action_images).order() == group.order();
  return cert;
}

}  // namespace

MuResult mu_exact(const PermGroup& group, const SubgroupLattice& lattice) {
  MuResult result;
  if (lattice.table().size() != group.order())
    throw std::invalid_argument("lattice does not belong to this group");
  if (lattice.size() == 1) {
    result.certificate.faithful = true;
    result.certificate.action_images.assign(group.generators().size(), Permutation(0));
    result.optimal_sets = 1;
    return result;
  }

  const CoreCostTable costs = core_cost_table(lattice);
  CoreSearch search(lattice, costs);
  const Value best = search.best(lattice.whole_id());

  std::vector<std::vector<std::size_t>> optimal;
  std::vector<std::size_t> chosen;
  search.enumerate(lattice.whole_id(), 0, chosen, optimal);
  if (optimal.empty()) throw std::logic_error("no optimal core set found");

  // Tie-break: sorted index list, then sorted representative ids.
  auto key = [&](const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> indices, ids;
    for (std::size_t pos : positions) {
      indices.push_back(costs.entries()[pos].cost);
      ids.push_back(costs.entries()[pos].representative);
    }
    std::sort(indices.begin(), indices.end());
    std::sort(ids.begin(), ids.end());
    return std::make_pair(indices, ids);
  };
  auto winner = std::min_element(optimal.begin(), optimal.end(),
                                 [&](const auto& a, const auto& b) { return key(a) < key(b); });

  std::vector<std::size_t> ids;
  for (std::size_t pos : *winner) ids.push_back(costs.entries()[pos].representative);
  result.value = best.degree;
  result.optimal_sets = optimal.size();
  result.certificate = build_certificate(group, lattice, ids);
  if (result.certificate.degree != result.value || !result.certificate.faithful ||
      !verify_certificate(group, lattice.table(), result.certificate))
    throw std::logic_error("degree certificate failed verification");
  return result;
}

MuResult mu_exact(const PermGroup& group, const Limits& limits) {
  auto table = std::make_shared<const ElementTable>(enumerate_elements(group, limits.max_order));
  const SubgroupLattice lattice = all_subgroups(table, limits.max_subgroups);
  return mu_exact(group, lattice);
}

bool verify_certificate(const PermGroup& group, const ElementTable& table, const DegreeCertificate& cert) {
  if (group.order() == 1) return cert.degree == 0 && cert.subgroups.empty();
  std::vector<Subgroup> subgroups;
  std::size_t degree = 0;
  ElementSet core_meet(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) core_meet.insert(i);
  for (const auto& e : cert.subgroups) {
    Subgroup h = generate_subgroup(table, std::span<const Permutation>(e.generators));
    if (h.order != e.order || h.index != e.index) return false;
    const Subgroup c = core(table, h);
    if (c.order != e.core_order) return false;
    core_meet &= c.members;
    degree += h.index;
    subgroups.push_back(std::move(h));
  }
  if (degree != cert.degree || core_meet.count() != 1) return false;
  std::vector<const Subgroup*> parts;
  for (const auto& h : subgroups) parts.push_back(&h);
  if (combined_action(group, table, parts) != cert.action_images) return false;
  return PermGroup(degree, cert.action_images).order() == group.order();
}

AbelianType abelian_invariants(const ElementTable& table) {
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s : table.generator_indices())
      if (table.product(i, s) != table.product(s, i))
        throw std::invalid_argument("abelian_invariants: group is not abelian");

  AbelianType type;
  std::size_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // omega[k] = #{g : g^(p^k) = 1}; log_p(omega[k] / omega[k-1]) counts the
    // cyclic factors of order at least p^k.
    std::vector<std::size_t> omega{1};
    for (std::uint64_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pk % table.order_of(i) == 0) ++count;
      if (count == omega.back()) break;
      omega.push_back(count);
    }
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < omega.size(); ++k) {
      std::size_t ratio = omega[k] / omega[k - 1], r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least.push_back(r);
    }
    at_least.push_back(0);
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k + 1 < at_least.size(); ++k) {
      pk *= p;
      for (std::size_t c = 0; c < at_least[k] - at_least[k + 1]; ++c) type.prime_powers.push_back(pk);
    }
  }
  std::sort(type.prime_powers.begin(), type.prime_powers.end());
  return type;
}

AbelianType abelian_invariants(const PermGroup& group, const Limits& limits) {
  if (!group.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  return abelian_invariants(enumerate_elements(group, limits.max_order));
}

std::size_t mu_abelian(const PermGroup& group, const Limits& limits) {
  const AbelianType t = abelian_invariants(group, limits);
  return std::accumulate(t.prime_powers.begin(), t.prime_powers.end(), std::size_t{0});
}

AdditivityReport additivity_check(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  const std::uint64_t product_order = g.order() * h.order();
  if (product_order > limits.max_order)
    throw CapExceeded("element", limits.max_order,
                      "direct product has order " + std::to_string(product_order));
  AdditivityReport r{};
  r.mu_g = mu_exact(g, limits).value;
  r.mu_h = mu_exact(h, limits).value;
  r.product_result = mu_exact(direct_product(g, h), limits);
  r.mu_product = r.product_result.value;
  r.strict = r.mu_product < r.mu_g + r.mu_h;
  return r;
}

WreathDecomposition decompose_wreath(std::size_t m, std::size_t n, const Limits& limits) {
  const WreathCyclic w = wreath_cyclic(m, n);
  PermGroup reflection = reflection_group(m, m, n);
  const Permutation d = w.diagonal();
  PermGroup center(w.degree(), {d});

  const ElementTable table = enumerate_elements(w.group(), limits.max_order);
  const Subgroup g = generate_subgroup(table, std::span<const Permutation>(reflection.generators()));
  const Subgroup h = diagonal_center(w, table);
  const std::size_t meet = (g.members & h.members).count();
  const bool direct = internal_direct_product(table, g, h);
  return WreathDecomposition{m, n, std::move(reflection), std::move(center), meet, direct};
}

std::vector<HuntEntry> hunt(std::uint64_t max_order, const Limits& limits) {
  std::vector<HuntEntry> out;
  for (std::size_t n = 2;; ++n) {
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    if ((std::uint64_t{1} << n) * factorial > max_order) break;
    for (std::size_t m = 2;; ++m) {
      std::uint64_t order = factorial;
      bool fits = true;
      for (std::size_t i = 0; i < n && fits; ++i) {
        order *= m;
        fits = order <= max_order;
      }
      if (!fits) break;
      const WreathDecomposition d = decompose_wreath(m, n, limits);
      HuntEntry e{m, n, order, d.direct, d.intersection_order, std::nullopt};
      if (d.direct) e.additivity = additivity_check(d.reflection, d.center, limits);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace mudeg
