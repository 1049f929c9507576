#include "mudeg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mudeg/errors.hpp"

namespace mudeg {

namespace {

Subgroup finish(const ElementTable& table, ElementSet members, std::vector<std::size_t> gens) {
  Subgroup h;
  h.order = members.count();
  h.index = table.size() / h.order;
  h.members = std::move(members);
  h.generators = std::move(gens);
  return h;
}

// Right-multiplication closure of `start` (already a subgroup or {1}) under
// `gens`. Elements already in `start` only need the generators listed from
// `first_new_gen` on; `start` is assumed closed under the earlier ones.
ElementSet close_under(const ElementTable& table, const ElementSet& start,
                       std::span<const std::size_t> gens, std::size_t first_new_gen) {
  ElementSet members = start;
  std::vector<std::size_t> queue;
  start.for_each([&](std::size_t e) {
    for (std::size_t s = first_new_gen; s < gens.size(); ++s) {
      const std::size_t p = table.product(e, gens[s]);
      if (!members.contains(p)) {
        members.insert(p);
        queue.push_back(p);
      }
    }
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t e = queue[head];
    for (std::size_t g : gens) {
      const std::size_t p = table.product(e, g);
      if (!members.contains(p)) {
        members.insert(p);
        queue.push_back(p);
      }
    }
  }
  return members;
}

ElementSet conjugate_set(const ElementTable& table, const ElementSet& set, std::size_t g) {
  ElementSet out(table.size());
  set.for_each([&](std::size_t e) { out.insert(table.conjugate(e, g)); });
  return out;
}

// Smallest prime factor p of n when n is a power of p, else 0.
std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Subgroup generate_subgroup(const ElementTable& table, std::span<const std::size_t> generators) {
  ElementSet start(table.size());
  start.insert(0);
  std::vector<std::size_t> gens(generators.begin(), generators.end());
  for (std::size_t g : gens)
    if (g >= table.size()) throw std::invalid_argument("generator index out of range");
  return finish(table, close_under(table, start, gens, 0), gens);
}

Subgroup generate_subgroup(const ElementTable& table, std::span<const Permutation> generators) {
  std::vector<std::size_t> idx;
  for (const auto& g : generators) {
    auto i = table.index_of(g);
    if (!i) throw std::invalid_argument("permutation " + g.to_string() + " is not in the group");
    idx.push_back(*i);
  }
  return generate_subgroup(table, std::span<const std::size_t>(idx));
}

Subgroup trivial_subgroup(const ElementTable& table) {
  ElementSet s(table.size());
  s.insert(0);
  return finish(table, std::move(s), {});
}

Subgroup whole_group(const ElementTable& table) {
  ElementSet s(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) s.insert(i);
  return finish(table, std::move(s), table.generator_indices());
}

bool is_closed(const ElementTable& table, const ElementSet& set) {
  if (set.universe() != table.size() || !set.contains(0)) return false;
  const auto members = set.members();
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!set.contains(table.product(a, b))) return false;
  return true;
}

Subgroup make_subgroup(const ElementTable& table, ElementSet members) {
  if (!is_closed(table, members)) throw std::invalid_argument("element set is not a subgroup");
  // A member set is its own generating set; keep a short one for reports.
  std::vector<std::size_t> gens;
  ElementSet reached(table.size());
  reached.insert(0);
  members.for_each([&](std::size_t e) {
    if (reached.contains(e)) return;
    gens.push_back(e);
    reached = close_under(table, reached, gens, gens.size() - 1);
  });
  return finish(table, std::move(members), std::move(gens));
}

Subgroup intersect(const ElementTable& table, const Subgroup& h, const Subgroup& k) {
  return make_subgroup(table, h.members & k.members);
}

Subgroup conjugate(const ElementTable& table, const Subgroup& h, std::size_t g) {
  std::vector<std::size_t> gens;
  for (std::size_t x : h.generators) gens.push_back(table.conjugate(x, g));
  return finish(table, conjugate_set(table, h.members, g), std::move(gens));
}

bool is_normal(const ElementTable& table, const Subgroup& h) {
  for (std::size_t s : table.generator_indices()) {
    bool stable = true;
    h.members.for_each([&](std::size_t e) {
      if (stable && !h.members.contains(table.conjugate(e, s))) stable = false;
    });
    if (!stable) return false;
  }
  return true;
}

Subgroup core(const ElementTable& table, const Subgroup& h) {
  // C <- C ∩ C^s over the generators until stable; the fixed point is
  // normalized by every generator and contains every normal subgroup of H.
  ElementSet current = h.members;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s : table.generator_indices()) {
      ElementSet next = current & conjugate_set(table, current, s);
      if (next != current) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  return make_subgroup(table, std::move(current));
}

std::map<std::uint64_t, std::size_t> order_profile(const ElementTable& table) {
  std::map<std::uint64_t, std::size_t> profile;
  for (std::size_t i = 0; i < table.size(); ++i) ++profile[table.order_of(i)];
  return profile;
}

bool coset_order_check(const ElementTable& table, const Subgroup& a, std::size_t w,
                       const std::function<bool(std::uint64_t)>& predicate) {
  bool ok = true;
  a.members.for_each([&](std::size_t e) {
    if (ok && !predicate(table.order_of(table.product(e, w)))) ok = false;
  });
  return ok;
}

bool internal_direct_product(const ElementTable& w, const Subgroup& g, const Subgroup& h) {
  if ((g.members & h.members).count() != 1) return false;
  auto g_gens = g.generators.empty() ? g.members.members() : g.generators;
  auto h_gens = h.generators.empty() ? h.members.members() : h.generators;
  for (std::size_t x : g_gens)
    for (std::size_t y : h_gens)
      if (w.product(x, y) != w.product(y, x)) return false;
  return g.order * h.order == w.size();
}

PermGroup centralizer_in_sym(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n > 10)
    throw std::invalid_argument("centralizer_in_sym supports degree <= 10, got " + std::to_string(n));
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> gens;
  PermGroup found(n, {});
  do {
    bool central = true;
    for (const auto& g : group.generators()) {
      for (std::size_t i = 0; i < n && central; ++i)
        if (images[g[static_cast<Point>(i)]] != g[images[i]]) central = false;
      if (!central) break;
    }
    if (!central) continue;
    Permutation c(images);
    if (found.contains(c)) continue;
    gens.push_back(std::move(c));
    found = PermGroup(n, gens);
  } while (std::next_permutation(images.begin(), images.end()));
  return found;
}

SubgroupLattice::SubgroupLattice(std::shared_ptr<const ElementTable> table,
                                 std::vector<Subgroup> subgroups)
    : table_(std::move(table)), subgroups_(std::move(subgroups)) {
  const ElementTable& t = *table_;
  const std::size_t n = subgroups_.size();
  if (n == 0) throw std::invalid_argument("a subgroup lattice is never empty");
  for (std::size_t id = 0; id < n; ++id) ids_.emplace(subgroups_[id].members, id);

  normal_.assign(n, false);
  std::vector<std::size_t> normals;
  for (std::size_t id = 0; id < n; ++id)
    if (mudeg::is_normal(t, subgroups_[id])) {
      normal_[id] = true;
      normals.push_back(id);
    }

  // Subgroups are sorted by order, so the last normal subgroup inside H is
  // the largest one, which is the core.
  core_.assign(n, 0);
  for (std::size_t id = 0; id < n; ++id)
    for (auto it = normals.rbegin(); it != normals.rend(); ++it)
      if (subgroups_[*it].order <= subgroups_[id].order &&
          subgroups_[*it].members.is_subset_of(subgroups_[id].members)) {
        core_[id] = *it;
        break;
      }

  UnionFind classes(n);
  for (std::size_t id = 0; id < n; ++id) {
    if (normal_[id]) continue;
    for (std::size_t s : t.generator_indices()) {
      auto other = find(conjugate_set(t, subgroups_[id].members, s));
      if (!other) throw std::logic_error("lattice is not closed under conjugation");
      classes.unite(id, *other);
    }
  }
  class_.assign(n, 0);
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t id = 0; id < n; ++id) {
    const std::size_t root = classes.find(id);
    if (label[root] == n) label[root] = next++;
    class_[id] = label[root];
  }
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = ids_.find(members);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SubgroupLattice::normal_subgroups() const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < subgroups_.size(); ++id)
    if (normal_[id]) out.push_back(id);
  return out;
}

std::vector<std::size_t> SubgroupLattice::minimal_normal_subgroups() const {
  const auto normals = normal_subgroups();
  std::vector<std::size_t> out;
  for (std::size_t n : normals) {
    if (subgroups_[n].is_trivial()) continue;
    bool minimal = true;
    for (std::size_t m : normals) {
      if (m == n || subgroups_[m].is_trivial()) continue;
      if (subgroups_[m].order < subgroups_[n].order &&
          subgroups_[m].members.is_subset_of(subgroups_[n].members)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::map<std::size_t, std::size_t> SubgroupLattice::count_by_order() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& h : subgroups_) ++counts[h.order];
  return counts;
}

std::size_t SubgroupLattice::class_count() const {
  return class_.empty() ? 0 : *std::max_element(class_.begin(), class_.end()) + 1;
}

SubgroupLattice all_subgroups(std::shared_ptr<const ElementTable> table, std::size_t max_subgroups) {
  const ElementTable& t = *table;
  const std::size_t n = t.size();

  // Candidate adjoined elements: prime-power order, and the least index
  // among the generators of their cyclic subgroup.
  struct Candidate {
    std::size_t element;
    std::size_t p_th_power;
  };
  std::vector<Candidate> candidates;
  for (std::size_t x = 1; x < n; ++x) {
    const std::uint64_t ord = t.order_of(x);
    const std::uint64_t p = prime_power_base(ord);
    if (p == 0) continue;
    bool canonical = true;
    for (std::uint64_t j = 2; j < ord && canonical; ++j)
      if (j % p != 0 && t.power(x, static_cast<long long>(j)) < x) canonical = false;
    if (canonical) candidates.push_back({x, t.power(x, static_cast<long long>(p))});
  }

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  found.push_back(trivial_subgroup(t));
  seen.emplace(found[0].members, 0);

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& c : candidates) {
      const Subgroup& h = found[head];
      if (h.members.contains(c.element) || !h.members.contains(c.p_th_power)) continue;
      std::vector<std::size_t> gens = h.generators;
      gens.push_back(c.element);
      ElementSet k = close_under(t, h.members, gens, gens.size() - 1);
      if (seen.contains(k)) continue;
      if (found.size() >= max_subgroups)
        throw CapExceeded("subgroup", max_subgroups,
                          "group of order " + std::to_string(n) + " has more subgroups");
      seen.emplace(k, found.size());
      found.push_back(finish(t, std::move(k), std::move(gens)));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  return SubgroupLattice(std::move(table), std::move(found));
}

}  // namespace mudeg
