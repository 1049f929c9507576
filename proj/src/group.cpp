#include "mudeg/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mudeg/errors.hpp"

namespace mudeg {

// Incremental Schreier-Sims in the style of Knuth's Sims-table algorithm:
// add_generator plays the role of "A_k" (extend the group at level k), and
// extend_orbit the role of "B_k" (close the level-k transversal, pushing
// Schreier generators one level down).

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
    sifted_insert(0, g);
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& p,
                                                          std::size_t from_level) const {
  Permutation g = p;
  for (std::size_t k = from_level; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    const Point image = g[level.base];
    const auto& rep = level.transversal[image];
    if (!rep) return {g, k};
    g = compose(g, rep->inverse());
  }
  return {g, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::sifted_insert(std::size_t level, const Permutation& g) {
  auto [residue, stop] = sift(g, level);
  if (stop == levels_.size() && residue.is_identity()) return;
  add_generator(level, g);
}

void StabilizerChain::add_generator(std::size_t k, const Permutation& g) {
  if (k == levels_.size()) {
    Level level;
    const auto& im = g.images();
    Point moved = 0;
    while (moved < im.size() && im[moved] == moved) ++moved;
    level.base = moved;
    level.transversal.resize(degree_);
    level.transversal[moved] = Permutation(degree_);
    level.orbit.push_back(moved);
    levels_.push_back(std::move(level));
  }
  levels_[k].generators.push_back(g);
  const std::size_t new_gen = levels_[k].generators.size() - 1;
  const std::size_t known = levels_[k].orbit.size();
  for (std::size_t i = 0; i < known; ++i) {
    const Permutation rep = *levels_[k].transversal[levels_[k].orbit[i]];
    extend_orbit(k, compose(rep, levels_[k].generators[new_gen]));
  }
}

void StabilizerChain::extend_orbit(std::size_t k, const Permutation& tau) {
  const Point image = tau[levels_[k].base];
  if (!levels_[k].transversal[image]) {
    levels_[k].transversal[image] = tau;
    levels_[k].orbit.push_back(image);
    for (std::size_t s = 0; s < levels_[k].generators.size(); ++s)
      extend_orbit(k, compose(tau, levels_[k].generators[s]));
    return;
  }
  // tau and the stored representative agree on the base point, so this
  // Schreier generator lies in the next stabilizer.
  const Permutation schreier = compose(tau, levels_[k].transversal[image]->inverse());
  if (!schreier.is_identity()) sifted_insert(k + 1, schreier);
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& level : levels_) {
    const std::uint64_t n = level.orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max() / n)
      throw CapExceeded("order", std::numeric_limits<std::uint64_t>::max(),
                        "group order does not fit in 64 bits");
    order *= n;
  }
  return order;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  chain_ = std::make_shared<const StabilizerChain>(degree_, generators_);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!commute(generators_[i], generators_[j])) return false;
  return true;
}

std::optional<std::size_t> ElementTable::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ElementTable::Index ElementTable::power(std::size_t i, long long k) const {
  const auto n = static_cast<long long>(orders_[i]);
  long long e = ((k % n) + n) % n;
  Index acc = 0;
  for (long long t = 0; t < e; ++t) acc = product(acc, i);
  return acc;
}

ElementTable enumerate_elements(const PermGroup& group, std::size_t cap) {
  const std::uint64_t order = group.order();
  if (order > cap)
    throw CapExceeded("element", cap, "group order is " + std::to_string(order));

  const std::size_t degree = group.degree();
  const auto& gens = group.generators();

  // Breadth-first closure from the identity; remember the tree edge that
  // reached each element so products can be filled without hashing.
  std::vector<Permutation> bfs{Permutation(degree)};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  seen.emplace(bfs[0], 0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = compose(bfs[head], gens[s]);
      if (seen.emplace(next, bfs.size()).second) {
        bfs.push_back(std::move(next));
        parent.push_back(head);
        via.push_back(s);
      }
    }
  }
  if (bfs.size() != order)
    throw std::logic_error("element enumeration found " + std::to_string(bfs.size()) +
                           " elements but the stabilizer chain reports " + std::to_string(order));

  const std::size_t n = bfs.size();
  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), std::size_t{0});
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) { return bfs[a].images() < bfs[b].images(); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[sorted[r]] = r;

  ElementTable table;
  table.degree_ = degree;
  table.elements_.reserve(n);
  for (std::size_t r = 0; r < n; ++r) table.elements_.push_back(bfs[sorted[r]]);
  for (std::size_t r = 0; r < n; ++r) table.lookup_.emplace(table.elements_[r], r);

  // right[i * k + s] = index of element_i * gen_s.
  const std::size_t k = gens.size();
  std::vector<ElementTable::Index> right(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < k; ++s)
      right[i * k + s] = static_cast<ElementTable::Index>(
          table.lookup_.at(compose(table.elements_[i], gens[s])));

  table.products_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    table.products_[i * n + rank[0]] = static_cast<ElementTable::Index>(i);
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t j = rank[b];
      const std::size_t pj = rank[parent[b]];
      const auto partial = table.products_[i * n + pj];
      table.products_[i * n + j] = right[partial * k + via[b]];
    }
  }

  table.inverses_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table.products_[i * n + j] == 0) {
        table.inverses_[i] = static_cast<ElementTable::Index>(j);
        break;
      }

  table.orders_.reserve(n);
  for (const auto& e : table.elements_) table.orders_.push_back(element_order(e));

  for (const auto& g : gens) table.generator_indices_.push_back(table.lookup_.at(g));

  std::uint64_t h = 0xcbf29ce484222325ULL ^ degree;
  for (const auto& e : table.elements_)
    for (Point v : e.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
  table.fingerprint_ = h;
  return table;
}

}  // namespace mudeg
