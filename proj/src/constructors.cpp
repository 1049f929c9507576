#include "mudeg/constructors.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "mudeg/errors.hpp"

namespace mudeg {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> cycle(length);
  std::iota(cycle.begin(), cycle.end(), static_cast<Point>(first));
  return Permutation::from_cycles(degree, {cycle});
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) return {};
  if (n == 2) return {Permutation::from_cycles(2, {{0, 1}})};
  return {Permutation::from_cycles(n, {{1, 2}}), cycle_on(n, 0, n)};
}

}  // namespace

PermGroup cyclic(std::size_t m) {
  if (m < 1) throw SemanticError("cyclic group order must be at least 1");
  if (m == 1) return PermGroup(1, {});
  return PermGroup(m, {cycle_on(m, 0, m)});
}

PermGroup symmetric(std::size_t n) {
  if (n < 1) throw SemanticError("symmetric group degree must be at least 1");
  if (n == 1) return PermGroup(1, {});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, 0, n)});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) throw SemanticError("alternating group needs degree at least 3");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral(std::size_t n) {
  if (n < 3) throw SemanticError("dihedral group needs n at least 3");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, 0, n), Permutation(std::move(reflection))});
}

PermGroup abelian(std::span<const std::size_t> orders) {
  const std::size_t degree = std::accumulate(orders.begin(), orders.end(), std::size_t{0});
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (std::size_t a : orders) {
    if (a < 1) throw SemanticError("cyclic factor order must be at least 1");
    if (a > 1) gens.push_back(cycle_on(degree, offset, a));
    offset += a;
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.shifted(0, degree));
  for (const auto& y : h.generators()) gens.push_back(y.shifted(g.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

WreathCyclic::WreathCyclic(std::size_t m, std::size_t n)
    : m_(m), n_(n), group_(0, {}) {
  if (m < 1 || n < 1) throw SemanticError("wreath product parameters must be positive");
  for (const auto& t : symmetric_generators(n)) top_.push_back(lift(t));
  std::vector<Permutation> gens;
  if (m > 1)
    for (std::size_t i = 0; i < n; ++i) gens.push_back(gamma(i));
  gens.insert(gens.end(), top_.begin(), top_.end());
  group_ = PermGroup(degree(), std::move(gens));
}

Permutation WreathCyclic::gamma(std::size_t block) const {
  if (block >= n_) throw std::out_of_range("wreath block index out of range");
  if (m_ == 1) return Permutation(degree());
  return cycle_on(degree(), block * m_, m_);
}

Permutation WreathCyclic::diagonal() const {
  Permutation d(degree());
  for (std::size_t i = 0; i < n_; ++i) d = compose(d, gamma(i));
  return d;
}

Permutation WreathCyclic::lift(const Permutation& block_permutation) const {
  if (block_permutation.degree() != n_) throw std::invalid_argument("block permutation degree must be n");
  std::vector<Point> img(degree());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < m_; ++k)
      img[i * m_ + k] = static_cast<Point>(block_permutation[static_cast<Point>(i)] * m_ + k);
  return Permutation(std::move(img));
}

std::vector<std::size_t> WreathCyclic::rotations(const Permutation& element) const {
  std::vector<std::size_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = element[static_cast<Point>(i * m_)] % m_;
  return out;
}

WreathCyclic wreath_cyclic(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw SemanticError("wreath_cyclic requires m >= 2 and n >= 2");
  return WreathCyclic(m, n);
}

std::uint64_t reflection_group_order(std::size_t m, std::size_t p, std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= m;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  return order / p;
}

PermGroup reflection_group(std::size_t m, std::size_t p, std::size_t n) {
  if (m < 1 || p < 1) throw SemanticError("G(m,p,n) needs positive m and p");
  if (m % p != 0)
    throw SemanticError("G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                        "): p = " + std::to_string(p) + " does not divide m = " + std::to_string(m));
  if (n < 2) throw SemanticError("G(m,p,n) needs n >= 2");

  const WreathCyclic w(m, n);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Permutation delta = compose(w.gamma(i), w.gamma(i + 1).inverse());
    if (!delta.is_identity()) gens.push_back(std::move(delta));
  }
  Permutation gp = w.gamma(0).pow(static_cast<long long>(p));
  if (!gp.is_identity()) gens.push_back(std::move(gp));
  for (const auto& t : w.top_generators()) gens.push_back(t);

  PermGroup g(w.degree(), std::move(gens));
  const std::uint64_t expected = reflection_group_order(m, p, n);
  if (g.order() != expected)
    throw std::logic_error("G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                           ") has order " + std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
  return g;
}

G443Generators g443_generators(const WreathCyclic& w) {
  if (w.m() != 4 || w.n() != 3) throw std::invalid_argument("g443_generators needs C4 wr Sym(3)");
  const Permutation g0 = w.gamma(0), g1 = w.gamma(1), g2 = w.gamma(2);
  G443Generators out{
      compose(compose(g0.inverse(), g1.pow(2)), g2.inverse()),
      compose(compose(g0.inverse(), g1.inverse()), g2.pow(2)),
      w.top_generators()[0],
      w.top_generators()[1],
  };
  const auto& [x, y, a, b] = out;
  const bool ok = conjugate(x, a) == y && conjugate(x, b) == y && conjugate(y, a) == x &&
                  conjugate(y, b) == compose(x.inverse(), y.inverse());
  if (!ok) throw std::logic_error("x, y, a, b do not satisfy the conjugation relations");
  return out;
}

Subgroup diagonal_center(const WreathCyclic& w, const ElementTable& table) {
  const Permutation d = w.diagonal();
  return generate_subgroup(table, std::span<const Permutation>(&d, 1));
}

}  // namespace mudeg
