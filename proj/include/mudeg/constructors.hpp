#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mudeg/group.hpp"
#include "mudeg/lattice.hpp"

namespace mudeg {

/// m-cycle on m points. cyclic(1) is the trivial group on one point.
PermGroup cyclic(std::size_t m);
/// Sym(n) on n points, generated by (0 1) and (0 1 ... n-1).
PermGroup symmetric(std::size_t n);
/// Alt(n) on n points, n >= 3.
PermGroup alternating(std::size_t n);
/// Dihedral group of order 2n acting on the vertices of an n-gon, n >= 3.
PermGroup dihedral(std::size_t n);
/// Direct product of cycles of the given lengths on sum(orders) points.
PermGroup abelian(std::span<const std::size_t> orders);
/// G on the first deg(G) points, H on the next deg(H) points.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// C_m wr Sym(n) in its imprimitive action on m*n points.
///
/// Block i holds points i*m .. i*m+m-1. gamma(i) rotates block i by one
/// step; top generators move whole blocks point-for-point. For n >= 3 these
/// are a = (1 2) and b = (0 1 ... n-1) on block labels, which for n = 3 is
/// the familiar a = (2 3), b = (1 2 3) in 1-based labels.
class WreathCyclic {
 public:
  WreathCyclic(std::size_t m, std::size_t n);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return m_ * n_; }
  const PermGroup& group() const noexcept { return group_; }

  Permutation gamma(std::size_t block) const;
  /// gamma(0) * gamma(1) * ... * gamma(n-1).
  Permutation diagonal() const;
  /// Block permutation as a point permutation.
  Permutation lift(const Permutation& block_permutation) const;
  const std::vector<Permutation>& top_generators() const noexcept { return top_; }

  /// For an element of the wreath product, the rotation amount applied to
  /// each block's first point (mod m), listed by source block.
  std::vector<std::size_t> rotations(const Permutation& element) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Permutation> top_;
  PermGroup group_;
};

/// Requires m >= 2 and n >= 2.
WreathCyclic wreath_cyclic(std::size_t m, std::size_t n);

/// G(m,p,n) inside C_m wr Sym(n): generated by gamma_i * gamma_{i+1}^-1,
/// gamma_0^p and the top generators. Throws SemanticError unless p | m and
/// n >= 2; throws std::logic_error if the order is not m^n n!/p.
PermGroup reflection_group(std::size_t m, std::size_t p, std::size_t n);

/// m^n * n! / p.
std::uint64_t reflection_group_order(std::size_t m, std::size_t p, std::size_t n);

/// The elements x = g0^-1 g1^2 g2^-1, y = g0^-1 g1^-1 g2^2 (gi = gamma(i))
/// and the block generators a, b of C4 wr Sym(3), whose span is a copy of
/// G(4,4,3).
struct G443Generators {
  Permutation x;
  Permutation y;
  Permutation a;
  Permutation b;

  std::vector<Permutation> as_list() const { return {x, y, a, b}; }
};

/// Throws std::invalid_argument unless w is C4 wr Sym(3), and
/// std::logic_error if x^a = x^b = y, y^a = x, y^b = x^-1 y^-1 fail.
G443Generators g443_generators(const WreathCyclic& w);

/// <gamma(0) ... gamma(n-1)> as a subgroup of the wreath product's table.
Subgroup diagonal_center(const WreathCyclic& w, const ElementTable& table);

}  // namespace mudeg
