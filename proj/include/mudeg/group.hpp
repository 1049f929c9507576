#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mudeg/perm.hpp"

namespace mudeg {

inline constexpr std::size_t kDefaultMaxOrder = 2000;
inline constexpr std::size_t kDefaultMaxSubgroups = 200000;
inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Resource caps shared by every exact computation.
struct Limits {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_subgroups = kDefaultMaxSubgroups;
  std::size_t max_cosets = kDefaultMaxCosets;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level k stores the stabilizer of the first k base points, its strong
/// generators, and a transversal: for every point j in the orbit of base[k],
/// a representative mapping base[k] to j.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  /// Throws CapExceeded if the order does not fit in 64 bits.
  std::uint64_t order() const;
  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  std::size_t depth() const noexcept { return levels_.size(); }

  /// Strips p through the chain. Returns the residue and the level at which
  /// sifting stopped (depth() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  void add_generator(std::size_t level, const Permutation& g);
  void extend_orbit(std::size_t level, const Permutation& tau);
  void sifted_insert(std::size_t level, const Permutation& g);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with its stabilizer chain.
class PermGroup {
 public:
  /// Throws std::invalid_argument if a generator's degree differs from
  /// `degree`. An empty generator list denotes the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  std::uint64_t order() const { return chain_->order(); }
  bool contains(const Permutation& p) const { return p.degree() == degree_ && chain_->contains(p); }
  bool is_abelian() const;
  Permutation identity() const { return Permutation(degree_); }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Explicit list of group elements with a full multiplication table.
///
/// Elements are sorted by image sequence, so index 0 is the identity.
class ElementTable {
 public:
  using Index = std::uint32_t;

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  Index product(std::size_t i, std::size_t j) const noexcept { return products_[i * size() + j]; }
  Index inverse(std::size_t i) const noexcept { return inverses_[i]; }
  /// g_i^-1 * g_j * g_i, i.e. element j conjugated by element i.
  Index conjugate(std::size_t j, std::size_t i) const noexcept {
    return product(product(inverse(i), j), i);
  }
  Index power(std::size_t i, long long k) const;
  std::uint64_t order_of(std::size_t i) const noexcept { return orders_[i]; }

  /// Indices of the generating group's generators, in construction order.
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }

  /// Hash of the element list, used to validate cached lattices.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  friend ElementTable enumerate_elements(const PermGroup& group, std::size_t cap);
  ElementTable() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> lookup_;
  std::vector<Index> products_;
  std::vector<Index> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> generator_indices_;
  std::uint64_t fingerprint_ = 0;
};

/// Lists every element of `group`. Throws CapExceeded (naming the order)
/// when |group| > cap; the order is checked through the chain first.
ElementTable enumerate_elements(const PermGroup& group, std::size_t cap = kDefaultMaxOrder);

}  // namespace mudeg
