#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mudeg/element_set.hpp"
#include "mudeg/group.hpp"

namespace mudeg {

/// A subgroup of the group behind an ElementTable, stored as a member set
/// over table indices.
struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  std::size_t index = 0;
  /// Element indices generating the subgroup (not necessarily minimal).
  std::vector<std::size_t> generators;

  bool contains(std::size_t element) const { return members.contains(element); }
  bool is_trivial() const { return order == 1; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// The subgroup generated by the given element indices.
Subgroup generate_subgroup(const ElementTable& table, std::span<const std::size_t> generators);
/// The subgroup generated by permutations that must belong to the table.
Subgroup generate_subgroup(const ElementTable& table, std::span<const Permutation> generators);
Subgroup trivial_subgroup(const ElementTable& table);
Subgroup whole_group(const ElementTable& table);

/// True iff `set` contains the identity and is closed under products (which
/// for a finite set also gives closure under inverses).
bool is_closed(const ElementTable& table, const ElementSet& set);

/// Wraps a member set as a Subgroup. Throws std::invalid_argument if it is
/// not closed.
Subgroup make_subgroup(const ElementTable& table, ElementSet members);

Subgroup intersect(const ElementTable& table, const Subgroup& h, const Subgroup& k);
/// H^g = g^-1 H g.
Subgroup conjugate(const ElementTable& table, const Subgroup& h, std::size_t g);
/// Stable under conjugation by every generator of the parent group.
bool is_normal(const ElementTable& table, const Subgroup& h);
/// Intersection of all conjugates of H: the largest normal subgroup inside H.
Subgroup core(const ElementTable& table, const Subgroup& h);

/// Histogram element order -> number of elements.
std::map<std::uint64_t, std::size_t> order_profile(const ElementTable& table);

/// True iff every element of the right coset A*w satisfies `predicate`
/// applied to its order.
bool coset_order_check(const ElementTable& table, const Subgroup& a, std::size_t w,
                       const std::function<bool(std::uint64_t)>& predicate);

/// G ∩ H trivial, generators of G and H commute pairwise, and |G||H| = |W|.
bool internal_direct_product(const ElementTable& w, const Subgroup& g, const Subgroup& h);

/// Full centralizer of `group` inside Sym(degree), by exhaustive search.
/// Throws std::invalid_argument for degree > 10.
PermGroup centralizer_in_sym(const PermGroup& group);

/// Every subgroup of a finite group, with cores, normality and conjugacy
/// classes. Subgroups are sorted by (order, member set), so id 0 is the
/// trivial subgroup and the last id is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice(std::shared_ptr<const ElementTable> table, std::vector<Subgroup> subgroups);

  const ElementTable& table() const noexcept { return *table_; }
  std::shared_ptr<const ElementTable> table_ptr() const noexcept { return table_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t trivial_id() const noexcept { return 0; }
  std::size_t whole_id() const noexcept { return subgroups_.size() - 1; }

  std::size_t core_id(std::size_t id) const { return core_[id]; }
  bool is_normal(std::size_t id) const { return normal_[id]; }
  std::size_t class_id(std::size_t id) const { return class_[id]; }

  std::vector<std::size_t> normal_subgroups() const;
  std::vector<std::size_t> minimal_normal_subgroups() const;
  std::map<std::size_t, std::size_t> count_by_order() const;
  std::size_t class_count() const;

 private:
  std::shared_ptr<const ElementTable> table_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids_;
  std::vector<std::size_t> core_;
  std::vector<bool> normal_;
  std::vector<std::size_t> class_;
};

/// Enumerates all subgroups by extension closure: starting from the trivial
/// subgroup, adjoin to each known H every element x of prime-power order with
/// x not in H and x^p in H. Throws CapExceeded past `max_subgroups`.
SubgroupLattice all_subgroups(std::shared_ptr<const ElementTable> table,
                              std::size_t max_subgroups = kDefaultMaxSubgroups);

}  // namespace mudeg
