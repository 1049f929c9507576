#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mudeg/constructors.hpp"
#include "mudeg/group.hpp"
#include "mudeg/lattice.hpp"

namespace mudeg {

/// Cheapest subgroup realizing one particular core.
struct CoreCost {
  std::size_t core_id;
  std::size_t cost;            ///< min |G:H| over subgroups H with core(H) = core
  std::size_t representative;  ///< smallest lattice id attaining the cost
};

/// One entry per normal subgroup that occurs as a core, sorted by core id.
class CoreCostTable {
 public:
  explicit CoreCostTable(std::vector<CoreCost> entries) : entries_(std::move(entries)) {}
  const std::vector<CoreCost>& entries() const noexcept { return entries_; }
  std::optional<CoreCost> find(std::size_t core_id) const;

 private:
  std::vector<CoreCost> entries_;
};

CoreCostTable core_cost_table(const SubgroupLattice& lattice);

struct CertificateEntry {
  std::size_t subgroup_id;
  std::vector<Permutation> generators;
  std::size_t order;
  std::size_t index;
  std::size_t core_order;
};

/// Witness for a faithful action: the coset actions of the listed subgroups,
/// placed side by side.
struct DegreeCertificate {
  std::vector<CertificateEntry> subgroups;
  std::size_t degree = 0;
  /// Images of the group's generators on `degree` points.
  std::vector<Permutation> action_images;
  bool faithful = false;
};

struct MuResult {
  std::size_t value = 0;
  DegreeCertificate certificate;
  /// Number of distinct optimal core sets considered for tie-breaking.
  std::size_t optimal_sets = 0;
};

/// Minimal faithful permutation degree by dynamic programming over cores:
/// f(1) = 0, f(K) = min over cores N not containing K of cost(N) + f(K ∩ N).
/// Ties prefer fewer subgroups, then the smaller sorted index list, then the
/// smaller sorted subgroup ids. The certificate is re-verified before return.
MuResult mu_exact(const PermGroup& group, const SubgroupLattice& lattice);
MuResult mu_exact(const PermGroup& group, const Limits& limits = {});

/// Independent re-check: regenerates each subgroup from its generators,
/// recomputes cores by intersecting conjugates, rebuilds the action and
/// confirms that it is faithful and matches the stored images.
bool verify_certificate(const PermGroup& group, const ElementTable& table, const DegreeCertificate& cert);

/// Prime powers of the cyclic primary decomposition, ascending.
struct AbelianType {
  std::vector<std::uint64_t> prime_powers;
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Throws std::invalid_argument for non-abelian input.
AbelianType abelian_invariants(const PermGroup& group, const Limits& limits = {});
AbelianType abelian_invariants(const ElementTable& table);
/// Sum of the prime powers; 0 for the trivial group.
std::size_t mu_abelian(const PermGroup& group, const Limits& limits = {});

struct AdditivityReport {
  std::size_t mu_g;
  std::size_t mu_h;
  std::size_t mu_product;
  bool strict;  ///< mu_product < mu_g + mu_h
  MuResult product_result;
};

AdditivityReport additivity_check(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

/// Attempted splitting of C_m wr Sym(n) as G(m,m,n) x <gamma_1 ... gamma_n>.
struct WreathDecomposition {
  std::size_t m;
  std::size_t n;
  PermGroup reflection;  ///< G(m,m,n) inside the wreath product
  PermGroup center;      ///< the diagonal cyclic subgroup
  std::size_t intersection_order;
  bool direct;  ///< internal direct product holds

  std::optional<std::pair<PermGroup, PermGroup>> factors() const {
    if (!direct) return std::nullopt;
    return std::make_pair(reflection, center);
  }
};

WreathDecomposition decompose_wreath(std::size_t m, std::size_t n, const Limits& limits = {});

/// One row of a sweep over wreath products C_m wr Sym(n).
struct HuntEntry {
  std::size_t m;
  std::size_t n;
  std::uint64_t order;
  bool decomposes;
  std::size_t intersection_order;
  std::optional<AdditivityReport> additivity;
};

/// All (m, n) with m, n >= 2 and m^n n! <= max_order, ordered by (n, m).
std::vector<HuntEntry> hunt(std::uint64_t max_order, const Limits& limits = {});

}  // namespace mudeg
