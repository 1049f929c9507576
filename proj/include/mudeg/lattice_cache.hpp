#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "mudeg/lattice.hpp"

namespace mudeg {

inline constexpr int kLatticeCacheVersion = 1;

/// Cache key: canonical group expression plus the caps in force.
std::string lattice_cache_key(const std::string& canonical_expression, const Limits& limits);

/// On-disk cache of subgroup lattices, one JSON file per key.
///
/// Entries record the element-table fingerprint, every subgroup's member
/// set and generators, and the derived cores/normality/classes. A load
/// succeeds only when the version, key, fingerprint and recomputed derived
/// data all match. Writes go to a temporary file that is then renamed.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// $MUDEG_CACHE_DIR, else $XDG_CACHE_HOME/mudeg, else $HOME/.cache/mudeg,
  /// else ./.mudeg-cache.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<SubgroupLattice> load(const std::string& key, std::shared_ptr<const ElementTable> table) const;
  /// Returns false (without throwing) if the file could not be written.
  bool store(const std::string& key, const SubgroupLattice& lattice) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace mudeg
