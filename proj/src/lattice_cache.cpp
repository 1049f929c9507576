#include "mudeg/lattice_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "json.hpp"

namespace mudeg {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string lattice_cache_key(const std::string& canonical_expression, const Limits& limits) {
  return canonical_expression + "|max-order=" + std::to_string(limits.max_order) +
         "|max-subgroups=" + std::to_string(limits.max_subgroups);
}

std::filesystem::path LatticeCache::default_directory() {
  if (const char* d = std::getenv("MUDEG_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "mudeg";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "mudeg";
  return ".mudeg-cache";
}

std::filesystem::path LatticeCache::path_for(const std::string& key) const {
  return dir_ / ("lattice-" + hex64(fnv1a(key)) + ".json");
}

std::optional<SubgroupLattice> LatticeCache::load(const std::string& key,
                                                  std::shared_ptr<const ElementTable> table) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kLatticeCacheVersion || j.at("key").get<std::string>() != key ||
        j.at("fingerprint").get<std::string>() != hex64(table->fingerprint()) ||
        j.at("order").get<std::size_t>() != table->size())
      return std::nullopt;

    std::vector<Subgroup> subgroups;
    for (const auto& s : j.at("subgroups")) {
      Subgroup h;
      h.members = ElementSet::from_hex(table->size(), s.at("members").get<std::string>());
      h.order = h.members.count();
      if (h.order == 0 || table->size() % h.order != 0) return std::nullopt;
      h.index = table->size() / h.order;
      h.generators = s.at("generators").get<std::vector<std::size_t>>();
      for (std::size_t g : h.generators)
        if (g >= table->size() || !h.members.contains(g)) return std::nullopt;
      subgroups.push_back(std::move(h));
    }
    SubgroupLattice lattice(std::move(table), std::move(subgroups));
    const auto& stored = j.at("subgroups");
    for (std::size_t id = 0; id < lattice.size(); ++id) {
      const auto& s = stored[id];
      if (s.at("core").get<std::size_t>() != lattice.core_id(id) ||
          s.at("normal").get<bool>() != lattice.is_normal(id) ||
          s.at("class").get<std::size_t>() != lattice.class_id(id))
        return std::nullopt;
    }
    return lattice;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool LatticeCache::store(const std::string& key, const SubgroupLattice& lattice) const {
  nlohmann::json subgroups = nlohmann::json::array();
  for (std::size_t id = 0; id < lattice.size(); ++id) {
    const Subgroup& h = lattice[id];
    subgroups.push_back({{"members", h.members.to_hex()},
                         {"generators", h.generators},
                         {"core", lattice.core_id(id)},
                         {"normal", lattice.is_normal(id)},
                         {"class", lattice.class_id(id)}});
  }
  const nlohmann::json j{{"format", "mudeg-lattice"},
                         {"version", kLatticeCacheVersion},
                         {"key", key},
                         {"order", lattice.table().size()},
                         {"fingerprint", hex64(lattice.table().fingerprint())},
                         {"subgroups", std::move(subgroups)}};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = path_for(key);
  const auto temp = std::filesystem::path(target.string() + ".tmp-" + std::to_string(::getpid()));
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) return false;
    out << j.dump() << "\n";
    if (!out) return false;
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    return false;
  }
  return true;
}

}  // namespace mudeg
