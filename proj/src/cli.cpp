#include "mudeg/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mudeg/checks.hpp"
#include "mudeg/errors.hpp"
#include "mudeg/expr.hpp"
#include "mudeg/lattice_cache.hpp"
#include "mudeg/mindeg.hpp"
#include "mudeg/presentation.hpp"
#include "mudeg/report.hpp"

namespace mudeg {

namespace {

using nlohmann::json;

struct GlobalOptions {
  Limits limits;
  bool json = false;
  bool no_cache = false;
  std::string cache_dir;
};

json limits_json(const Limits& l) {
  return {{"max_order", l.max_order}, {"max_subgroups", l.max_subgroups}, {"max_cosets", l.max_cosets}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string generators_text(const ElementTable& table, const Subgroup& h) {
  if (h.generators.empty()) return "()";
  std::string s;
  for (std::size_t g : h.generators) {
    if (!s.empty()) s += " ";
    s += table.element(g).to_string();
  }
  return s;
}

json generators_json(const ElementTable& table, const Subgroup& h) {
  json a = json::array();
  for (std::size_t g : h.generators) a.push_back(table.element(g).to_string());
  return a;
}

struct ParsedGroup {
  GroupExpr expr;
  std::string canonical;
  PermGroup group;
};

ParsedGroup load_group(const std::string& text, const Limits& limits) {
  GroupExpr e = parse_group(text);
  const std::uint64_t expected = expected_order(e);
  std::string canonical = to_string(e);
  if (expected > limits.max_order)
    throw CapExceeded("element", limits.max_order, canonical + " has order " + std::to_string(expected));
  PermGroup g = build_group(e);
  return {std::move(e), std::move(canonical), std::move(g)};
}

SubgroupLattice lattice_for(const ParsedGroup& pg, const GlobalOptions& opts, std::ostream& err) {
  auto table = std::make_shared<const ElementTable>(enumerate_elements(pg.group, opts.limits.max_order));
  if (opts.no_cache) return all_subgroups(table, opts.limits.max_subgroups);

  const LatticeCache cache(opts.cache_dir.empty() ? LatticeCache::default_directory()
                                                  : std::filesystem::path(opts.cache_dir));
  const std::string key = lattice_cache_key(pg.canonical, opts.limits);
  if (auto hit = cache.load(key, table)) {
    err << "cache hit: " << cache.path_for(key).string() << "\n";
    return std::move(*hit);
  }
  SubgroupLattice lattice = all_subgroups(table, opts.limits.max_subgroups);
  if (cache.store(key, lattice)) err << "cache miss: stored " << cache.path_for(key).string() << "\n";
  else err << "cache miss: could not write " << cache.path_for(key).string() << "\n";
  return lattice;
}

int cmd_mu(const std::string& text, bool certificate, const GlobalOptions& opts, std::ostream& out,
           std::ostream& err) {
  const ParsedGroup pg = load_group(text, opts.limits);
  const SubgroupLattice lattice = lattice_for(pg, opts, err);
  const MuResult mu = mu_exact(pg.group, lattice);
  if (opts.json) {
    json result{{"mu", mu.value},
                {"order", pg.group.order()},
                {"subgroups", lattice.size()},
                {"optimal_core_sets", mu.optimal_sets},
                {"certificate", to_json(mu.certificate)}};
    print_json(out, make_report("mu", {{"expression", pg.canonical}, {"limits", limits_json(opts.limits)}}, {},
                                false, result));
    return kExitOk;
  }
  out << mu.value << "\n";
  if (certificate) out << format_certificate(mu.certificate);
  return kExitOk;
}

int cmd_order(const std::string& text, const GlobalOptions& opts, std::ostream& out) {
  const GroupExpr e = parse_group(text);
  const std::uint64_t expected = expected_order(e);
  const PermGroup g = build_group(e);
  if (g.order() != expected)
    throw std::logic_error("constructed order " + std::to_string(g.order()) + " differs from " +
                           std::to_string(expected));
  if (opts.json) {
    print_json(out, make_report("order", {{"expression", to_string(e)}}, {}, false,
                                {{"order", g.order()}, {"degree", g.degree()}}));
    return kExitOk;
  }
  out << g.order() << "\n";
  return kExitOk;
}

int cmd_lattice(const std::string& text, bool normal_only, const GlobalOptions& opts, std::ostream& out,
                std::ostream& err) {
  const ParsedGroup pg = load_group(text, opts.limits);
  const SubgroupLattice lat = lattice_for(pg, opts, err);
  const ElementTable& t = lat.table();
  const auto normals = lat.normal_subgroups();
  const auto minimal = lat.minimal_normal_subgroups();
  auto is_minimal = [&](std::size_t id) { return std::find(minimal.begin(), minimal.end(), id) != minimal.end(); };

  if (opts.json) {
    json result{{"order", t.size()}, {"subgroups", lat.size()}, {"conjugacy_classes", lat.class_count()}};
    json by_order = json::object();
    for (const auto& [o, c] : lat.count_by_order()) by_order[std::to_string(o)] = c;
    result["by_order"] = by_order;
    json nlist = json::array();
    for (auto id : normals)
      nlist.push_back({{"id", id}, {"order", lat[id].order}, {"minimal", is_minimal(id)},
                       {"generators", generators_json(t, lat[id])}});
    result["normal"] = nlist;
    if (!normal_only) {
      json classes = json::array();
      std::vector<bool> seen(lat.size());
      for (std::size_t id = 0; id < lat.size(); ++id) {
        const std::size_t c = lat.class_id(id);
        if (seen[c]) continue;
        seen[c] = true;
        std::size_t size = 0;
        for (std::size_t j = 0; j < lat.size(); ++j) size += lat.class_id(j) == c;
        classes.push_back({{"representative", id}, {"order", lat[id].order}, {"size", size},
                           {"core", lat.core_id(id)}, {"core_order", lat[lat.core_id(id)].order},
                           {"generators", generators_json(t, lat[id])}});
      }
      result["classes"] = classes;
    }
    print_json(out, make_report("lattice",
                                {{"expression", pg.canonical}, {"normal_only", normal_only},
                                 {"limits", limits_json(opts.limits)}},
                                {}, false, result));
    return kExitOk;
  }

  out << "group " << pg.canonical << " of order " << t.size() << "\n";
  if (!normal_only) {
    out << lat.size() << " subgroups in " << lat.class_count() << " conjugacy classes\n";
    out << "subgroups by order:\n";
    for (const auto& [o, c] : lat.count_by_order()) out << "  " << o << ": " << c << "\n";
  }
  out << normals.size() << " normal subgroups:\n";
  for (auto id : normals)
    out << "  #" << id << " order " << lat[id].order << (is_minimal(id) ? " (minimal)" : "") << ": "
        << generators_text(t, lat[id]) << "\n";
  if (!normal_only) {
    out << "classes (representative, order, size, core):\n";
    std::vector<bool> seen(lat.size());
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const std::size_t c = lat.class_id(id);
      if (seen[c]) continue;
      seen[c] = true;
      std::size_t size = 0;
      for (std::size_t j = 0; j < lat.size(); ++j) size += lat.class_id(j) == c;
      out << "  #" << id << " order " << lat[id].order << " x" << size << " core #" << lat.core_id(id)
          << " (order " << lat[lat.core_id(id)].order << "): " << generators_text(t, lat[id]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(bool timing, const std::string& fault, const GlobalOptions& opts, std::ostream& out) {
  VerificationOptions v{opts.limits, fault};
  const auto checks = run_verification_suite(v);
  const Totals totals = tally(checks);
  if (opts.json) {
    json inputs{{"limits", limits_json(opts.limits)}};
    if (!fault.empty()) inputs["inject_fault"] = fault;
    print_json(out, make_report("verify-paper", inputs, checks, timing));
  } else {
    for (const auto& c : checks) {
      std::string status = to_string(c.status);
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << status << "  " << c.id << "  [" << c.anchor << "] " << c.claim;
      if (timing) out << "  (" << static_cast<long long>(c.wall_ms + 0.5) << " ms)";
      out << "\n";
      if (c.status != CheckStatus::Pass) out << "    witness: " << c.witness.dump() << "\n";
    }
    out << totals.pass << "/" << checks.size() << " passed";
    if (totals.flagged) out << ", " << totals.flagged << " flagged";
    if (totals.fail) out << ", " << totals.fail << " failed";
    out << "\n";
  }
  return totals.pass == checks.size() ? kExitOk : kExitCheckFailed;
}

int cmd_hunt(std::uint64_t max_order, const GlobalOptions& opts, std::ostream& out) {
  Limits limits = opts.limits;
  limits.max_order = std::max<std::uint64_t>(limits.max_order, max_order);
  const auto rows = hunt(max_order, limits);
  std::size_t violations = 0;
  if (opts.json) {
    json list = json::array();
    for (const auto& r : rows) {
      json j{{"m", r.m}, {"n", r.n}, {"order", r.order}, {"decomposes", r.decomposes},
             {"intersection_order", r.intersection_order}};
      if (r.additivity) {
        j["additivity"] = to_json(*r.additivity);
        violations += r.additivity->strict;
      }
      list.push_back(j);
    }
    print_json(out, make_report("hunt", {{"max_order", max_order}, {"limits", limits_json(limits)}}, {}, false,
                                {{"rows", list}, {"strict_violations", violations}}));
    return kExitOk;
  }
  for (const auto& r : rows) {
    out << "C" << r.m << " wr S" << r.n << " (order " << r.order << "): ";
    if (!r.decomposes) {
      out << "no decomposition (gamma in G(" << r.m << "," << r.m << "," << r.n << "), |G meet H| = "
          << r.intersection_order << ")\n";
      continue;
    }
    const auto& a = *r.additivity;
    out << "G(" << r.m << "," << r.m << "," << r.n << ") x C" << r.m << ": mu = " << a.mu_product
        << (a.strict ? " < " : " = ") << a.mu_g + a.mu_h << " = " << a.mu_g << " + " << a.mu_h
        << (a.strict ? "  STRICT" : "") << "\n";
    if (a.strict) {
      ++violations;
      std::istringstream cert(format_certificate(a.product_result.certificate));
      for (std::string line; std::getline(cert, line);) out << "    " << line << "\n";
    }
  }
  out << violations << " strict violation" << (violations == 1 ? "" : "s") << " among " << rows.size()
      << " wreath products\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& path, const GlobalOptions& opts, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot read presentation file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const PresentationFile file = parse_presentation(buffer.str());
  const Enumeration e = todd_coxeter(file.presentation, file.subgroup, opts.limits.max_cosets);
  const auto& gens = file.presentation.generators;
  if (opts.json) {
    json perms = json::object();
    const auto images = e.table.generator_permutations();
    for (std::size_t i = 0; i < gens.size(); ++i) perms[gens[i]] = images[i].to_string();
    print_json(out, make_report("enumerate",
                                {{"file", path}, {"generators", gens}, {"relators", file.presentation.relators.size()},
                                 {"subgroup_words", file.subgroup.size()}, {"limits", limits_json(opts.limits)}},
                                {}, false,
                                {{"index", e.index}, {"cosets_defined", e.cosets_defined},
                                 {"consistent", e.table.is_consistent(file.presentation)},
                                 {"generator_actions", perms}}));
    return kExitOk;
  }
  out << "index " << e.index << " (" << e.cosets_defined << " cosets defined)\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal faithful permutation degrees of small groups", "mudeg"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--max-order", opts.limits.max_order, "cap on group order")->capture_default_str();
  app.add_option("--max-subgroups", opts.limits.max_subgroups, "cap on number of subgroups")->capture_default_str();
  app.add_option("--max-cosets", opts.limits.max_cosets, "cap on cosets defined by Todd-Coxeter")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "machine-readable report");
  app.add_flag("--no-cache", opts.no_cache, "do not read or write the lattice cache");
  app.add_option("--cache-dir", opts.cache_dir, "lattice cache directory (default $MUDEG_CACHE_DIR)");

  std::string expr, file, fault;
  bool certificate = false, normal_only = false, timing = false;
  std::uint64_t hunt_max = 800;

  auto* mu = app.add_subcommand("mu", "minimal faithful permutation degree");
  mu->add_option("expression", expr, "group expression, e.g. \"G(4,4,3)\"")->required();
  mu->add_flag("--certificate", certificate, "print the subgroups and action realizing the degree");

  auto* order = app.add_subcommand("order", "group order");
  order->add_option("expression", expr)->required();

  auto* lattice = app.add_subcommand("lattice", "subgroup lattice summary");
  lattice->add_option("expression", expr)->required();
  lattice->add_flag("--normal-only", normal_only, "list only normal subgroups");

  auto* verify = app.add_subcommand("verify-paper", "reproduce the G(4,4,3) counterexample checks");
  verify->alias("verify");
  verify->add_flag("--timing", timing, "include wall times");
  verify->add_option("--inject-fault", fault, "corrupt a generator (x or b) to exercise failure paths");

  auto* hunt_cmd = app.add_subcommand("hunt", "search C_m wr S_n for non-additive degrees");
  hunt_cmd->add_option("--max-order", hunt_max, "largest wreath product order swept")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration of a presentation file");
  enumerate->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*mu) return cmd_mu(expr, certificate, opts, out, err);
    if (*order) return cmd_order(expr, opts, out);
    if (*lattice) return cmd_lattice(expr, normal_only, opts, out, err);
    if (*verify) {
      if (!fault.empty() && fault != "x" && fault != "b") throw SemanticError("unknown fault '" + fault + "'");
      return cmd_verify(timing, fault, opts, out);
    }
    if (*hunt_cmd) return cmd_hunt(hunt_max, opts, out);
    if (*enumerate) return cmd_enumerate(file, opts, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace mudeg
