#include "mudeg/checks.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "mudeg/action.hpp"
#include "mudeg/constructors.hpp"
#include "mudeg/errors.hpp"
#include "mudeg/lattice.hpp"
#include "mudeg/mindeg.hpp"
#include "mudeg/presentation.hpp"

namespace mudeg {

namespace {

using nlohmann::json;

// Shared objects for the G(4,4,3) checks, built once.
struct Context {
  explicit Context(const VerificationOptions& opts)
      : options(opts), wreath(wreath_cyclic(4, 3)), gens(g443_generators(wreath)),
        group(12, {}) {
    if (opts.fault == "x") gens.x = wreath.gamma(0);
    else if (opts.fault == "b") gens.b = wreath.lift(Permutation::from_cycles(3, {{0, 1}}));
    else if (!opts.fault.empty()) throw std::invalid_argument("unknown fault '" + opts.fault + "'");
    group = PermGroup(12, gens.as_list());
  }

  const ElementTable& table() {
    if (!table_) table_ = std::make_shared<const ElementTable>(enumerate_elements(group, options.limits.max_order));
    return *table_;
  }
  const SubgroupLattice& lattice() {
    if (!lattice_) lattice_ = std::make_unique<SubgroupLattice>(all_subgroups(std::shared_ptr<const ElementTable>(table_ptr()), options.limits.max_subgroups));
    return *lattice_;
  }
  std::shared_ptr<const ElementTable> table_ptr() {
    table();
    return table_;
  }
  Subgroup xy() {
    const std::vector<Permutation> g{gens.x, gens.y};
    return generate_subgroup(table(), std::span<const Permutation>(g));
  }
  Subgroup x2y2() {
    const std::vector<Permutation> g{gens.x.pow(2), gens.y.pow(2)};
    return generate_subgroup(table(), std::span<const Permutation>(g));
  }
  std::size_t index(const Permutation& p) {
    auto i = table().index_of(p);
    if (!i) throw std::logic_error("element " + p.to_string() + " not in G");
    return *i;
  }

  VerificationOptions options;
  WreathCyclic wreath;
  G443Generators gens;
  PermGroup group;

 private:
  std::shared_ptr<const ElementTable> table_;
  std::unique_ptr<SubgroupLattice> lattice_;
};

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

json orders_json(const std::map<std::uint64_t, std::size_t>& profile) {
  json j = json::object();
  for (const auto& [order, count] : profile) j[std::to_string(order)] = count;
  return j;
}

void check_order(Context& ctx, CheckReport& r) {
  const std::uint64_t order = ctx.group.order();
  const PermGroup reflection = reflection_group(4, 4, 3);
  const ElementTable w = enumerate_elements(ctx.wreath.group(), ctx.options.limits.max_order);
  const auto g = generate_subgroup(w, std::span<const Permutation>(ctx.group.generators()));
  const auto h = generate_subgroup(w, std::span<const Permutation>(reflection.generators()));
  const bool same = g == h;
  r.witness = {{"order", order}, {"expected", 96}, {"reflection_group_order", reflection.order()},
               {"equals_reflection_group", same}};
  r.status = pass_if(order == 96 && reflection.order() == 96 && same);
}

void check_presentation(Context& ctx, CheckReport& r) {
  const auto images = ctx.gens.as_list();
  assess_presentation(g443_presentation(), g443_presentation_with_ya(), images, ctx.options.limits.max_cosets, r);
  r.witness["group_order"] = ctx.group.order();
  if (ctx.group.order() != 96) r.status = CheckStatus::Fail;
}

void check_lemma1(Context& ctx, CheckReport& r) {
  const auto& lat = ctx.lattice();
  const auto minimal = lat.minimal_normal_subgroups();
  const Subgroup m = ctx.x2y2();
  json orders = json::array();
  for (auto id : minimal) orders.push_back(lat[id].order);
  bool all_contain = true;
  for (auto id : lat.normal_subgroups())
    if (!lat[id].is_trivial() && !m.members.is_subset_of(lat[id].members)) all_contain = false;
  const bool unique = minimal.size() == 1 && lat[minimal[0]].members == m.members;
  r.witness = {{"minimal_normal_count", minimal.size()}, {"minimal_normal_orders", orders},
               {"x2y2_order", m.order}, {"x2y2_normal", is_normal(ctx.table(), m)},
               {"every_normal_contains_x2y2", all_contain}};
  r.status = pass_if(unique && all_contain && m.order == 4);
}

void check_lemma2_cosets(Context& ctx, CheckReport& r) {
  const auto& t = ctx.table();
  const Subgroup a = ctx.xy();
  const std::size_t b = ctx.index(ctx.gens.b);
  const std::size_t b2 = ctx.index(ctx.gens.b.pow(2));
  auto is3 = [](std::uint64_t o) { return o == 3; };
  const bool coset_b = coset_order_check(t, a, b, is3);
  const bool coset_b2 = coset_order_check(t, a, b2, is3);

  ElementSet threes(t.size());
  a.members.for_each([&](std::size_t e) {
    threes.insert(t.product(e, b));
    threes.insert(t.product(e, b2));
  });
  std::set<std::uint64_t> rest_orders;
  std::size_t rest = 0;
  bool rest_divides_8 = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (threes.contains(i)) continue;
    ++rest;
    rest_orders.insert(t.order_of(i));
    if (8 % t.order_of(i) != 0) rest_divides_8 = false;
  }
  std::set<std::uint64_t> all_orders;
  for (const auto& [o, c] : order_profile(t)) all_orders.insert(o);
  bool outside = false;
  for (auto o : all_orders)
    if (o != 1 && o != 2 && o != 3 && o != 4 && o != 8) outside = true;

  r.witness = {{"order3_coset_elements", threes.count()},
               {"coset_xy_b_all_order3", coset_b},
               {"coset_xy_b2_all_order3", coset_b2},
               {"remaining_elements", rest},
               {"remaining_orders", rest_orders},
               {"element_orders", all_orders}};
  if (outside) r.witness["note"] = "element orders outside {1,2,3,4,8} occur";
  const bool ok = coset_b && coset_b2 && threes.count() == 32 && rest == 64 && rest_divides_8;
  r.status = !ok ? CheckStatus::Fail : (outside ? CheckStatus::Flagged : CheckStatus::Pass);
}

void check_no_order6(Context& ctx, CheckReport& r) {
  const auto profile = order_profile(ctx.table());
  const std::size_t six = profile.contains(6) ? profile.at(6) : 0;
  r.witness = {{"order_profile", orders_json(profile)}, {"order6_count", six}};
  r.status = pass_if(six == 0 && ctx.table().size() == 96);
}

void check_lemma3_index(Context& ctx, CheckReport& r) {
  const auto& lat = ctx.lattice();
  std::size_t best = 0, core_free = 0;
  for (std::size_t id = 0; id < lat.size(); ++id) {
    if (lat.core_id(id) != lat.trivial_id()) continue;
    ++core_free;
    if (best == 0 || lat[id].index < best) best = lat[id].index;
  }
  const auto cost = core_cost_table(lat).find(lat.trivial_id());
  r.witness = {{"min_core_free_index", best}, {"core_free_subgroups", core_free},
               {"subgroups", lat.size()}, {"cost_of_trivial_core", cost ? cost->cost : 0}};
  r.status = pass_if(best == 12 && cost && cost->cost == 12);
}

void check_lemma3_order12(Context& ctx, CheckReport& r) {
  const auto& lat = ctx.lattice();
  const Subgroup m = ctx.x2y2();
  std::size_t count = 0, containing = 0;
  for (const auto& h : lat.subgroups()) {
    if (h.order != 12) continue;
    ++count;
    if (m.members.is_subset_of(h.members)) ++containing;
  }
  r.witness = {{"order12_subgroups", count}, {"containing_x2y2", containing}};
  r.status = pass_if(count == containing && ctx.table().size() == 96);
}

void check_theorem4(Context& ctx, CheckReport& r) {
  const MuResult mu = mu_exact(ctx.group, ctx.lattice());
  const bool verified = verify_certificate(ctx.group, ctx.table(), mu.certificate);
  r.witness = {{"mu", mu.value}, {"certificate", to_json(mu.certificate)}, {"certificate_verified", verified}};
  r.status = pass_if(mu.value == 12 && mu.certificate.subgroups.size() == 1 &&
                     mu.certificate.subgroups[0].index == 12 && verified);
}

void check_internal_direct(Context& ctx, CheckReport& r) {
  const ElementTable w = enumerate_elements(ctx.wreath.group(), ctx.options.limits.max_order);
  const Permutation gamma = ctx.wreath.diagonal();
  bool central = true;
  for (const auto& s : ctx.wreath.group().generators())
    if (!commute(gamma, s)) central = false;
  const Subgroup g = generate_subgroup(w, std::span<const Permutation>(ctx.group.generators()));
  const Subgroup h = diagonal_center(ctx.wreath, w);
  const std::size_t meet = (g.members & h.members).count();
  const bool direct = internal_direct_product(w, g, h);
  r.witness = {{"gamma", gamma.to_string()}, {"gamma_central", central},
               {"gamma_commutes_with_a_and_b", commute(gamma, ctx.gens.a) && commute(gamma, ctx.gens.b)},
               {"order_W", w.size()}, {"order_G", g.order}, {"order_H", h.order},
               {"intersection_order", meet}, {"internal_direct_product", direct}};
  r.status = pass_if(central && meet == 1 && direct && h.order == 4);
}

void check_strict(Context& ctx, CheckReport& r) {
  const MuResult mu_w = mu_exact(ctx.wreath.group(), ctx.options.limits);
  const AdditivityReport add = additivity_check(ctx.group, cyclic(4), ctx.options.limits);
  r.witness = {{"mu_W", mu_w.value}, {"additivity", to_json(add)}};
  r.status = pass_if(mu_w.value == 12 && add.mu_g == 12 && add.mu_h == 4 && add.mu_product == 12 && add.strict);
}

void check_g333(Context& ctx, CheckReport& r) {
  const PermGroup g = reflection_group(3, 3, 3);
  auto table = std::make_shared<const ElementTable>(enumerate_elements(g, ctx.options.limits.max_order));
  const SubgroupLattice lat = all_subgroups(table, ctx.options.limits.max_subgroups);
  const MuResult mu = mu_exact(g, lat);
  json centralizers = json::array();
  std::size_t actions = 0;
  bool all_proper = true;
  for (std::size_t id = 0; id < lat.size(); ++id) {
    if (lat.core_id(id) != lat.trivial_id() || lat[id].index != 9) continue;
    ++actions;
    const CosetAction act = coset_action(g, *table, lat[id]);
    const PermGroup c = centralizer_in_sym(act.image);
    bool inside = true;
    for (const auto& z : c.generators())
      if (!act.image.contains(z)) inside = false;
    const bool proper = inside && c.order() < act.image.order();
    all_proper = all_proper && proper && act.image.order() == g.order();
    centralizers.push_back({{"subgroup", id}, {"centralizer_order", c.order()}, {"inside_image", inside}});
  }
  const WreathDecomposition d = decompose_wreath(3, 3, ctx.options.limits);
  r.witness = {{"mu", mu.value}, {"index9_core_free_actions", actions}, {"centralizers", centralizers},
               {"wreath_decomposes", d.direct}, {"gamma_meets_G333", d.intersection_order}};
  r.status = pass_if(mu.value == 9 && actions > 0 && all_proper && !d.direct);
}

void check_g223(Context& ctx, CheckReport& r) {
  const PermGroup g = reflection_group(2, 2, 3);
  const MuResult mu = mu_exact(g, ctx.options.limits);
  const PermGroup image(mu.certificate.degree, mu.certificate.action_images);
  r.witness = {{"mu", mu.value}, {"image_degree", image.degree()}, {"image_order", image.order()},
               {"certificate", to_json(mu.certificate)}};
  r.status = pass_if(mu.value == 4 && image.degree() == 4 && image.order() == 24);
}

void check_degree15(Context& ctx, CheckReport& r) {
  const MuResult g553 = mu_exact(reflection_group(5, 5, 3), ctx.options.limits);
  const MuResult w53 = mu_exact(wreath_cyclic(5, 3).group(), ctx.options.limits);
  const WreathDecomposition d = decompose_wreath(5, 3, ctx.options.limits);
  const std::size_t mu_h = mu_exact(d.center, ctx.options.limits).value;
  const bool strict = w53.value < g553.value + mu_h;
  r.witness = {{"mu_G553", g553.value}, {"mu_C5_wr_S3", w53.value}, {"mu_H", mu_h},
               {"internal_direct_product", d.direct}, {"strict", strict},
               {"bound", g553.value + mu_h}};
  r.status = pass_if(g553.value == 15 && w53.value == 15 && mu_h == 5 && d.direct && strict &&
                     g553.certificate.faithful && w53.certificate.faithful);
}

struct CheckSpec {
  const char* id;
  const char* anchor;
  const char* claim;
  void (*run)(Context&, CheckReport&);
};

constexpr CheckSpec kChecks[] = {
    {"g443.order", "order of G(4,4,3)", "<x,y,a,b> in C4 wr S3 has order 96 and equals G(4,4,3)", check_order},
    {"presentation.g443", "presentation of G(4,4,3)",
     "relators hold on x,y,a,b and Todd-Coxeter gives exactly 96 cosets", check_presentation},
    {"lemma1.unique-minimal-normal", "Lemma 1", "<x^2,y^2> is the unique minimal normal subgroup",
     check_lemma1},
    {"lemma2.coset-orders", "Lemma 2", "<x,y>b and <x,y>b^2 have order 3; all other orders divide 8",
     check_lemma2_cosets},
    {"lemma2.no-order-6", "Lemma 2 (consequence)", "G(4,4,3) has no element of order 6", check_no_order6},
    {"lemma3.min-core-free-index", "Lemma 3", "every core-free subgroup has index at least 12",
     check_lemma3_index},
    {"lemma3.order12-contain-socle", "Lemma 3 (argument)", "every subgroup of order 12 contains <x^2,y^2>",
     check_lemma3_order12},
    {"theorem4.mu-g443", "Theorem 4", "mu(G(4,4,3)) = 12 with a single index-12 subgroup", check_theorem4},
    {"construction.internal-direct-product", "construction of W = C4 wr S3",
     "gamma is central, G meets <gamma> trivially, W = G x <gamma>", check_internal_direct},
    {"construction.strict-inequality", "counterexample of degree 12",
     "mu(G x H) = 12 < mu(G) + mu(H) = 16", check_strict},
    {"remark.g333", "remark on G(3,3,3)",
     "mu(G(3,3,3)) = 9 and each degree-9 centralizer is a proper subgroup", check_g333},
    {"remark.g223", "remark on G(2,2,3)", "mu(G(2,2,3)) = 4 with image Sym(4)", check_g223},
    {"wreath.degree15", "degree-15 counterexample",
     "mu(G(5,5,3)) = mu(C5 wr S3) = 15 < mu(G(5,5,3)) + mu(C5) = 20", check_degree15},
};

}  // namespace

void assess_presentation(const Presentation& stated, const Presentation& amended,
                         std::span<const Permutation> images, std::size_t max_cosets, CheckReport& r) {
  json failing = json::array();
  for (const auto& rel : stated.relators)
    if (!evaluate_word(images, rel).is_identity()) failing.push_back(format_word(rel, stated.generators));
  const std::uint64_t order = PermGroup(images.front().degree(), {images.begin(), images.end()}).order();
  r.witness = {{"failing_relators", failing}, {"image_order", order}};

  std::optional<Enumeration> e;
  try {
    e = todd_coxeter(stated, {}, max_cosets);
    r.witness["cosets"] = e->index;
    r.witness["cosets_defined"] = e->cosets_defined;
    r.witness["table_consistent"] = e->table.is_consistent(stated);
  } catch (const CapExceeded& ex) {
    r.witness["cosets"] = nullptr;
    r.witness["enumeration"] = ex.what();
  }
  if (!failing.empty()) {
    r.status = CheckStatus::Fail;
    return;
  }
  if (e && e->index == order) {
    r.status = pass_if(e->table.is_consistent(stated));
    return;
  }
  if (e && e->index < order) {
    r.status = CheckStatus::Fail;
    return;
  }
  // Too many cosets: retry with the amended relators.
  const Enumeration f = todd_coxeter(amended, {}, max_cosets);
  r.witness["cosets_amended"] = f.index;
  r.witness["discrepancy"] = "stated relators give " + (e ? std::to_string(e->index) : std::string("no result within the cap")) +
                             "; amended relators give " + std::to_string(f.index);
  r.status = f.index == order ? CheckStatus::Flagged : CheckStatus::Fail;
}

std::vector<CheckReport> run_verification_suite(const VerificationOptions& options) {
  std::vector<CheckReport> reports;
  std::unique_ptr<Context> ctx;
  std::string setup_error;
  try {
    ctx = std::make_unique<Context>(options);
  } catch (const CapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  for (const auto& spec : kChecks) {
    CheckReport r;
    r.id = spec.id;
    r.anchor = spec.anchor;
    r.claim = spec.claim;
    const auto start = std::chrono::steady_clock::now();
    if (!ctx) {
      r.status = CheckStatus::Fail;
      r.witness = {{"error", setup_error}};
    } else {
      try {
        spec.run(*ctx, r);
      } catch (const CapExceeded&) {
        throw;
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.witness["error"] = e.what();
      }
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace mudeg
