#include "mudeg/report.hpp"

#include <sstream>

namespace mudeg {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
  }
  return "fail";
}

nlohmann::json to_json(const CheckReport& r, bool include_timing) {
  nlohmann::json j{{"id", r.id}, {"anchor", r.anchor}, {"claim", r.claim},
                   {"status", to_string(r.status)}, {"witness", r.witness}};
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::json to_json(const DegreeCertificate& c) {
  nlohmann::json subgroups = nlohmann::json::array();
  for (const auto& e : c.subgroups) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : e.generators) gens.push_back(g.to_string());
    subgroups.push_back({{"lattice_id", e.subgroup_id}, {"order", e.order}, {"index", e.index},
                         {"core_order", e.core_order}, {"generators", gens}});
  }
  nlohmann::json images = nlohmann::json::array();
  for (const auto& p : c.action_images) images.push_back(p.to_string());
  return {{"degree", c.degree}, {"faithful", c.faithful}, {"subgroups", subgroups}, {"action_images", images}};
}

nlohmann::json to_json(const AdditivityReport& r) {
  return {{"mu_g", r.mu_g}, {"mu_h", r.mu_h}, {"mu_product", r.mu_product}, {"strict", r.strict},
          {"product_certificate", to_json(r.product_result.certificate)}};
}

Totals tally(const std::vector<CheckReport>& checks) {
  Totals t;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Pass) ++t.pass;
    else if (c.status == CheckStatus::Fail) ++t.fail;
    else ++t.flagged;
  }
  return t;
}

nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           const std::vector<CheckReport>& checks, bool include_timing, nlohmann::json result) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) list.push_back(to_json(c, include_timing));
  const Totals t = tally(checks);
  nlohmann::json j{{"schema", kReportSchema},
                   {"command", command},
                   {"inputs", std::move(inputs)},
                   {"checks", std::move(list)},
                   {"totals", {{"checks", checks.size()}, {"pass", t.pass}, {"fail", t.fail}, {"flagged", t.flagged}}}};
  if (!result.is_null()) j["result"] = std::move(result);
  return j;
}

std::string format_certificate(const DegreeCertificate& c) {
  std::ostringstream out;
  out << "certificate: " << c.subgroups.size() << (c.subgroups.size() == 1 ? " subgroup" : " subgroups")
      << ", degree " << c.degree << ", " << (c.faithful ? "faithful" : "NOT faithful") << "\n";
  for (std::size_t i = 0; i < c.subgroups.size(); ++i) {
    const auto& e = c.subgroups[i];
    out << "  H" << i + 1 << ": order " << e.order << ", index " << e.index << ", core order " << e.core_order
        << "\n    generators:";
    if (e.generators.empty()) out << " (none)";
    for (const auto& g : e.generators) out << " " << g.to_string();
    out << "\n";
  }
  out << "  action on " << c.degree << " points:\n";
  for (std::size_t i = 0; i < c.action_images.size(); ++i)
    out << "    generator " << i + 1 << " -> " << c.action_images[i].to_string() << "\n";
  return out.str();
}

}  // namespace mudeg
