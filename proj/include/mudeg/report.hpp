#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mudeg/mindeg.hpp"

namespace mudeg {

inline constexpr int kReportSchema = 1;

enum class CheckStatus { Pass, Fail, Flagged };

std::string to_string(CheckStatus s);

/// Outcome of one verification check.
struct CheckReport {
  std::string id;      ///< stable identifier, e.g. "lemma1.unique-minimal-normal"
  std::string anchor;  ///< the statement the check reproduces, e.g. "Lemma 1"
  std::string claim;   ///< one-line description of what was verified
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json witness = nlohmann::json::object();
  double wall_ms = 0;
};

nlohmann::json to_json(const CheckReport& r, bool include_timing);
nlohmann::json to_json(const DegreeCertificate& c);
nlohmann::json to_json(const AdditivityReport& r);

struct Totals {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t flagged = 0;
};
Totals tally(const std::vector<CheckReport>& checks);

/// {schema, command, inputs, checks, totals} plus an optional result object.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           const std::vector<CheckReport>& checks, bool include_timing,
                           nlohmann::json result = nullptr);

/// Indented human-readable certificate.
std::string format_certificate(const DegreeCertificate& c);

}  // namespace mudeg
