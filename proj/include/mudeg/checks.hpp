#pragma once

#include <span>
#include <string>
#include <vector>

#include "mudeg/group.hpp"
#include "mudeg/presentation.hpp"
#include "mudeg/report.hpp"

namespace mudeg {

struct VerificationOptions {
  Limits limits;
  /// Fault injection for mutation testing: "" (none), "x" (replace x by
  /// gamma_1), "b" (replace b by a transposition of blocks).
  std::string fault;
};

/// Pass when every relator of `stated` holds on `images` and enumeration
/// gives exactly |<images>| cosets. When `stated` enumerates to more cosets
/// (or exceeds the cap) but `amended` gives the right count, the result is
/// Flagged with the discrepancy in the witness. Fills status and witness.
void assess_presentation(const Presentation& stated, const Presentation& amended,
                         std::span<const Permutation> images, std::size_t max_cosets, CheckReport& report);

/// The thirteen checks reproducing the G(4,4,3) counterexample, in order.
/// Checks that throw are reported as failures carrying the error message;
/// CapExceeded is rethrown.
std::vector<CheckReport> run_verification_suite(const VerificationOptions& options = {});

}  // namespace mudeg
