#pragma once

#include <map>
#include <string>

#include "json.hpp"

namespace hartley {

// Structured pass/fail record emitted by every inequality or identity check.
// `margin` is oriented so that a nonnegative value means the check holds:
// bound - measured for upper bounds, measured - bound for lower bounds.
struct VerificationReport {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> diagnostics;

  // measured <= bound + tolerance
  static VerificationReport upper(std::string name, double measured, double bound,
                                  double tolerance = 0.0);
  // measured >= bound - tolerance
  static VerificationReport lower(std::string name, double measured, double bound,
                                  double tolerance = 0.0);
};

nlohmann::json to_json(const VerificationReport& report);

// One human-readable line: "[PASS] name  measured=... bound=... margin=...".
std::string to_line(const VerificationReport& report);

}  // namespace hartley
