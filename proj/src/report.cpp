#include "hartley/report.hpp"

#include <cstdio>

namespace hartley {

VerificationReport VerificationReport::upper(std::string name, double measured, double bound,
                                             double tolerance) {
  VerificationReport r;
  r.name = std::move(name);
  r.measured = measured;
  r.bound = bound;
  r.tolerance = tolerance;
  r.margin = bound - measured;
  r.pass = measured <= bound + tolerance;
  return r;
}

VerificationReport VerificationReport::lower(std::string name, double measured, double bound,
                                             double tolerance) {
  VerificationReport r;
  r.name = std::move(name);
  r.measured = measured;
  r.bound = bound;
  r.tolerance = tolerance;
  r.margin = measured - bound;
  r.pass = measured >= bound - tolerance;
  return r;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["measured"] = report.measured;
  j["bound"] = report.bound;
  j["margin"] = report.margin;
  j["pass"] = report.pass;
  j["tolerance"] = report.tolerance;
  j["diagnostics"] = report.diagnostics;
  return j;
}

std::string to_line(const VerificationReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "[%s] %-42s measured=%-13.6g bound=%-13.6g margin=%.3g",
                report.pass ? "PASS" : "FAIL", report.name.c_str(), report.measured, report.bound,
                report.margin);
  return buf;
}

}  // namespace hartley
