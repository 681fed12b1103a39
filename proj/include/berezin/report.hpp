#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace berezin {

using json = nlohmann::ordered_json;

// Structured record of one check: inputs, per-route values, deviation
// against the reference, and the verdict. `status` distinguishes honest
// failures from checks that intentionally flag a defect in a printed formula:
//   ok                -- check passed
//   fail              -- check failed (hard failure for a verify run)
//   paper-discrepancy -- printed closed form disagrees with the oracle; the
//                        run is not failed, the mismatch is the finding
struct Report {
  std::string check;
  int n = 0;
  int m = 0;
  std::string route;
  json inputs = json::object();
  json value;
  json reference;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tol = 0.0;
  bool pass = true;
  std::string status = "ok";
  std::string notes;

  // Fill abs/rel deviation from a computed/reference pair.
  void set_deviation(double computed, double reference_value);
  // Gate on the given deviation: pass = dev <= tolerance, status ok/fail
  // (does not override an already-set paper-discrepancy status).
  void finish(double dev, double tolerance);
  // Mark as an erratum detector; pass reflects dev <= tol but the status
  // keeps the run green.
  void mark_discrepancy();

  json to_json() const;
};

json reports_document(const std::string& tool, const json& config,
                      const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);

// Deterministic float formatting used in CSV and stdout ("%.17g").
std::string format_double(double v);

}  // namespace berezin
