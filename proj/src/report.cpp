#include "berezin/report.hpp"

#include <cmath>
#include <cstdio>

namespace berezin {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Report::set_deviation(double computed, double reference_value) {
  abs_dev = std::abs(computed - reference_value);
  rel_dev = abs_dev / std::max(std::abs(reference_value), 1e-300);
}

void Report::finish(double dev, double tolerance) {
  tol = tolerance;
  pass = dev <= tolerance;
  if (status == "ok" && !pass) status = "fail";
}

void Report::mark_discrepancy() { status = "paper-discrepancy"; }

json Report::to_json() const {
  json j;
  j["check"] = check;
  j["n"] = n;
  j["m"] = m;
  j["route"] = route;
  j["inputs"] = inputs;
  j["value"] = value;
  j["reference"] = reference;
  j["abs_dev"] = abs_dev;
  j["rel_dev"] = rel_dev;
  j["tol"] = tol;
  j["pass"] = pass;
  j["status"] = status;
  j["notes"] = notes;
  return j;
}

json reports_document(const std::string& tool, const json& config,
                      const std::vector<Report>& reports) {
  json doc;
  doc["tool"] = tool;
  doc["config"] = config;
  json arr = json::array();
  int passed = 0, failed = 0, discrepancies = 0;
  for (const auto& r : reports) {
    arr.push_back(r.to_json());
    if (r.status == "paper-discrepancy") {
      ++discrepancies;
    } else if (r.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  doc["reports"] = arr;
  doc["summary"] = {{"total", reports.size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"paper_discrepancies", discrepancies}};
  return doc;
}

namespace {

std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string scalar_to_csv(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return csv_escape(v.dump());
}

}  // namespace

std::string reports_to_csv(const std::vector<Report>& reports) {
  std::string out = "check,n,m,route,value,reference,abs_dev,rel_dev,tol,pass,status,notes\n";
  for (const auto& r : reports) {
    out += csv_escape(r.check) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           csv_escape(r.route) + "," + scalar_to_csv(r.value) + "," + scalar_to_csv(r.reference) +
           "," + format_double(r.abs_dev) + "," + format_double(r.rel_dev) + "," +
           format_double(r.tol) + "," + (r.pass ? "true" : "false") + "," + csv_escape(r.status) +
           "," + csv_escape(r.notes) + "\n";
  }
  return out;
}

}  // namespace berezin
