#include "qpade/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace qpade {

CheckReport make_check(const std::string& name, bool ok, const std::string& lhs,
                       const std::string& rhs) {
  CheckReport r;
  r.check = name;
  r.status = ok ? "pass" : "fail";
  r.lhs = lhs;
  r.rhs = rhs;
  return r;
}

CheckReport make_check(const std::string& name, bool ok, const Scalar& lhs,
                       const Scalar& rhs) {
  return make_check(name, ok, lhs.str(), rhs.str());
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.sample < b.sample;
                   });
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return count_failed(reports) == 0;
}

int count_failed(const std::vector<CheckReport>& reports) {
  int n = 0;
  for (const auto& r : reports)
    if (r.status == "fail") ++n;
  return n;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check;
    nlohmann::ordered_json params;
    params["sample"] = std::to_string(r.sample);
    for (const auto& [k, v] : r.params) params[k] = v;
    rec["params"] = params;
    rec["status"] = r.status;
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    nlohmann::ordered_json wit = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.witness) wit[k] = v;
    rec["witness"] = wit;
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& r) {
  std::string line = r.status == "pass"   ? "[pass] "
                     : r.status == "skip" ? "[skip] "
                                          : "[FAIL] ";
  line += r.check + " (sample " + std::to_string(r.sample) + ")";
  if (r.status == "fail")
    line += "  lhs=" + r.lhs + "  rhs=" + r.rhs;
  for (const auto& [k, v] : r.witness)
    if (r.status != "pass") line += "  " + k + "=" + v;
  return line;
}

}  // namespace qpade
