#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpade/scalar.hpp"

namespace qpade {

// One verification record. lhs/rhs hold exact rational strings (or exact
// polynomial strings); witness carries auxiliary exact data.
struct CheckReport {
  std::string check;
  int sample = 0;
  std::map<std::string, std::string> params;
  std::string status;  // "pass", "fail" or "skip"
  std::string lhs;
  std::string rhs;
  std::map<std::string, std::string> witness;
};

CheckReport make_check(const std::string& name, bool ok, const std::string& lhs,
                       const std::string& rhs);
CheckReport make_check(const std::string& name, bool ok, const Scalar& lhs,
                       const Scalar& rhs);

// Stable order: check name, then sample index.
void sort_reports(std::vector<CheckReport>& reports);

bool all_passed(const std::vector<CheckReport>& reports);
int count_failed(const std::vector<CheckReport>& reports);

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string report_to_text(const CheckReport& r);

}  // namespace qpade
