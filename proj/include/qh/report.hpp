#pragma once

#include <string>
#include <vector>

namespace qh {

struct CheckReport {
  std::string name;
  std::string verdict;  // "PASS", "FAIL" or "PRECONDITION"
  double max_deviation = 0.0;
  long long exact_region_size = 0;
  std::vector<std::string> notes;

  bool passed() const { return verdict == "PASS"; }

  static CheckReport from(std::string name, bool pass, double dev, long long region) {
    return CheckReport{std::move(name), pass ? "PASS" : "FAIL", dev, region, {}};
  }
};

}  // namespace qh
