#pragma once

#include <string>
#include <vector>

#include "pp/poset.hpp"

namespace pp {

struct CheckResult {
  int id = 0;  // criterion number; 0 for example rows
  std::string name;
  bool pass = false;
  std::string details;          // empty on success, else failure summary
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = untimed
};

// Fixed small posets used throughout the reports.
Poset two_chain();    // 1 < 2
Poset wedge_poset();  // 1 < 3 and 2 < 3: two minimal elements below one maximum

// Hand-checked numeric reproductions at desk scale.
std::vector<CheckResult> run_paper_examples();

// The ten acceptance criteria, each with its own runtime budget.
std::vector<CheckResult> run_acceptance();

}  // namespace pp
