// Runs the acceptance checklist: the worked examples first, then the ten
// numbered criteria, one [PASS]/[FAIL] line each.  Exit status 0 only when
// everything passes.
#include <cstdio>
#include <vector>

#include "pp/acceptance.hpp"

int main() {
  bool all = true;
  std::vector<pp::CheckResult> examples = pp::run_paper_examples();
  for (const auto& r : examples) {
    std::printf("[%s] example: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.details.empty() ? "" : " -- ", r.details.c_str());
    all = all && r.pass;
  }
  std::vector<pp::CheckResult> criteria = pp::run_acceptance();
  for (const auto& r : criteria) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.details.empty() ? "" : " -- ", r.details.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED");
  return all ? 0 : 1;
}
