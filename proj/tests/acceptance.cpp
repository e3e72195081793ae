// Acceptance matrix: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 1). Pass criterion ids as arguments
// to run a subset.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "czlab/suite.hpp"

int main(int argc, char** argv) {
  using namespace czlab;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const SuiteScale scale = full_scale();
  using Check = CriterionResult (*)(const SuiteScale&, const Progress&);
  const Check checks[] = {check_lerner,     check_exponents, check_ordering,   check_good_lambda, check_weighted_stability,
                          check_weights,    check_identities, check_domination, check_oracles};
  const Progress log = [](const std::string& m) { std::cerr << "  .. " << m << "\n"; };
  int failed = 0;
  for (int id = 1; id <= 9; ++id) {
    if (!only.empty() && !only.count(id)) continue;
    const CriterionResult r = checks[id - 1](scale, log);
    std::cout << format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
