#pragma once

// Acceptance matrix: one check per criterion, at full or smoke scale.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace czlab {

struct SuiteScale {
  int lerner_level = 10;
  int lerner_count = 100;
  int decay_level = 12;
  int seeds = 10;           ///< decay, ordering, good-lambda, weighted sweeps
  int weighted_level = 10;
  int weights_level = 10;
  int weights_count = 50;
  int identity_level = 10;
  int corpus_count = 100;   ///< Kolmogorov corpus size
  std::vector<int> domination_levels{8, 10, 12};
  int domination_seeds = 20;
  int oracle_level = 6;
  int oracle_count = 100;
  bool thresholds = true;   ///< false: statistical criteria only need finite output
};

/// The matrix stated by the criteria.
SuiteScale full_scale();
/// Every check once at L = 8 with few seeds.
SuiteScale smoke_scale();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

using Progress = std::function<void(const std::string&)>;

CriterionResult check_lerner(const SuiteScale& s, const Progress& log = {});
CriterionResult check_exponents(const SuiteScale& s, const Progress& log = {});
CriterionResult check_ordering(const SuiteScale& s, const Progress& log = {});
CriterionResult check_good_lambda(const SuiteScale& s, const Progress& log = {});
CriterionResult check_weighted_stability(const SuiteScale& s, const Progress& log = {});
CriterionResult check_weights(const SuiteScale& s, const Progress& log = {});
CriterionResult check_identities(const SuiteScale& s, const Progress& log = {});
CriterionResult check_domination(const SuiteScale& s, const Progress& log = {});
CriterionResult check_oracles(const SuiteScale& s, const Progress& log = {});

/// Runs criteria 1..9 in order.
std::vector<CriterionResult> run_suite(const SuiteScale& s, const Progress& log = {});

/// "PASS [n] name: detail (x.xs)" or "FAIL ...".
std::string format_result(const CriterionResult& r);

}  // namespace czlab
