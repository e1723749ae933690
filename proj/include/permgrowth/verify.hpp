#pragma once

#include <string>
#include <vector>

#include "permgrowth/rational.hpp"

namespace permgrowth {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // measured vs expected, or the failure diagnostic
  double ms = 0.0;
};

struct CheckOptions {
  Rational tol = default_tol();
  bool tight = false;        // also cross-check polynomial sign changes at 1e-12
  std::string corrupt;       // test hook: perturb the named built-in problem
  bool parallel = false;     // parallel closure enumeration
};

/// Runs the whole reproduction battery (the published constants,
/// counting sequences, antichain checks, realization and perfect-set
/// properties, and the combinatorial order laws). Deterministic.
std::vector<CheckResult> run_paper_checks(const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace permgrowth
