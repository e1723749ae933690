#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permgrowth/series.hpp"

namespace permgrowth {

/// Hypotheses of the interval construction: r dominated by t, equality
/// before index k, and a gap of at least b-1 from k on. gamma is the
/// exact rational target rate to realize.
struct RealizationProblem {
  SeqSpec r;
  SeqSpec t;
  int k = 1;
  int b = 1;
  Rational gamma;

  /// Throws std::invalid_argument when the sequence hypotheses fail;
  /// gamma admissibility is checked separately by realize().
  void validate_sequences() const;
};

/// The greedy-chosen prefix s_1..s_N together with certified rate
/// brackets of its two completions: lower finishes with r's tail, upper
/// with t's. Their union brackets gamma.
struct RealizationCertificate {
  std::vector<int> chosen;
  GrowthRate lower;
  GrowthRate upper;
  int depth = 0;
  Rational gamma;
};

/// Greedy interval realization: s_n is the greatest value in [r_n, t_n]
/// keeping the rate of (s_1..s_n, r-tail) at most gamma, decided exactly
/// through f_eval(., gamma) <= 1. Throws when gamma is outside the
/// certified admissible interval.
RealizationCertificate realize(const RealizationProblem& problem, int depth,
                               const Rational& tol = default_tol());

struct IntervalEndpoints {
  GrowthRate lower;
  GrowthRate upper;  // capped at b when b < gr(t)
  bool capped = false;
};

/// The endpoints (gr(r), min{b, gr(t)}) of the realized interval.
IntervalEndpoints interval_endpoints(const SeqSpec& r, const SeqSpec& t, int k, int b,
                                     const Rational& tol = default_tol());

/// Growth rate of the sequence picking t at the i-th position where r
/// and t differ when bits[i] == '1' and r otherwise; a finite bit string
/// is extended periodically over later difference positions, keeping the
/// sequence eventually periodic.
GrowthRate choice_rate(const SeqSpec& r, const SeqSpec& t, const std::string& bits,
                       const Rational& tol = default_tol());

/// The sequence choice_rate solves; exposed for sampling and tests.
SeqSpec choice_sequence(const SeqSpec& r, const SeqSpec& t, const std::string& bits);

/// Rates add under horizontal juxtaposition: bracket sum, no polynomial.
GrowthRate juxtapose_rate(const GrowthRate& g1, const GrowthRate& g2);

}  // namespace permgrowth
