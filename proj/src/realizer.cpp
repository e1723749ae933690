#include "permgrowth/realizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permgrowth {

void RealizationProblem::validate_sequences() const {
  if (k < 1) throw std::invalid_argument("realization: k must be >= 1");
  if (b < 1) throw std::invalid_argument("realization: b must be >= 1");
  long window = std::max(r.prefix_length(), t.prefix_length()) +
                static_cast<long>(std::lcm(r.period(), t.period()));
  for (long n = 1; n <= std::max(window, static_cast<long>(k)); ++n) {
    int rn = r.at(n);
    int tn = t.at(n);
    if (rn > tn) throw std::invalid_argument("realization: r must be dominated by t");
    if (n < k && rn != tn) {
      throw std::invalid_argument("realization: r and t must agree before index k");
    }
    if (n >= k && tn - rn < b - 1) {
      throw std::invalid_argument("realization: gap t_n - r_n must be >= b-1 from k on");
    }
  }
}

RealizationCertificate realize(const RealizationProblem& problem, int depth, const Rational& tol) {
  if (depth < 1) throw std::invalid_argument("realization depth must be >= 1");
  problem.validate_sequences();
  const Rational& gamma = problem.gamma;
  if (gamma <= 1) throw std::invalid_argument("realization: gamma must exceed 1");

  // Admissibility, decided exactly: f_r(gamma) <= 1 iff gamma >= gr(r),
  // f_t(gamma) >= 1 iff gamma <= gr(t); the cap at b is a direct compare.
  const Rational f_r = f_eval(problem.r, gamma);
  if (f_r > 1 || gamma > problem.b || f_eval(problem.t, gamma) < 1) {
    IntervalEndpoints ends = interval_endpoints(problem.r, problem.t, problem.k, problem.b, tol);
    throw std::invalid_argument("gamma outside the certified interval [" +
                                to_decimal_string(ends.lower.midpoint(), 6) + ", " +
                                to_decimal_string(ends.upper.midpoint(), 6) + "]");
  }

  const Rational gamma_inv = Rational(1) / gamma;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(depth));
  Rational chosen_sum = 0;   // sum of chosen s_j gamma^{-j}, j <= n-1
  Rational r_prefix_sum = 0; // sum of r_j gamma^{-j}, j <= n
  Rational power = 1;        // gamma^{-n}
  for (int n = 1; n <= depth; ++n) {
    power *= gamma_inv;
    r_prefix_sum += problem.r.at(n) * power;
    // f(candidate v) = chosen_sum + v*power + (f_r - r_prefix_sum)
    Rational base = chosen_sum + f_r - r_prefix_sum;
    Int v_max = floor_rational((1 - base) / power);
    int tn = problem.t.at(n);
    int v = v_max >= tn ? tn : static_cast<int>(v_max);
    if (v < problem.r.at(n)) {
      throw std::logic_error("realization: greedy step infeasible (internal error)");
    }
    chosen.push_back(v);
    chosen_sum += v * power;
  }

  RealizationCertificate cert;
  cert.chosen = chosen;
  cert.lower = growth_rate(problem.r.with_prefix(chosen), tol);
  cert.upper = growth_rate(problem.t.with_prefix(chosen), tol);
  cert.depth = depth;
  cert.gamma = gamma;
  return cert;
}

IntervalEndpoints interval_endpoints(const SeqSpec& r, const SeqSpec& t, int k, int b,
                                     const Rational& tol) {
  RealizationProblem hyp{r, t, k, b, Rational(2)};
  hyp.validate_sequences();
  IntervalEndpoints out;
  out.lower = growth_rate(r, tol);
  // min{b, gr(t)}: the rate exceeds b exactly when f_t(b) > 1
  if (b == 1 || f_eval(t, Rational(b)) > 1) {
    out.upper = GrowthRate::exact(Rational(b));
    out.capped = true;
  } else {
    out.upper = growth_rate(t, tol);
    out.capped = false;
  }
  return out;
}

SeqSpec choice_sequence(const SeqSpec& r, const SeqSpec& t, const std::string& bits) {
  if (!t.dominates(r)) throw std::invalid_argument("choice sequence: r must be dominated by t");
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("choice bits must be '0'/'1'");
  }
  const long m = std::max(r.prefix_length(), t.prefix_length());
  const long d = std::lcm(r.period(), t.period());
  long diffs_per_period = 0;
  for (long n = m + 1; n <= m + d; ++n) {
    if (r.at(n) != t.at(n)) ++diffs_per_period;
  }

  if (bits.empty()) return r;

  const long len = static_cast<long>(bits.size());
  if (diffs_per_period == 0) {
    long finite_diffs = 0;
    for (long n = 1; n <= m; ++n) {
      if (r.at(n) != t.at(n)) ++finite_diffs;
    }
    if (len > finite_diffs) {
      throw std::invalid_argument("bit string longer than the available difference positions");
    }
  }

  // Bit i selects t at the i-th difference position; bits repeat with
  // period len, so the entry pattern repeats after B periods of length d,
  // where B * diffs_per_period is a multiple of len.
  long blocks = diffs_per_period == 0 ? 1 : len / std::gcd(diffs_per_period, len);
  long total = m + d * blocks;
  std::vector<int> prefix_entries;
  std::vector<int> tail_entries;
  long bit_index = 0;
  for (long n = 1; n <= total; ++n) {
    int value = r.at(n);
    if (r.at(n) != t.at(n)) {
      if (bits[static_cast<size_t>(bit_index % len)] == '1') value = t.at(n);
      ++bit_index;
    }
    (n <= m ? prefix_entries : tail_entries).push_back(value);
  }
  return SeqSpec(std::move(prefix_entries), std::move(tail_entries));
}

GrowthRate choice_rate(const SeqSpec& r, const SeqSpec& t, const std::string& bits,
                       const Rational& tol) {
  return growth_rate(choice_sequence(r, t, bits), tol);
}

GrowthRate juxtapose_rate(const GrowthRate& g1, const GrowthRate& g2) {
  return GrowthRate{g1.lo + g2.lo, g1.hi + g2.hi, {}};
}

}  // namespace permgrowth
