#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permgrowth/rational.hpp"

namespace permgrowth {

/// An eventually periodic sequence of positive integers: an explicit
/// prefix s_1..s_m followed by a tail block repeated forever. Stands for
/// the sum-indecomposable counting sequence of a sum closed class.
class SeqSpec {
 public:
  SeqSpec(std::vector<int> prefix, std::vector<int> tail);

  /// Text form "p1,...,pm;q1,...,qd" (prefix may be empty: ";c").
  static SeqSpec parse(std::string_view text);
  static SeqSpec constant(int c) { return SeqSpec({}, {c}); }

  /// 1-based term access.
  int at(long n) const;

  /// Largest entry c; every term satisfies 1 <= s_n <= c.
  int bound() const;

  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  int period() const { return static_cast<int>(tail_.size()); }
  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& tail() const { return tail_; }

  /// Same sequence with the first |overrides| terms replaced. The result
  /// stays eventually periodic (the tail is rotated to the right phase).
  SeqSpec with_prefix(const std::vector<int>& overrides) const;

  /// Pointwise r_n <= this_n for all n (decided over one common period).
  bool dominates(const SeqSpec& r) const;

  std::string str() const;
  bool operator==(const SeqSpec&) const = default;

 private:
  std::vector<int> prefix_;
  std::vector<int> tail_;
};

/// Exact value of sum_{n>=1} s_n x^{-n} for x > 1, via the closed form
/// for the geometric tail. Strictly decreasing in x.
Rational f_eval(const SeqSpec& seq, const Rational& x);

/// A certified bracket around the unique x > 1 solving sum s_n x^{-n} = 1,
/// together with the integer polynomial sharing that root on (1, inf).
/// Invariant: f(lo) >= 1 >= f(hi) exactly.
struct GrowthRate {
  Rational lo;
  Rational hi;
  std::vector<long long> poly;  // coefficients from highest degree; empty when not applicable

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }

  static GrowthRate exact(const Rational& value) { return GrowthRate{value, value, {}}; }
};

/// Bisection on the strictly decreasing f over the always-valid initial
/// bracket [1 + 1/(c+1), c+2], c the entry bound. All arithmetic exact.
GrowthRate growth_rate(const SeqSpec& seq, const Rational& tol = default_tol());

/// Integer polynomial P with P(x) = 0 equivalent to f_eval(seq, x) = 1 on
/// x > 1, from clearing denominators by x^m (x^d - 1). Content-reduced,
/// positive leading coefficient, listed from highest degree.
std::vector<long long> seq_to_polynomial(const SeqSpec& seq);

Rational eval_polynomial(const std::vector<long long>& poly, const Rational& x);
std::string polynomial_str(const std::vector<long long>& poly);

/// Coefficients a_0..a_N of 1/(1 - sum s_n x^n): a_0 = 1 and
/// a_n = sum_{j=1..n} s_j a_{n-j}. Superadditive: a_{m+n} >= a_m a_n.
struct CountSequence {
  std::vector<Int> a;
};

CountSequence class_counts(const SeqSpec& seq, int n_max);

/// Effective witness m(eps, c): sequences bounded by c agreeing up to
/// their m-th terms have growth rates within eps. Returns
/// max(1, ceil(log2(4 c (c+1)^2 / eps))).
int proximity_bound(const Rational& eps, int c);

}  // namespace permgrowth
