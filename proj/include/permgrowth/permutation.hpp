#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permgrowth {

/// A nonempty permutation of {1,...,n} in one-line notation. Values are
/// 1-based everywhere; the empty permutation is not representable.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  /// The unique permutation in the same relative order as `values`
  /// (all distinct, nonempty).
  static Permutation standardize(std::span<const int> values);
  static Permutation standardize(std::initializer_list<int> values);

  /// Accepts "3 1 4 2", "3,1,4,2", or the compact digit form "3142"
  /// (the latter only when every value is a single digit).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Value at 1-based position.
  int at(int position) const { return entries_[static_cast<size_t>(position - 1)]; }

  const std::vector<int>& entries() const { return entries_; }

  /// Compact "3142" when all values fit one digit, else "4 1 2 6 3 ...".
  std::string str() const;

  bool operator==(const Permutation&) const = default;

  /// Orders by length, then lexicographically on entries.
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  std::vector<int> entries_;
};

/// True iff `host` has a subsequence in the same relative order as
/// `pattern`. Exhaustive backtracking with order pruning.
bool contains(const Permutation& pattern, const Permutation& host);

/// σ ≤ π and σ ≠ π.
bool properly_contains(const Permutation& pattern, const Permutation& host);

/// pi followed by sigma shifted up by |pi|.
Permutation direct_sum(const Permutation& pi, const Permutation& sigma);

/// The unique decomposition of `pi` into sum-indecomposable components;
/// folding the result with direct_sum reconstructs `pi`.
std::vector<Permutation> sum_decompose(const Permutation& pi);

bool is_sum_indecomposable(const Permutation& pi);

/// Replaces entry σ(i) by a block in the same relative order as parts[i].
/// Requires |parts| = |σ|.
Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& parts);

/// True iff `pi` has no interval of length strictly between 1 and |pi|.
/// Lengths 1 and 2 are simple under this criterion.
bool is_simple(const Permutation& pi);

inline constexpr int kDefaultEnumerationBound = 10;

/// All sum-indecomposable permutations of length n in lexicographic order.
/// Counts run 1, 1, 3, 13, 71, 461, 3447, ...; throws when n exceeds
/// `bound` to guard runaway factorial enumeration.
std::vector<Permutation> enumerate_indecomposables(int n, int bound = kDefaultEnumerationBound);

/// All n! permutations of length n in lexicographic order (n <= bound).
std::vector<Permutation> enumerate_all(int n, int bound = kDefaultEnumerationBound);

}  // namespace permgrowth
