#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "permgrowth/permutation.hpp"

namespace permgrowth {

/// The (alpha, beta) pair defining the antichain family U^{alpha,beta}:
/// members arise from the oscillation sigma_k by inflating the least
/// entry by alpha and the greatest (k even) or rightmost (k odd) entry
/// by beta. Both inflations must be nontrivial (length >= 2).
struct UFamilySpec {
  Permutation alpha;
  Permutation beta;

  UFamilySpec(Permutation a, Permutation b);
  bool operator==(const UFamilySpec&) const = default;
};

enum class Parity { All, EvenK, OddK };

struct FamilyEntry {
  UFamilySpec spec;
  Parity parity = Parity::All;
};

/// A union of U families plus an explicit finite list of extra members.
/// The built-in sets carry the length-5 boundary members (the k = 3 case
/// of the inflation rule) as extras; the published counting sequences
/// require them. Every extra must be sum indecomposable.
struct AntichainSet {
  std::string label;
  std::vector<FamilyEntry> generators;
  std::vector<Permutation> extras;
  int min_k = 4;
};

/// The increasing oscillation of length k (k >= 4): the pattern of the
/// first k entries of 4,1,6,3,8,5,... for even k, and of the k least
/// values of that sequence for odd k. Simple and sum indecomposable.
Permutation oscillation_sigma(int k);

/// The k-th member of U^{alpha,beta} (k >= 4); length k+|alpha|+|beta|-2.
Permutation u_member(const UFamilySpec& spec, int k);

/// All family members (respecting parity filters and min_k) and extras of
/// length <= max_len, sorted by length then lexicographically, deduplicated.
std::vector<Permutation> members_up_to(const AntichainSet& set, int max_len);

/// True iff the list has no duplicates and no member properly contains
/// another.
bool verify_antichain(const std::vector<Permutation>& members);

/// Every pattern of `root` at every length 1..|root|, by iterated
/// one-point deletion with per-level deduplication.
std::map<int, std::set<Permutation>> pattern_closure(const Permutation& root);

inline constexpr int kDefaultClosureBound = 12;

/// Entry n counts the distinct sum-indecomposable permutations of length
/// n contained in some member of the set; with `proper` they must be
/// properly contained (equality with a member does not count). Counted
/// over members up to length n+6 and checked stable against n+8; throws
/// if the horizon check fails. Deterministic regardless of `parallel`.
std::vector<long long> closure_counts(const AntichainSet& set, int n_max, bool proper,
                                      bool parallel = false, int bound = kDefaultClosureBound);

}  // namespace permgrowth
