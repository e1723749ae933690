#include "permgrowth/antichain.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace permgrowth {

namespace {

// First `count` entries of the increasing oscillating sequence
// 4,1,6,3,8,5,...: position 2i-1 holds 2i+2 and position 2i holds 2i-1.
std::vector<int> oscillating_sequence(int count) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(count));
  for (int i = 1; w.size() < static_cast<size_t>(count); ++i) {
    w.push_back(2 * i + 2);
    if (w.size() < static_cast<size_t>(count)) w.push_back(2 * i - 1);
  }
  return w;
}

// Valid down to k = 3; the public oscillation_sigma enforces k >= 4.
Permutation sigma_impl(int k) {
  if (k % 2 == 0) {
    return Permutation::standardize(oscillating_sequence(k));
  }
  // odd k: the k least values are {1} and {3..k+1}; keep them in order
  // of appearance (all occur within the first k+2 entries)
  std::vector<int> w = oscillating_sequence(k + 2);
  std::vector<int> kept;
  for (int v : w) {
    if (v == 1 || (v >= 3 && v <= k + 1)) kept.push_back(v);
  }
  return Permutation::standardize(kept);
}

Permutation u_member_impl(const UFamilySpec& spec, int k) {
  Permutation sigma = sigma_impl(k);
  int least_pos = 0;
  int greatest_pos = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma.at(i) == 1) least_pos = i;
    if (sigma.at(i) == sigma.size()) greatest_pos = i;
  }
  int beta_pos = (k % 2 == 0) ? greatest_pos : sigma.size();
  std::vector<Permutation> parts;
  parts.reserve(static_cast<size_t>(sigma.size()));
  Permutation one({1});
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i == least_pos) {
      parts.push_back(spec.alpha);
    } else if (i == beta_pos) {
      parts.push_back(spec.beta);
    } else {
      parts.push_back(one);
    }
  }
  return inflate(sigma, parts);
}

int member_length(const UFamilySpec& spec, int k) {
  return k + spec.alpha.size() + spec.beta.size() - 2;
}

bool parity_admits(Parity parity, int k) {
  switch (parity) {
    case Parity::All: return true;
    case Parity::EvenK: return k % 2 == 0;
    case Parity::OddK: return k % 2 == 1;
  }
  return false;
}

}  // namespace

UFamilySpec::UFamilySpec(Permutation a, Permutation b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.size() < 2 || beta.size() < 2) {
    throw std::invalid_argument("U family needs alpha, beta of length >= 2");
  }
}

Permutation oscillation_sigma(int k) {
  if (k < 4) throw std::invalid_argument("oscillation_sigma needs k >= 4");
  return sigma_impl(k);
}

Permutation u_member(const UFamilySpec& spec, int k) {
  if (k < 4) throw std::invalid_argument("u_member needs k >= 4");
  return u_member_impl(spec, k);
}

std::vector<Permutation> members_up_to(const AntichainSet& set, int max_len) {
  if (max_len < 1) throw std::invalid_argument("members_up_to needs max_len >= 1");
  std::set<Permutation> out;
  for (const auto& entry : set.generators) {
    for (int k = set.min_k; member_length(entry.spec, k) <= max_len; ++k) {
      if (parity_admits(entry.parity, k)) out.insert(u_member_impl(entry.spec, k));
    }
  }
  for (const auto& extra : set.extras) {
    if (extra.size() <= max_len) out.insert(extra);
  }
  return std::vector<Permutation>(out.begin(), out.end());
}

bool verify_antichain(const std::vector<Permutation>& members) {
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (members[i] == members[j]) return false;
      if (properly_contains(members[i], members[j])) return false;
    }
  }
  return true;
}

std::map<int, std::set<Permutation>> pattern_closure(const Permutation& root) {
  std::map<int, std::set<Permutation>> levels;
  levels[root.size()].insert(root);
  for (int len = root.size(); len > 1; --len) {
    const auto& level = levels[len];
    auto& below = levels[len - 1];
    std::vector<int> reduced(static_cast<size_t>(len - 1));
    for (const auto& perm : level) {
      for (int skip = 0; skip < len; ++skip) {
        size_t w = 0;
        int removed = perm.at(skip + 1);
        for (int i = 1; i <= len; ++i) {
          if (i == skip + 1) continue;
          int v = perm.at(i);
          reduced[w++] = v > removed ? v - 1 : v;
        }
        below.insert(Permutation(reduced));
      }
    }
  }
  return levels;
}

std::vector<long long> closure_counts(const AntichainSet& set, int n_max, bool proper,
                                      bool parallel, int bound) {
  if (n_max < 1) throw std::invalid_argument("closure_counts needs n_max >= 1");
  if (n_max > bound) throw std::invalid_argument("closure_counts: n_max exceeds bound");

  std::vector<Permutation> members = members_up_to(set, n_max + 8);
  std::vector<std::map<int, std::set<Permutation>>> closures(members.size());
  if (parallel) {
    std::vector<std::future<std::map<int, std::set<Permutation>>>> jobs;
    jobs.reserve(members.size());
    for (const auto& member : members) {
      jobs.push_back(std::async(std::launch::async, [&member] { return pattern_closure(member); }));
    }
    for (size_t i = 0; i < jobs.size(); ++i) closures[i] = jobs[i].get();
  } else {
    for (size_t i = 0; i < members.size(); ++i) closures[i] = pattern_closure(members[i]);
  }

  auto count_at = [&](int n, int horizon) {
    std::set<Permutation> seen;
    for (size_t i = 0; i < members.size(); ++i) {
      int len = members[i].size();
      if (len > horizon) continue;
      if (proper && len <= n) continue;  // same length can only contain itself
      if (len < n) continue;
      auto it = closures[i].find(n);
      if (it == closures[i].end()) continue;
      for (const auto& perm : it->second) {
        if (is_sum_indecomposable(perm)) seen.insert(perm);
      }
    }
    return static_cast<long long>(seen.size());
  };

  std::vector<long long> counts(static_cast<size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    long long at6 = count_at(n, n + 6);
    long long at8 = count_at(n, n + 8);
    if (at6 != at8) {
      throw std::runtime_error("closure_counts: horizon " + std::to_string(n + 6) +
                               " not stable at length " + std::to_string(n));
    }
    counts[static_cast<size_t>(n)] = at6;
  }
  counts.erase(counts.begin());
  return counts;
}

}  // namespace permgrowth
