#include "permgrowth/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permgrowth {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  if (entries_.empty()) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(entries_.size(), false);
  for (int v : entries_) {
    if (v < 1 || v > size() || seen[static_cast<size_t>(v - 1)]) {
      throw std::invalid_argument("permutation entries must be a bijection on 1..n");
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::standardize(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("standardize: empty input");
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("standardize: duplicate values");
  }
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (int v : values) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    ranks.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

Permutation Permutation::standardize(std::initializer_list<int> values) {
  return standardize(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&]() {
    if (!token.empty()) {
      values.push_back(std::stoi(token));
      token.clear();
    }
  };
  bool separators = false;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      separators = separators || !token.empty() || !values.empty();
      flush();
    } else {
      throw std::invalid_argument("invalid permutation token: '" + std::string(text) + "'");
    }
  }
  flush();
  if (values.empty()) throw std::invalid_argument("empty permutation text");
  // A lone multi-digit token is the compact form: one value per digit.
  if (!separators && values.size() == 1 && token.empty() && values[0] > 9) {
    std::vector<int> digits;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch - '0');
    }
    return Permutation(std::move(digits));
  }
  return Permutation(std::move(values));
}

std::string Permutation::str() const {
  bool compact = size() <= 9;
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(entries_[static_cast<size_t>(i)]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return entries_ <=> other.entries_;
}

namespace {

// Chosen host values so far for pattern positions 0..depth-1; the next
// value must sit in the same relative order slot as pattern[depth].
bool contains_search(const std::vector<int>& pattern, const std::vector<int>& host,
                     std::vector<int>& chosen, size_t depth, size_t host_from) {
  const size_t k = pattern.size();
  if (depth == k) return true;
  for (size_t i = host_from; i + (k - depth) <= host.size(); ++i) {
    int v = host[i];
    bool ok = true;
    for (size_t t = 0; t < depth && ok; ++t) {
      ok = (pattern[t] < pattern[depth]) == (chosen[t] < v);
    }
    if (!ok) continue;
    chosen[depth] = v;
    if (contains_search(pattern, host, chosen, depth + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  if (pattern.size() == host.size()) return pattern == host;
  std::vector<int> chosen(static_cast<size_t>(pattern.size()), 0);
  return contains_search(pattern.entries(), host.entries(), chosen, 0, 0);
}

bool properly_contains(const Permutation& pattern, const Permutation& host) {
  return pattern != host && contains(pattern, host);
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> entries = pi.entries();
  entries.reserve(static_cast<size_t>(pi.size() + sigma.size()));
  for (int v : sigma.entries()) entries.push_back(v + pi.size());
  return Permutation(std::move(entries));
}

std::vector<Permutation> sum_decompose(const Permutation& pi) {
  std::vector<Permutation> components;
  const auto& e = pi.entries();
  size_t start = 0;
  int running_max = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    running_max = std::max(running_max, e[i]);
    // the prefix 1..i+1 occupies the value set {1..i+1} iff its max is i+1
    if (running_max == static_cast<int>(i) + 1) {
      std::vector<int> block(e.begin() + static_cast<long>(start), e.begin() + static_cast<long>(i) + 1);
      int offset = static_cast<int>(start);
      for (int& v : block) v -= offset;
      components.emplace_back(std::move(block));
      start = i + 1;
    }
  }
  return components;
}

bool is_sum_indecomposable(const Permutation& pi) {
  const auto& e = pi.entries();
  int running_max = 0;
  for (size_t i = 0; i + 1 < e.size(); ++i) {
    running_max = std::max(running_max, e[i]);
    if (running_max == static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& parts) {
  if (parts.size() != static_cast<size_t>(sigma.size())) {
    throw std::invalid_argument("inflate: need one part per entry of sigma");
  }
  // value_offset[i]: total size of blocks whose sigma-value is below sigma(i+1)
  const int m = sigma.size();
  std::vector<int> size_by_value(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    size_by_value[static_cast<size_t>(sigma.at(i + 1) - 1)] = parts[static_cast<size_t>(i)].size();
  }
  std::vector<int> offset_by_value(static_cast<size_t>(m), 0);
  int acc = 0;
  for (int v = 0; v < m; ++v) {
    offset_by_value[static_cast<size_t>(v)] = acc;
    acc += size_by_value[static_cast<size_t>(v)];
  }
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(acc));
  for (int i = 0; i < m; ++i) {
    int value_offset = offset_by_value[static_cast<size_t>(sigma.at(i + 1) - 1)];
    for (int v : parts[static_cast<size_t>(i)].entries()) entries.push_back(value_offset + v);
  }
  return Permutation(std::move(entries));
}

bool is_simple(const Permutation& pi) {
  const auto& e = pi.entries();
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    int lo = e[static_cast<size_t>(a)];
    int hi = lo;
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, e[static_cast<size_t>(b)]);
      hi = std::max(hi, e[static_cast<size_t>(b)]);
      int len = b - a + 1;
      if (len == n) break;
      if (hi - lo == b - a) return false;  // proper interval of length >= 2
    }
  }
  return true;
}

std::vector<Permutation> enumerate_all(int n, int bound) {
  if (n < 1) throw std::invalid_argument("enumeration length must be positive");
  if (n > bound) throw std::invalid_argument("enumeration length exceeds bound");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> enumerate_indecomposables(int n, int bound) {
  if (n < 1) throw std::invalid_argument("enumeration length must be positive");
  if (n > bound) throw std::invalid_argument("enumeration length exceeds bound");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    int running_max = 0;
    bool indecomposable = true;
    for (size_t i = 0; i + 1 < v.size() && indecomposable; ++i) {
      running_max = std::max(running_max, v[i]);
      indecomposable = running_max != static_cast<int>(i) + 1;
    }
    if (indecomposable) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permgrowth
