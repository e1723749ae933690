#include "permgrowth/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permgrowth {

SeqSpec::SeqSpec(std::vector<int> prefix, std::vector<int> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.empty()) throw std::invalid_argument("sequence tail must be nonempty");
  for (int v : prefix_) {
    if (v < 1) throw std::invalid_argument("sequence entries must be positive");
  }
  for (int v : tail_) {
    if (v < 1) throw std::invalid_argument("sequence entries must be positive");
  }
}

SeqSpec SeqSpec::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("sequence text needs 'prefix;tail': '" + std::string(text) + "'");
  }
  auto parse_list = [&](std::string_view part, bool allow_empty) {
    std::vector<int> out;
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      out.push_back(std::stoi(token));
      token.clear();
    };
    for (char ch : part) {
      if (ch >= '0' && ch <= '9') {
        token += ch;
      } else if (ch == ',' || ch == ' ') {
        flush();
      } else {
        throw std::invalid_argument("invalid sequence token: '" + std::string(text) + "'");
      }
    }
    flush();
    if (out.empty() && !allow_empty) {
      throw std::invalid_argument("sequence tail missing: '" + std::string(text) + "'");
    }
    return out;
  };
  return SeqSpec(parse_list(text.substr(0, semi), true), parse_list(text.substr(semi + 1), false));
}

int SeqSpec::at(long n) const {
  if (n < 1) throw std::out_of_range("sequence index is 1-based");
  if (n <= static_cast<long>(prefix_.size())) return prefix_[static_cast<size_t>(n - 1)];
  long offset = (n - static_cast<long>(prefix_.size()) - 1) % static_cast<long>(tail_.size());
  return tail_[static_cast<size_t>(offset)];
}

int SeqSpec::bound() const {
  int c = *std::max_element(tail_.begin(), tail_.end());
  for (int v : prefix_) c = std::max(c, v);
  return c;
}

SeqSpec SeqSpec::with_prefix(const std::vector<int>& overrides) const {
  const long m = static_cast<long>(prefix_.size());
  const long len = std::max<long>(static_cast<long>(overrides.size()), m);
  std::vector<int> new_prefix;
  new_prefix.reserve(static_cast<size_t>(len));
  for (long n = 1; n <= len; ++n) {
    new_prefix.push_back(n <= static_cast<long>(overrides.size())
                             ? overrides[static_cast<size_t>(n - 1)]
                             : at(n));
  }
  long shift = (len - m) % static_cast<long>(tail_.size());
  std::vector<int> new_tail = tail_;
  std::rotate(new_tail.begin(), new_tail.begin() + static_cast<long>(shift), new_tail.end());
  return SeqSpec(std::move(new_prefix), std::move(new_tail));
}

bool SeqSpec::dominates(const SeqSpec& r) const {
  long window = std::max(prefix_length(), r.prefix_length()) +
                static_cast<long>(std::lcm(period(), r.period()));
  for (long n = 1; n <= window; ++n) {
    if (r.at(n) > at(n)) return false;
  }
  return true;
}

std::string SeqSpec::str() const {
  std::string out;
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(prefix_[i]);
  }
  out += ';';
  for (size_t i = 0; i < tail_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(tail_[i]);
  }
  return out;
}

Rational f_eval(const SeqSpec& seq, const Rational& x) {
  if (x <= 1) throw std::domain_error("f_eval requires x > 1");
  const Rational u = Rational(1) / x;
  Rational sum = 0;
  Rational power = 1;
  for (int s : seq.prefix()) {
    power *= u;
    sum += s * power;
  }
  // power is now u^m; the tail contributes u^m * (sum q_j u^j) / (1 - u^d)
  Rational tail_sum = 0;
  Rational tail_power = 1;
  for (int q : seq.tail()) {
    tail_power *= u;
    tail_sum += q * tail_power;
  }
  sum += power * tail_sum / (1 - tail_power);
  return sum;
}

GrowthRate growth_rate(const SeqSpec& seq, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int c = seq.bound();
  Rational lo = 1 + Rational(1, c + 1);  // f(lo) >= 1/(lo-1) = c+1 > 1
  Rational hi = c + 2;                   // f(hi) <= c/(c+1) < 1
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    Rational v = f_eval(seq, mid);
    if (v > 1) {
      lo = mid;
    } else if (v < 1) {
      hi = mid;
    } else {
      lo = hi = mid;  // hit the root exactly
      break;
    }
  }
  return GrowthRate{std::move(lo), std::move(hi), seq_to_polynomial(seq)};
}

std::vector<long long> seq_to_polynomial(const SeqSpec& seq) {
  const int m = seq.prefix_length();
  const int d = seq.period();
  // Multiply f(x) = 1 through by x^m (x^d - 1):
  //   x^{m+d} - x^m - sum_n s_n (x^{m+d-n} - x^{m-n}) - sum_j q_j x^{d-j} = 0
  std::vector<long long> by_degree(static_cast<size_t>(m + d + 1), 0);
  by_degree[static_cast<size_t>(m + d)] += 1;
  by_degree[static_cast<size_t>(m)] -= 1;
  for (int n = 1; n <= m; ++n) {
    int s = seq.prefix()[static_cast<size_t>(n - 1)];
    by_degree[static_cast<size_t>(m + d - n)] -= s;
    by_degree[static_cast<size_t>(m - n)] += s;
  }
  for (int j = 1; j <= d; ++j) {
    by_degree[static_cast<size_t>(d - j)] -= seq.tail()[static_cast<size_t>(j - 1)];
  }

  long long content = 0;
  for (long long coeff : by_degree) content = std::gcd(content, coeff);
  if (content > 1) {
    for (long long& coeff : by_degree) coeff /= content;
  }
  if (by_degree.back() < 0) {
    for (long long& coeff : by_degree) coeff = -coeff;
  }
  return std::vector<long long>(by_degree.rbegin(), by_degree.rend());
}

Rational eval_polynomial(const std::vector<long long>& poly, const Rational& x) {
  Rational acc = 0;
  for (long long coeff : poly) acc = acc * x + coeff;
  return acc;
}

std::string polynomial_str(const std::vector<long long>& poly) {
  std::string out;
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(poly[i]);
  }
  return out;
}

CountSequence class_counts(const SeqSpec& seq, int n_max) {
  if (n_max < 0) throw std::invalid_argument("class_counts needs n_max >= 0");
  std::vector<Int> a(static_cast<size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) acc += seq.at(j) * a[static_cast<size_t>(n - j)];
    a[static_cast<size_t>(n)] = std::move(acc);
  }
  return CountSequence{std::move(a)};
}

int proximity_bound(const Rational& eps, int c) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (c < 1) throw std::invalid_argument("bound c must be a positive integer");
  // smallest m >= 1 with 2^m >= 4 c (c+1)^2 / eps
  Rational ratio = Rational(4 * Int(c) * Int(c + 1) * Int(c + 1)) / eps;
  Int num = numerator(ratio);
  Int den = denominator(ratio);
  int m = 1;
  Int power = 2;
  while (power * den < num) {
    power <<= 1;
    ++m;
  }
  return m;
}

}  // namespace permgrowth
