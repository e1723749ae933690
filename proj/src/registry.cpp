#include "permgrowth/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace permgrowth {

namespace {

// sigma_3 = 312 is the k = 3 boundary case of the oscillation rule; its
// inflations (length 5) have to be counted as family members for the
// published counting sequences to come out (see tests). They are built
// here directly since the public u_member contract starts at k = 4.
Permutation boundary_member(const UFamilySpec& spec) {
  Permutation sigma({3, 1, 2});
  return inflate(sigma, {Permutation({1}), spec.alpha, spec.beta});
}

UFamilySpec family(const char* alpha, const char* beta) {
  return UFamilySpec(Permutation::parse(alpha), Permutation::parse(beta));
}

AntichainSet base_a() {
  AntichainSet set;
  set.label = "A";
  set.generators = {{family("12", "12"), Parity::All}, {family("21", "12"), Parity::All}};
  set.min_k = 4;
  set.extras = {boundary_member(family("12", "12")), boundary_member(family("21", "12"))};
  return set;
}

std::vector<Permutation> indecomposables_up_to(int max_len) {
  std::vector<Permutation> out;
  for (int n = 1; n <= max_len; ++n) {
    auto perms = enumerate_indecomposables(n);
    out.insert(out.end(), perms.begin(), perms.end());
  }
  return out;
}

}  // namespace

const std::vector<BuiltinProblem>& builtin_problems() {
  static const std::vector<BuiltinProblem> problems = {
      {"prop34", SeqSpec::parse("1,1,3,5;6"), SeqSpec::parse("1,1,3,13;8"), 4, 3,
       parse_rational("2.48187"), parse_rational("2.69284")},
      {"prop35a", SeqSpec::parse("1,1,3,13;8"), SeqSpec::parse("1,1,3,13,71;11"), 5, 4,
       parse_rational("2.69284"), parse_rational("3.03024")},
      {"prop35b", SeqSpec::parse("1,1,3,13,71;8"), SeqSpec::parse("1,1,3,13,71,461;11"), 6, 4,
       parse_rational("3.02440"), parse_rational("3.41108")},
      {"prop35c", SeqSpec::parse("1,1,3,13,71,461;8"), SeqSpec::parse("1,1,3,13,71,461,3447;11"),
       7, 4, parse_rational("3.41035"), parse_rational("3.79450")},
      {"sec4", SeqSpec::parse("1,1,2,3;4"), SeqSpec::parse("1,1,2,3;5,4"), 5, 1,
       parse_rational("2.30524"), parse_rational("2.32331")},
  };
  return problems;
}

const BuiltinProblem& builtin_problem(const std::string& name) {
  for (const auto& problem : builtin_problems()) {
    if (problem.name == name) return problem;
  }
  throw std::invalid_argument("unknown problem '" + name + "'");
}

AntichainSet three_family_union() {
  AntichainSet set;
  set.label = "U12-12+U12-21+U21-12";
  set.generators = {{family("12", "12"), Parity::All},
                    {family("12", "21"), Parity::All},
                    {family("21", "12"), Parity::All}};
  set.min_k = 4;
  set.extras = {boundary_member(family("12", "12")), boundary_member(family("12", "21")),
                boundary_member(family("21", "12"))};
  return set;
}

AntichainSet builtin_antichain(const std::string& name) {
  if (name == "A") return base_a();
  if (name == "A-prime") {
    AntichainSet set = base_a();
    set.label = "A-prime";
    // the length-4 sum indecomposables not contained in any member of A
    std::vector<Permutation> members = members_up_to(set, 4 + 8);
    for (const auto& candidate : enumerate_indecomposables(4)) {
      bool covered = std::any_of(members.begin(), members.end(), [&](const Permutation& m) {
        return contains(candidate, m);
      });
      if (!covered) set.extras.push_back(candidate);
    }
    return set;
  }
  if (name == "A1" || name == "A2" || name == "A3") {
    AntichainSet set = three_family_union();
    set.label = name;
    int max_len = name == "A1" ? 5 : name == "A2" ? 6 : 7;
    auto shorts = indecomposables_up_to(max_len);
    for (auto& perm : shorts) {
      if (std::find(set.extras.begin(), set.extras.end(), perm) == set.extras.end()) {
        set.extras.push_back(std::move(perm));
      }
    }
    return set;
  }
  if (name == "U12-12-odd") {
    AntichainSet set;
    set.label = "U12-12-odd";
    set.generators = {{family("12", "12"), Parity::OddK}};
    set.min_k = 4;
    set.extras = {boundary_member(family("12", "12"))};
    return set;
  }
  throw std::invalid_argument("unknown antichain set '" + name + "'");
}

std::vector<std::string> builtin_antichain_names() {
  return {"A", "A-prime", "A1", "A2", "A3", "U12-12-odd"};
}

AntichainSet parse_antichain_set(const std::string& text) {
  auto names = builtin_antichain_names();
  if (std::find(names.begin(), names.end(), text) != names.end()) {
    return builtin_antichain(text);
  }
  // "U<alpha>-<beta>[:parity];..."
  AntichainSet set;
  set.label = text;
  set.min_k = 4;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (item.empty()) throw std::invalid_argument("empty family in set '" + text + "'");
    Parity parity = Parity::All;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      std::string p = item.substr(colon + 1);
      if (p == "all") parity = Parity::All;
      else if (p == "even") parity = Parity::EvenK;
      else if (p == "odd") parity = Parity::OddK;
      else throw std::invalid_argument("unknown parity '" + p + "'");
      item = item.substr(0, colon);
    }
    if (item.size() < 2 || item[0] != 'U') {
      throw std::invalid_argument("family must look like 'U12-12': '" + item + "'");
    }
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("family must look like 'U12-12': '" + item + "'");
    }
    UFamilySpec spec(Permutation::parse(item.substr(1, dash - 1)),
                     Permutation::parse(item.substr(dash + 1)));
    set.generators.push_back({spec, parity});
    // the same boundary member the built-ins carry
    if (parity != Parity::EvenK) set.extras.push_back(boundary_member(spec));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (set.generators.empty()) throw std::invalid_argument("no families in set '" + text + "'");
  std::sort(set.extras.begin(), set.extras.end());
  set.extras.erase(std::unique(set.extras.begin(), set.extras.end()), set.extras.end());
  return set;
}

const Rational& printed_lambda() {
  static const Rational v = parse_rational("2.48187");
  return v;
}

const Rational& printed_xi() {
  static const Rational v = parse_rational("2.30524");
  return v;
}

const Rational& printed_zeta() {
  static const Rational v = parse_rational("2.32331");
  return v;
}

const std::vector<long long>& lambda_polynomial() {
  static const std::vector<long long> p = {1, -2, 0, -2, -2, -1};
  return p;
}

const std::vector<long long>& xi_polynomial() {
  static const std::vector<long long> p = {1, -2, 0, -1, -1, -1};
  return p;
}

const std::vector<long long>& zeta_polynomial() {
  static const std::vector<long long> p = {1, -1, -2, -1, -2, -3, -1};
  return p;
}

const std::vector<long long>& interval1_hi_polynomial() {
  static const std::vector<long long> p = {1, -2, 0, -2, -10, 5};
  return p;
}

std::vector<SeqSpec> builtin_sequences() {
  std::vector<SeqSpec> out;
  for (const auto& problem : builtin_problems()) {
    out.push_back(problem.r);
    out.push_back(problem.t);
  }
  for (int c = 1; c <= 6; ++c) out.push_back(SeqSpec::constant(c));
  return out;
}

}  // namespace permgrowth
