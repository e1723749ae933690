#include "permgrowth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "permgrowth/antichain.hpp"
#include "permgrowth/permutation.hpp"
#include "permgrowth/realizer.hpp"
#include "permgrowth/registry.hpp"
#include "permgrowth/series.hpp"

namespace permgrowth {

namespace {

constexpr unsigned kSeed = 20260810;

const Rational& printed_slack() {
  static const Rational slack(5, 100000);  // 5e-5, the published precision
  return slack;
}

bool bracket_within(const GrowthRate& g, const Rational& printed, const Rational& slack) {
  return g.lo >= printed - slack && g.hi <= printed + slack;
}

std::string seq_list(const std::vector<long long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

class Battery {
 public:
  explicit Battery(const CheckOptions& options) : opts_(options) {
    for (const auto& problem : builtin_problems()) {
      BuiltinProblem copy = problem;
      if (problem.name == opts_.corrupt) {
        // test hook: bump one prefix entry so downstream checks must fail
        std::vector<int> prefix = copy.r.prefix();
        prefix.back() += 1;
        copy.r = SeqSpec(prefix, copy.r.tail());
      }
      problems_.push_back(std::move(copy));
    }
  }

  const BuiltinProblem& problem(const std::string& name) const {
    for (const auto& p : problems_) {
      if (p.name == name) return p;
    }
    throw std::invalid_argument("unknown problem '" + name + "'");
  }

  template <typename Body>
  void check(const std::string& id, const std::string& description, double budget_ms, Body&& body) {
    CheckResult result;
    result.id = id;
    result.description = description;
    auto start = std::chrono::steady_clock::now();
    try {
      std::ostringstream detail;
      result.pass = body(detail);
      result.detail = detail.str();
    } catch (const std::exception& ex) {
      result.pass = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (budget_ms > 0 && result.ms > budget_ms) {
      result.pass = false;
      result.detail += " [over time budget " + std::to_string(budget_ms) + " ms]";
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

  const CheckOptions& opts() const { return opts_; }

 private:
  CheckOptions opts_;
  std::vector<BuiltinProblem> problems_;
  std::vector<CheckResult> results_;
};

// certified: the polynomial changes sign across printed +- 5e-5
bool root_near_printed(const std::vector<long long>& poly, const Rational& printed) {
  return eval_polynomial(poly, printed - printed_slack()) < 0 &&
         eval_polynomial(poly, printed + printed_slack()) > 0;
}

bool rate_matches(Battery& battery, std::ostream& detail, const SeqSpec& seq,
                  const Rational& printed, const std::vector<long long>* expected_poly) {
  GrowthRate g = growth_rate(seq, battery.opts().tol);
  bool ok = bracket_within(g, printed, printed_slack());
  if (expected_poly && g.poly != *expected_poly) {
    detail << " polynomial mismatch for " << seq.str() << ": got " << seq_list(g.poly);
    return false;
  }
  if (!ok) {
    detail << " " << seq.str() << " -> " << to_decimal_string(g.midpoint(), 7) << " vs printed "
           << to_decimal_string(printed, 6);
    return false;
  }
  if (!root_near_printed(g.poly, printed)) {
    detail << " polynomial of " << seq.str() << " has no sign change at printed value";
    return false;
  }
  if (battery.opts().tight) {
    GrowthRate fine = growth_rate(seq, Rational(1, Int("1000000000000")));
    if (eval_polynomial(fine.poly, fine.lo) > 0 || eval_polynomial(fine.poly, fine.hi) < 0) {
      detail << " tight polynomial cross-check failed for " << seq.str();
      return false;
    }
  }
  detail << " " << seq.str() << "=" << to_decimal_string(g.midpoint(), 6);
  return true;
}

void check_constants(Battery& battery) {
  battery.check("c1", "lambda bracket and polynomial", 1000, [&](std::ostream& detail) {
    const SeqSpec& lam = battery.problem("prop34").r;
    return rate_matches(battery, detail, lam, printed_lambda(), &lambda_polynomial());
  });

  battery.check("c2", "interval endpoint constants", 6000, [&](std::ostream& detail) {
    bool ok = true;
    ok &= rate_matches(battery, detail, battery.problem("prop34").t,
                       battery.problem("prop34").printed_hi, &interval1_hi_polynomial());
    for (const char* name : {"prop35a", "prop35b", "prop35c"}) {
      const BuiltinProblem& p = battery.problem(name);
      ok &= rate_matches(battery, detail, p.r, p.printed_lo, nullptr);
      ok &= rate_matches(battery, detail, p.t, p.printed_hi, nullptr);
    }
    return ok;
  });

  battery.check("c3", "xi and zeta with polynomials", 2000, [&](std::ostream& detail) {
    const BuiltinProblem& p = battery.problem("sec4");
    bool ok = rate_matches(battery, detail, p.r, printed_xi(), &xi_polynomial());
    ok &= rate_matches(battery, detail, p.t, printed_zeta(), &zeta_polynomial());
    return ok;
  });

  battery.check("c4", "constant sequences solve to c+1 exactly", 2000, [&](std::ostream& detail) {
    for (int c = 1; c <= 6; ++c) {
      GrowthRate g = growth_rate(SeqSpec::constant(c), battery.opts().tol);
      if (g.lo > c + 1 || g.hi < c + 1 || g.width() > battery.opts().tol) {
        detail << " c=" << c << " bracket misses c+1";
        return false;
      }
    }
    detail << " c=1..6 bracketed";
    return true;
  });
}

void check_combinatorics(Battery& battery) {
  battery.check("c5", "sum-indecomposable counts 1..7", 120000, [&](std::ostream& detail) {
    const std::vector<size_t> expected = {1, 1, 3, 13, 71, 461, 3447};
    for (int n = 1; n <= 7; ++n) {
      size_t got = enumerate_indecomposables(n).size();
      detail << (n > 1 ? "," : " ") << got;
      if (got != expected[static_cast<size_t>(n - 1)]) {
        detail << " != expected " << expected[static_cast<size_t>(n - 1)] << " at n=" << n;
        return false;
      }
    }
    return true;
  });

  battery.check("c6", "closure counting sequences", 180000, [&](std::ostream& detail) {
    struct Case {
      AntichainSet set;
      bool proper;
      std::vector<long long> head;  // stabilized value fills the rest
    };
    const std::vector<Case> cases = {
        {builtin_antichain("A"), true, {1, 1, 3, 5, 6}},
        {builtin_antichain("A"), false, {1, 1, 3, 5, 8}},
        {three_family_union(), true, {1, 1, 3, 7, 8}},
        {builtin_antichain("U12-12-odd"), true, {1, 1, 2, 3, 4}},
    };
    for (const auto& c : cases) {
      std::vector<long long> expected(12, c.head.back());
      std::copy(c.head.begin(), c.head.end(), expected.begin());
      auto got = closure_counts(c.set, 12, c.proper, battery.opts().parallel);
      if (got != expected) {
        detail << " " << c.set.label << (c.proper ? " proper " : " total ") << seq_list(got)
               << " != " << seq_list(expected);
        return false;
      }
    }
    // the six length-8 patterns properly contained in A (Figure 3)
    const std::set<Permutation> figure = {
        Permutation::parse("41263857"), Permutation::parse("42163857"),
        Permutation::parse("24163785"), Permutation::parse("31528467"),
        Permutation::parse("31527486"), Permutation::parse("24163857"),
    };
    std::set<Permutation> got8;
    for (const auto& member : members_up_to(builtin_antichain("A"), 16)) {
      if (member.size() <= 8) continue;
      auto closure = pattern_closure(member);
      for (const auto& perm : closure[8]) {
        if (is_sum_indecomposable(perm)) got8.insert(perm);
      }
    }
    if (got8 != figure) {
      detail << " length-8 proper patterns of A differ from the published six";
      return false;
    }
    detail << " all four sequences and the six length-8 patterns match";
    return true;
  });

  battery.check("c7", "antichain verification up to length 16", 120000, [&](std::ostream& detail) {
    for (const char* name : {"A", "A-prime"}) {
      if (!verify_antichain(members_up_to(builtin_antichain(name), 16))) {
        detail << " " << name << " failed";
        return false;
      }
    }
    auto members = members_up_to(three_family_union(), 16);
    if (!verify_antichain(members)) {
      detail << " three-family union failed";
      return false;
    }
    members.push_back(Permutation::parse("3142"));  // pattern of 412563
    if (verify_antichain(members)) {
      detail << " negative control not detected";
      return false;
    }
    detail << " A, A-prime, three-family union verified; control rejected";
    return true;
  });

  battery.check("c12", "containment order laws (<=6) and decomposition round trip (<=8)", 120000,
                [&](std::ostream& detail) {
    std::vector<Permutation> perms;
    for (int n = 1; n <= 6; ++n) {
      auto all = enumerate_all(n);
      perms.insert(perms.end(), all.begin(), all.end());
    }
    const size_t count = perms.size();
    const size_t words = (count + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(count, std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (contains(perms[i], perms[j])) rows[i][j / 64] |= uint64_t(1) << (j % 64);
      }
    }
    for (size_t i = 0; i < count; ++i) {
      if (!(rows[i][i / 64] >> (i % 64) & 1)) {
        detail << " reflexivity failed at " << perms[i].str();
        return false;
      }
    }
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        bool ij = rows[i][j / 64] >> (j % 64) & 1;
        if (!ij) continue;
        if (i != j && (rows[j][i / 64] >> (i % 64) & 1)) {
          detail << " antisymmetry failed";
          return false;
        }
        // transitivity: everything containing j must contain i... i.e.
        // i <= j means every pattern relation through j lifts: row(j) says
        // j <= k; then i <= k must hold: row_j subset of row_i
        for (size_t w = 0; w < words; ++w) {
          if (rows[j][w] & ~rows[i][w]) {
            detail << " transitivity failed";
            return false;
          }
        }
      }
    }
    for (int n = 1; n <= 8; ++n) {
      for (const auto& perm : enumerate_all(n)) {
        auto parts = sum_decompose(perm);
        Permutation folded = parts.front();
        for (size_t i = 1; i < parts.size(); ++i) folded = direct_sum(folded, parts[i]);
        bool parts_ok = std::all_of(parts.begin(), parts.end(), is_sum_indecomposable);
        if (folded != perm || !parts_ok) {
          detail << " round trip failed at " << perm.str();
          return false;
        }
      }
    }
    detail << " order axioms over " << count << " permutations; round trip through length 8";
    return true;
  });
}

void check_realization(Battery& battery) {
  battery.check("c8", "greedy realization across [2.49, 2.69]", 120000, [&](std::ostream& detail) {
    const BuiltinProblem& p = battery.problem("prop34");
    std::mt19937 rng(kSeed);
    const Rational width_limit(1, 1000);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> den_dist(100, 2000);
      int den = den_dist(rng);
      long lo_num = (249L * den + 99) / 100;
      long hi_num = 269L * den / 100;
      std::uniform_int_distribution<long> num_dist(lo_num, hi_num);
      Rational gamma(num_dist(rng), den);

      RealizationProblem problem{p.r, p.t, p.k, p.b, gamma};
      RealizationCertificate cert = realize(problem, 40, battery.opts().tol);
      if (cert.lower.lo > gamma || gamma > cert.upper.hi) {
        detail << " gamma " << to_fraction_string(gamma) << " not bracketed";
        return false;
      }
      if (cert.upper.hi - cert.lower.lo >= width_limit) {
        detail << " bracket too wide at gamma " << to_fraction_string(gamma);
        return false;
      }
      for (int n = 1; n <= cert.depth; ++n) {
        int chosen = cert.chosen[static_cast<size_t>(n - 1)];
        if (chosen > p.t.at(n) || chosen < p.r.at(n)) {
          detail << " chosen value escapes [r_n, t_n] at n=" << n;
          return false;
        }
        if (chosen < p.t.at(n)) {
          std::vector<int> bumped(cert.chosen.begin(), cert.chosen.begin() + n);
          bumped.back() += 1;
          if (f_eval(p.r.with_prefix(bumped), gamma) <= 1) {
            detail << " greedy maximality violated at n=" << n;
            return false;
          }
        }
      }
      RealizationCertificate shallow = realize(problem, 20, battery.opts().tol);
      Rational slack = 2 * battery.opts().tol;
      if (cert.lower.lo < shallow.lower.lo - slack || cert.upper.hi > shallow.upper.hi + slack) {
        detail << " brackets do not nest between depth 20 and 40";
        return false;
      }
    }
    detail << " 20 targets realized at depth 40, nested against depth 20";
    return true;
  });

  battery.check("c9", "perfect-set sampler on the section-4 pair", 120000, [&](std::ostream& detail) {
    const BuiltinProblem& p = battery.problem("sec4");
    GrowthRate xi = growth_rate(p.r, battery.opts().tol);
    GrowthRate zeta = growth_rate(p.t, battery.opts().tol);
    const Rational envelope(1, 1000000);

    std::vector<GrowthRate> rates;
    rates.reserve(256);
    for (int value = 0; value < 256; ++value) {
      std::string bits(8, '0');
      for (int i = 0; i < 8; ++i) {
        if (value >> i & 1) bits[static_cast<size_t>(i)] = '1';
      }
      GrowthRate g = choice_rate(p.r, p.t, bits, battery.opts().tol);
      if (g.lo < xi.lo - envelope || g.hi > zeta.hi + envelope) {
        detail << " rate for bits " << bits << " escapes [xi, zeta]";
        return false;
      }
      rates.push_back(std::move(g));
    }
    for (int value = 0; value < 256; ++value) {
      for (int i = 0; i < 8; ++i) {
        if (value >> i & 1) continue;
        const GrowthRate& low = rates[static_cast<size_t>(value)];
        const GrowthRate& high = rates[static_cast<size_t>(value | 1 << i)];
        if (low.lo > high.hi || low.hi > high.hi + battery.opts().tol) {
          detail << " flipping bit " << i << " of " << value << " decreased the rate";
          return false;
        }
      }
    }

    // shared 12-bit prefixes sit within the effective proximity bound
    const Rational eps(1, 100);
    int m = proximity_bound(eps, 5);
    if (28 < m) {
      detail << " twelve shared choices only pin " << 28 << " terms < m=" << m;
      return false;
    }
    std::mt19937 rng(kSeed + 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::string prefix;
      for (int i = 0; i < 12; ++i) prefix += bit(rng) ? '1' : '0';
      std::vector<GrowthRate> pair_rates;
      for (int ext = 0; ext < 2; ++ext) {
        std::string bits = prefix;
        for (int i = 0; i < 2; ++i) bits += bit(rng) ? '1' : '0';
        pair_rates.push_back(choice_rate(p.r, p.t, bits, battery.opts().tol));
      }
      Rational spread = std::max(pair_rates[0].hi, pair_rates[1].hi) -
                        std::min(pair_rates[0].lo, pair_rates[1].lo);
      if (spread > eps + 2 * battery.opts().tol) {
        detail << " shared prefix " << prefix << " exceeded the proximity bound";
        return false;
      }
    }
    detail << " 256 rates inside [xi, zeta]; dominance monotone; prefix proximity holds";
    return true;
  });
}

void check_series_laws(Battery& battery) {
  battery.check("c10", "series laws: superadditivity, monotonicity, certification", 60000,
                [&](std::ostream& detail) {
    for (const auto& seq : builtin_sequences()) {
      CountSequence counts = class_counts(seq, 30);
      for (int mu = 1; mu <= 29; ++mu) {
        for (int nu = 1; mu + nu <= 30; ++nu) {
          if (counts.a[static_cast<size_t>(mu + nu)] <
              counts.a[static_cast<size_t>(mu)] * counts.a[static_cast<size_t>(nu)]) {
            detail << " superadditivity failed for " << seq.str();
            return false;
          }
        }
      }
      GrowthRate g = growth_rate(seq, battery.opts().tol);
      if (f_eval(seq, g.lo) < 1 || f_eval(seq, g.hi) > 1) {
        detail << " bracket certification failed for " << seq.str();
        return false;
      }
      // Fekete: a_n^{1/n} never exceeds the certified upper end
      Rational power = 1;
      for (int n = 1; n <= 30; ++n) {
        power *= g.hi;
        if (Rational(counts.a[static_cast<size_t>(n)]) > power) {
          detail << " a_n exceeded hi^n for " << seq.str() << " at n=" << n;
          return false;
        }
      }
    }
    std::mt19937 rng(kSeed + 2);
    auto sequences = builtin_sequences();
    std::uniform_int_distribution<size_t> pick(0, sequences.size() - 1);
    std::uniform_int_distribution<int> num(1, 4000);
    for (int trial = 0; trial < 100; ++trial) {
      const SeqSpec& seq = sequences[pick(rng)];
      Rational span = seq.bound() + 1;
      Rational x = 1 + span * num(rng) / 4001;
      Rational y = 1 + span * num(rng) / 4001;
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      if (f_eval(seq, x) <= f_eval(seq, y)) {
        detail << " monotonicity failed for " << seq.str();
        return false;
      }
    }
    detail << " all built-in sequences verified to N=30 plus 100 random pairs";
    return true;
  });

  battery.check("c11", "juxtaposition shifts the interval chain", 10000, [&](std::ostream& detail) {
    GrowthRate lam = growth_rate(battery.problem("prop34").r, battery.opts().tol);
    GrowthRate shifted = lam;
    for (int k = 1; k <= 5; ++k) {
      shifted = juxtapose_rate(shifted, GrowthRate::exact(Rational(1)));
      if (!bracket_within(shifted, printed_lambda() + k, printed_slack())) {
        detail << " lambda+" << k << " bracket drifted";
        return false;
      }
    }
    // the four constructed intervals chain across [lambda, lambda+1]
    const char* names[] = {"prop34", "prop35a", "prop35b", "prop35c"};
    GrowthRate previous_hi;
    for (int i = 0; i < 4; ++i) {
      const BuiltinProblem& p = battery.problem(names[i]);
      IntervalEndpoints ends = interval_endpoints(p.r, p.t, p.k, p.b, battery.opts().tol);
      if (i > 0 && ends.lower.lo > previous_hi.hi) {
        detail << " gap before " << names[i];
        return false;
      }
      previous_hi = ends.upper;
    }
    if (previous_hi.lo < lam.hi + 1) {
      detail << " final interval stops short of lambda+1";
      return false;
    }
    detail << " lambda+k reproduced for k<=5; intervals chain past lambda+1";
    return true;
  });
}

}  // namespace

std::vector<CheckResult> run_paper_checks(const CheckOptions& options) {
  Battery battery(options);
  check_constants(battery);
  check_combinatorics(battery);
  check_realization(battery);
  check_series_laws(battery);
  auto results = battery.take();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    auto key = [](const std::string& id) { return std::stoi(id.substr(1)); };
    return key(a.id) < key(b.id);
  });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace permgrowth
