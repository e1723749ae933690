#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgrowth/antichain.hpp"
#include "permgrowth/permutation.hpp"
#include "permgrowth/realizer.hpp"
#include "permgrowth/registry.hpp"
#include "permgrowth/report.hpp"
#include "permgrowth/series.hpp"
#include "permgrowth/verify.hpp"

namespace pg = permgrowth;
using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::string format = "text";
  std::string tol_text = "1e-9";
  int precision = pg::kDefaultPrecision;
  bool parallel = false;

  pg::Rational tol() const { return pg::parse_rational(tol_text); }
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(const GlobalOptions& global, const ordered_json& report, const std::string& text) {
  if (global.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string describe_bracket(const pg::GrowthRate& rate, int precision) {
  return pg::to_decimal_string(rate.midpoint(), precision) + "  (bracket [" +
         pg::to_fraction_string(rate.lo) + ", " + pg::to_fraction_string(rate.hi) + "], width " +
         pg::to_decimal_string(rate.width(), 3) + ")";
}

// -1 when r and t keep differing forever; otherwise the finite count
long free_choice_positions(const pg::SeqSpec& r, const pg::SeqSpec& t) {
  long m = std::max(r.prefix_length(), t.prefix_length());
  long d = std::lcm(r.period(), t.period());
  for (long n = m + 1; n <= m + d; ++n) {
    if (r.at(n) != t.at(n)) return -1;
  }
  long count = 0;
  for (long n = 1; n <= m; ++n) {
    if (r.at(n) != t.at(n)) ++count;
  }
  return count;
}

int cmd_rate(const GlobalOptions& global, const std::string& seq_text) {
  auto start = std::chrono::steady_clock::now();
  pg::SeqSpec seq = pg::SeqSpec::parse(seq_text);
  pg::GrowthRate rate = pg::growth_rate(seq, global.tol());

  ordered_json outputs;
  outputs["rate"] = pg::bracket_json(rate, global.precision);
  outputs["polynomial"] = pg::polynomial_str(rate.poly);
  ordered_json report = pg::make_report(
      "rate", ordered_json{{"sequence", seq.str()}, {"tol", global.tol_text}},
      std::move(outputs), ms_since(start));

  std::string text = "sequence   " + seq.str() + "\n" +
                     "rate       " + describe_bracket(rate, global.precision) + "\n" +
                     "polynomial " + pg::polynomial_str(rate.poly) + "\n";
  emit(global, report, text);
  return 0;
}

int cmd_realize(const GlobalOptions& global, const std::string& gamma_text,
                const std::string& problem_name, const std::string& r_text,
                const std::string& t_text, std::optional<int> k_opt, std::optional<int> b_opt,
                int depth) {
  auto start = std::chrono::steady_clock::now();
  pg::RealizationProblem problem;
  if (!problem_name.empty()) {
    const pg::BuiltinProblem& built = pg::builtin_problem(problem_name);
    problem = {built.r, built.t, built.k, built.b, pg::parse_rational(gamma_text)};
  } else {
    if (r_text.empty() || t_text.empty()) {
      throw std::invalid_argument("realize needs --problem or both --r and --t");
    }
    pg::SeqSpec r = pg::SeqSpec::parse(r_text);
    pg::SeqSpec t = pg::SeqSpec::parse(t_text);
    int k = 0;
    if (k_opt) {
      k = *k_opt;
    } else {
      long window = std::max(r.prefix_length(), t.prefix_length()) +
                    std::lcm(r.period(), t.period());
      k = static_cast<int>(window) + 1;
      for (long n = 1; n <= window; ++n) {
        if (r.at(n) != t.at(n)) {
          k = static_cast<int>(n);
          break;
        }
      }
    }
    if (!b_opt) throw std::invalid_argument("custom problems need --b");
    problem = {std::move(r), std::move(t), k, *b_opt, pg::parse_rational(gamma_text)};
  }

  pg::RealizationCertificate cert = pg::realize(problem, depth, global.tol());

  ordered_json outputs;
  outputs["chosen"] = cert.chosen;
  outputs["lower"] = pg::bracket_json(cert.lower, global.precision);
  outputs["upper"] = pg::bracket_json(cert.upper, global.precision);
  outputs["gamma"] = pg::to_fraction_string(cert.gamma);
  outputs["depth"] = cert.depth;
  ordered_json inputs{{"gamma", gamma_text},
                      {"problem", problem_name.empty() ? ordered_json() : ordered_json(problem_name)},
                      {"r", problem.r.str()},
                      {"t", problem.t.str()},
                      {"k", problem.k},
                      {"b", problem.b},
                      {"depth", depth},
                      {"tol", global.tol_text}};
  ordered_json report = pg::make_report("realize", std::move(inputs), std::move(outputs),
                                        ms_since(start));

  std::string chosen;
  for (size_t i = 0; i < cert.chosen.size(); ++i) {
    if (i > 0) chosen += ',';
    chosen += std::to_string(cert.chosen[i]);
  }
  std::string text = "gamma  " + pg::to_fraction_string(cert.gamma) + " = " +
                     pg::to_decimal_string(cert.gamma, global.precision) + "\n" +
                     "chosen " + chosen + "\n" +
                     "lower  " + describe_bracket(cert.lower, global.precision) + "\n" +
                     "upper  " + describe_bracket(cert.upper, global.precision) + "\n";
  emit(global, report, text);
  return 0;
}

int cmd_antichain(const GlobalOptions& global, const std::string& set_text, int max_len,
                  int counts_len) {
  auto start = std::chrono::steady_clock::now();
  pg::AntichainSet set = pg::parse_antichain_set(set_text);
  std::vector<pg::Permutation> members = pg::members_up_to(set, max_len);
  bool antichain = pg::verify_antichain(members);
  std::vector<long long> proper = pg::closure_counts(set, counts_len, true, global.parallel);
  std::vector<long long> total = pg::closure_counts(set, counts_len, false, global.parallel);

  ordered_json member_list = ordered_json::array();
  for (const auto& member : members) member_list.push_back(member.str());
  ordered_json outputs;
  outputs["members"] = std::move(member_list);
  outputs["antichain"] = antichain;
  outputs["proper_counts"] = proper;
  outputs["total_counts"] = total;
  ordered_json report = pg::make_report(
      "antichain",
      ordered_json{{"set", set_text}, {"max_len", max_len}, {"counts_len", counts_len}},
      std::move(outputs), ms_since(start));

  std::string text = "set       " + set.label + "\n";
  text += "members   " + std::to_string(members.size()) + " up to length " +
          std::to_string(max_len) + "\n";
  for (const auto& member : members) text += "  " + member.str() + "\n";
  text += "antichain " + std::string(antichain ? "true" : "false") + "\n";
  auto join = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  text += "proper    " + join(proper) + "\n";
  text += "total     " + join(total) + "\n";
  emit(global, report, text);
  return 0;
}

int cmd_verify_paper(const GlobalOptions& global, bool tight, const std::string& corrupt) {
  auto start = std::chrono::steady_clock::now();
  pg::CheckOptions options;
  options.tol = global.tol();
  options.tight = tight;
  options.corrupt = corrupt;
  options.parallel = global.parallel;
  std::vector<pg::CheckResult> results = pg::run_paper_checks(options);

  ordered_json items = ordered_json::array();
  std::string text;
  for (const auto& result : results) {
    items.push_back(ordered_json{{"id", result.id},
                                 {"description", result.description},
                                 {"pass", result.pass},
                                 {"detail", result.detail},
                                 {"ms", result.ms}});
    char line[64];
    std::snprintf(line, sizeof line, "[%s] %-3s %6.0fms  ", result.pass ? "PASS" : "FAIL",
                  result.id.c_str(), result.ms);
    text += line + result.description + " --" + result.detail + "\n";
  }
  bool ok = pg::all_passed(results);
  text += ok ? "all checks passed\n" : "CHECKS FAILED\n";

  ordered_json report = pg::make_report(
      "verify-paper", ordered_json{{"tight", tight}, {"tol", global.tol_text}},
      ordered_json{{"checks", std::move(items)}, {"all_passed", ok}}, ms_since(start));
  emit(global, report, text);
  return ok ? 0 : 4;
}

int cmd_sample_set(const GlobalOptions& global, const std::string& problem_name,
                   const std::string& r_text, const std::string& t_text, int depth, long count,
                   unsigned seed) {
  auto start = std::chrono::steady_clock::now();
  if (depth < 0 || depth > 20) throw std::invalid_argument("sample depth must be within 0..20");
  pg::SeqSpec r = pg::SeqSpec::constant(1);
  pg::SeqSpec t = r;
  if (!problem_name.empty()) {
    const pg::BuiltinProblem& built = pg::builtin_problem(problem_name);
    r = built.r;
    t = built.t;
  } else {
    if (r_text.empty() || t_text.empty()) {
      throw std::invalid_argument("sample-set needs --problem or both --r and --t");
    }
    r = pg::SeqSpec::parse(r_text);
    t = pg::SeqSpec::parse(t_text);
  }

  long available = free_choice_positions(r, t);
  int effective = depth;
  if (available >= 0) effective = static_cast<int>(std::min<long>(depth, available));

  std::vector<std::string> bit_strings;
  if (count <= 0) {
    if (effective > 14) {
      throw std::invalid_argument("full enumeration above depth 14 is too large; use --count");
    }
    for (long value = 0; value < (1L << effective); ++value) {
      std::string bits(static_cast<size_t>(effective), '0');
      for (int i = 0; i < effective; ++i) {
        if (value >> i & 1) bits[static_cast<size_t>(i)] = '1';
      }
      bit_strings.push_back(std::move(bits));
    }
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    for (long i = 0; i < count; ++i) {
      std::string bits;
      for (int j = 0; j < effective; ++j) bits += bit(rng) ? '1' : '0';
      bit_strings.push_back(std::move(bits));
    }
  }

  std::string csv = "bits,lo,hi\n";
  ordered_json rows = ordered_json::array();
  for (const auto& bits : bit_strings) {
    pg::GrowthRate g = pg::choice_rate(r, t, bits, global.tol());
    csv += bits + "," + pg::to_decimal_string(g.lo, global.precision) + "," +
           pg::to_decimal_string(g.hi, global.precision) + "\n";
    rows.push_back(ordered_json{{"bits", bits},
                                {"lo", pg::to_fraction_string(g.lo)},
                                {"hi", pg::to_fraction_string(g.hi)}});
  }

  if (global.format == "json") {
    ordered_json report = pg::make_report(
        "sample-set",
        ordered_json{{"r", r.str()}, {"t", t.str()}, {"depth", depth}, {"count", count}},
        ordered_json{{"rows", std::move(rows)}}, ms_since(start));
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << csv;  // text and csv formats both emit CSV rows
  }
  return 0;
}

int cmd_enumerate(const GlobalOptions& global, const std::string& seq_text, int indecomposable_len,
                  int terms, bool list) {
  auto start = std::chrono::steady_clock::now();
  if (!seq_text.empty()) {
    pg::SeqSpec seq = pg::SeqSpec::parse(seq_text);
    pg::CountSequence counts = pg::class_counts(seq, terms);
    ordered_json values = ordered_json::array();
    std::string text = "class counts for " + seq.str() + ":\n";
    for (size_t i = 0; i < counts.a.size(); ++i) {
      values.push_back(counts.a[i].str());
      text += "  a_" + std::to_string(i) + " = " + counts.a[i].str() + "\n";
    }
    ordered_json report = pg::make_report(
        "enumerate", ordered_json{{"sequence", seq.str()}, {"terms", terms}},
        ordered_json{{"counts", std::move(values)}}, ms_since(start));
    emit(global, report, text);
    return 0;
  }
  if (indecomposable_len <= 0) {
    throw std::invalid_argument("enumerate needs --seq or --indecomposables");
  }
  std::vector<pg::Permutation> perms = pg::enumerate_indecomposables(indecomposable_len);
  ordered_json names = ordered_json::array();
  std::string text = std::to_string(perms.size()) + " sum-indecomposable permutations of length " +
                     std::to_string(indecomposable_len) + "\n";
  for (const auto& perm : perms) {
    if (list) text += "  " + perm.str() + "\n";
    names.push_back(perm.str());
  }
  ordered_json outputs{{"count", perms.size()}};
  if (list) outputs["permutations"] = std::move(names);
  ordered_json report = pg::make_report(
      "enumerate", ordered_json{{"indecomposables", indecomposable_len}},
      std::move(outputs), ms_since(start));
  emit(global, report, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified growth rates of sum closed permutation classes"};
  app.require_subcommand(1);

  GlobalOptions global;
  if (const char* env = std::getenv("PERMGROWTH_PRECISION")) {
    global.precision = std::atoi(env);
    if (global.precision < 1) global.precision = pg::kDefaultPrecision;
  }
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", global.tol_text, "bracket tolerance")->capture_default_str();
  app.add_option("--precision", global.precision, "significant digits in decimal output")
      ->capture_default_str();
  app.add_flag("--parallel", global.parallel, "parallel closure enumeration");

  auto* rate = app.add_subcommand("rate", "certified growth rate of a sequence");
  std::string rate_seq;
  rate->add_option("sequence", rate_seq, "prefix;tail, e.g. 1,1,3,5;6")->required();

  auto* realize = app.add_subcommand("realize", "greedy realization of a target rate");
  std::string realize_gamma, realize_problem, realize_r, realize_t;
  std::optional<int> realize_k, realize_b;
  int realize_depth = 40;
  realize->add_option("--gamma", realize_gamma, "target rate, e.g. 13/5")->required();
  realize->add_option("--problem", realize_problem, "built-in problem name");
  realize->add_option("--r", realize_r, "lower sequence");
  realize->add_option("--t", realize_t, "upper sequence");
  realize->add_option("--k", realize_k, "first index where r and t may differ");
  realize->add_option("--b", realize_b, "gap parameter b");
  realize->add_option("--depth,-n", realize_depth, "greedy depth")->capture_default_str();

  auto* antichain = app.add_subcommand("antichain", "members, verification, closure counts");
  std::string antichain_set;
  int antichain_max_len = 16;
  int antichain_counts_len = 12;
  antichain->add_option("set", antichain_set, "built-in name or U<a>-<b>[:parity];... list")
      ->required();
  antichain->add_option("--max-len", antichain_max_len, "member length cap")->capture_default_str();
  antichain->add_option("--counts-len", antichain_counts_len, "closure count horizon")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "reproduce every published value");
  bool verify_tight = false;
  std::string verify_corrupt;
  verify->add_flag("--tight", verify_tight, "add 1e-12 polynomial cross-checks");
  verify->add_option("--corrupt", verify_corrupt, "test hook: corrupt a built-in problem")
      ->group("");

  auto* sample = app.add_subcommand("sample-set", "CSV of choice-sequence rates");
  std::string sample_problem, sample_r, sample_t;
  int sample_depth = 8;
  long sample_count = 0;
  unsigned sample_seed = 1;
  sample->add_option("--problem", sample_problem, "built-in problem name (e.g. sec4)");
  sample->add_option("--r", sample_r, "lower sequence");
  sample->add_option("--t", sample_t, "upper sequence");
  sample->add_option("--depth", sample_depth, "bit-string length (0..20)")->capture_default_str();
  sample->add_option("--count", sample_count, "sample size (0 = enumerate all)")
      ->capture_default_str();
  sample->add_option("--seed", sample_seed, "sampling seed")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "class counts or indecomposables");
  std::string enum_seq;
  int enum_indecomposables = 0;
  int enum_terms = 10;
  bool enum_list = false;
  enumerate->add_option("--seq", enum_seq, "sequence for class counts");
  enumerate->add_option("--indecomposables", enum_indecomposables,
                        "enumerate sum-indecomposable permutations of this length");
  enumerate->add_option("--terms,-n", enum_terms, "number of coefficients")->capture_default_str();
  enumerate->add_flag("--list", enum_list, "list the permutations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rate->parsed()) return cmd_rate(global, rate_seq);
    if (realize->parsed()) {
      return cmd_realize(global, realize_gamma, realize_problem, realize_r, realize_t, realize_k,
                         realize_b, realize_depth);
    }
    if (antichain->parsed()) {
      return cmd_antichain(global, antichain_set, antichain_max_len, antichain_counts_len);
    }
    if (verify->parsed()) return cmd_verify_paper(global, verify_tight, verify_corrupt);
    if (sample->parsed()) {
      return cmd_sample_set(global, sample_problem, sample_r, sample_t, sample_depth, sample_count,
                            sample_seed);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(global, enum_seq, enum_indecomposables, enum_terms, enum_list);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
