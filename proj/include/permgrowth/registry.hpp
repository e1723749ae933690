#pragma once

#include <string>
#include <vector>

#include "permgrowth/antichain.hpp"
#include "permgrowth/realizer.hpp"
#include "permgrowth/series.hpp"

namespace permgrowth {

/// One pinned interval-construction instance: the bounding sequences with
/// their hypothesis data (k, b) and the published endpoint decimals the
/// computation must reproduce. For "sec4" the pair only feeds the
/// perfect-set sampler (its gap admits no b >= 2), so b is 1 there.
struct BuiltinProblem {
  std::string name;
  SeqSpec r;
  SeqSpec t;
  int k;
  int b;
  Rational printed_lo;  // published decimal for gr(r)
  Rational printed_hi;  // published decimal for min{b, gr(t)}
};

const std::vector<BuiltinProblem>& builtin_problems();
const BuiltinProblem& builtin_problem(const std::string& name);

/// Named antichain sets: "A", "A-prime", "A1", "A2", "A3", "U12-12-odd".
/// A1..A3 are the augmented sets (families plus every short
/// sum-indecomposable permutation); they are generating sets for
/// counting, not antichains themselves.
AntichainSet builtin_antichain(const std::string& name);
std::vector<std::string> builtin_antichain_names();

/// Either a built-in name or a semicolon list of families
/// "U12-12;U21-12:even" with optional parity suffix ":all|:even|:odd".
AntichainSet parse_antichain_set(const std::string& text);

/// The three-family union U^{12,12} + U^{12,21} + U^{21,12}.
AntichainSet three_family_union();

/// Published constants, exact decimals as printed.
const Rational& printed_lambda();                  // 2.48187
const Rational& printed_xi();                      // 2.30524
const Rational& printed_zeta();                    // 2.32331
const std::vector<long long>& lambda_polynomial(); // x^5-2x^4-2x^2-2x-1
const std::vector<long long>& xi_polynomial();     // x^5-2x^4-x^2-x-1
const std::vector<long long>& zeta_polynomial();   // x^6-x^5-2x^4-x^3-2x^2-3x-1
const std::vector<long long>& interval1_hi_polynomial();  // x^5-2x^4-2x^2-10x+5

/// All sequences the paper pins down, for whole-battery property checks.
std::vector<SeqSpec> builtin_sequences();

}  // namespace permgrowth
