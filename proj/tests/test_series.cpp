#include <doctest.h>

#include <random>

#include "permgrowth/series.hpp"

using namespace permgrowth;

namespace {

SeqSpec seq(const char* text) { return SeqSpec::parse(text); }

SeqSpec random_seq(std::mt19937& rng, int c, int min_prefix, int max_prefix) {
  std::uniform_int_distribution<int> entry(1, c);
  std::uniform_int_distribution<int> plen(min_prefix, max_prefix);
  std::uniform_int_distribution<int> dlen(1, 3);
  std::vector<int> prefix, tail;
  int m = plen(rng);
  for (int i = 0; i < m; ++i) prefix.push_back(entry(rng));
  int d = dlen(rng);
  for (int i = 0; i < d; ++i) tail.push_back(entry(rng));
  return SeqSpec(std::move(prefix), std::move(tail));
}

}  // namespace

TEST_CASE("sequence parsing and indexing") {
  SeqSpec s = seq("1,1,3,5;6");
  CHECK(s.prefix() == std::vector<int>{1, 1, 3, 5});
  CHECK(s.tail() == std::vector<int>{6});
  CHECK(s.at(4) == 5);
  CHECK(s.at(5) == 6);
  CHECK(s.at(100) == 6);
  CHECK(s.bound() == 6);
  CHECK(s.str() == "1,1,3,5;6");

  SeqSpec z = seq("1,1,2,3;5,4");
  CHECK(z.at(5) == 5);
  CHECK(z.at(6) == 4);
  CHECK(z.at(7) == 5);
  CHECK(z.at(8) == 4);

  CHECK(seq(";4").at(1) == 4);
  CHECK(SeqSpec::constant(2) == seq(";2"));
  CHECK(seq("2;2").at(7) == 2);

  CHECK_THROWS_AS(seq("1,0;2"), std::invalid_argument);
  CHECK_THROWS_AS(seq("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(seq("1;"), std::invalid_argument);
  CHECK_THROWS_AS(seq("1;2x"), std::invalid_argument);
}

TEST_CASE("prefix overrides keep the tail phase") {
  SeqSpec s = seq("1,1,3,5;6");
  SeqSpec o = s.with_prefix({1, 1, 3, 9, 7});
  CHECK(o.at(4) == 9);
  CHECK(o.at(5) == 7);
  CHECK(o.at(6) == 6);

  SeqSpec z = seq("1,1,2,3;5,4");
  SeqSpec oz = z.with_prefix({9});
  CHECK(oz.at(1) == 9);
  CHECK(oz.at(5) == 5);
  CHECK(oz.at(6) == 4);

  SeqSpec shifted = z.with_prefix({1, 1, 2, 3, 5, 4, 9});
  CHECK(shifted.at(7) == 9);
  CHECK(shifted.at(8) == 4);
  CHECK(shifted.at(9) == 5);
}

TEST_CASE("dominance comparison") {
  CHECK(seq("1,1,3,13;8").dominates(seq("1,1,3,5;6")));
  CHECK_FALSE(seq("1,1,3,5;6").dominates(seq("1,1,3,13;8")));
  CHECK(seq("1,1,2,3;5,4").dominates(seq("1,1,2,3;4")));
  CHECK(seq("2;2").dominates(seq("2;2")));
}

TEST_CASE("f_eval closed form") {
  for (int c = 1; c <= 6; ++c) {
    CHECK(f_eval(SeqSpec::constant(c), Rational(c + 1)) == 1);  // sum c/(c+1)^n = 1
  }
  SeqSpec lam = seq("1,1,3,5;6");
  Rational near = f_eval(lam, parse_rational("2.48187"));
  CHECK(abs(near - 1) < Rational(1, 10000));

  CHECK(f_eval(lam, Rational(2)) > f_eval(lam, Rational(5, 2)));
  CHECK(f_eval(lam, Rational(10)) > f_eval(lam, Rational(1000)));
  CHECK(f_eval(lam, Rational(1000)) > 0);
  CHECK_THROWS_AS(f_eval(lam, Rational(1)), std::domain_error);
  CHECK_THROWS_AS(f_eval(lam, Rational(1, 2)), std::domain_error);
}

TEST_CASE("f_eval agrees with direct partial sums") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    SeqSpec s = random_seq(rng, 6, 0, 4);
    Rational x(3 + static_cast<int>(rng() % 50), 1 + static_cast<int>(rng() % 10));
    if (x <= 1) continue;
    Rational direct = 0;
    Rational power = 1;
    for (long n = 1; n <= 400; ++n) {
      power /= x;
      direct += s.at(n) * power;
    }
    // truncation error is at most bound * x^-400 / (1 - 1/x)
    CHECK(abs(f_eval(s, x) - direct) < Rational(1, Int(1) << 64));
  }
}

TEST_CASE("certified growth rates for the published sequences") {
  GrowthRate lam = growth_rate(seq("1,1,3,5;6"));
  CHECK(lam.lo >= parse_rational("2.48182"));
  CHECK(lam.hi <= parse_rational("2.48192"));
  CHECK(lam.width() <= default_tol());
  CHECK(f_eval(seq("1,1,3,5;6"), lam.lo) >= 1);
  CHECK(f_eval(seq("1,1,3,5;6"), lam.hi) <= 1);
  CHECK(lam.poly == std::vector<long long>{1, -2, 0, -2, -2, -1});

  GrowthRate hi1 = growth_rate(seq("1,1,3,13;8"));
  CHECK(hi1.lo >= parse_rational("2.69279"));
  CHECK(hi1.hi <= parse_rational("2.69289"));
  CHECK(hi1.poly == std::vector<long long>{1, -2, 0, -2, -10, 5});

  GrowthRate xi = growth_rate(seq("1,1,2,3;4"));
  CHECK(xi.lo >= parse_rational("2.30519"));
  CHECK(xi.hi <= parse_rational("2.30529"));
  CHECK(xi.poly == std::vector<long long>{1, -2, 0, -1, -1, -1});

  GrowthRate zeta = growth_rate(seq("1,1,2,3;5,4"));
  CHECK(zeta.lo >= parse_rational("2.32326"));
  CHECK(zeta.hi <= parse_rational("2.32336"));
  CHECK(zeta.poly == std::vector<long long>{1, -1, -2, -1, -2, -3, -1});
}

TEST_CASE("constant sequences have rate exactly c+1") {
  for (int c = 1; c <= 6; ++c) {
    GrowthRate g = growth_rate(SeqSpec::constant(c));
    CHECK(g.lo <= c + 1);
    CHECK(g.hi >= c + 1);
    CHECK(g.width() <= default_tol());
  }
}

TEST_CASE("bracket certification holds for random sequences") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    SeqSpec s = random_seq(rng, 8, 0, 5);
    GrowthRate g = growth_rate(s);
    CHECK(f_eval(s, g.lo) >= 1);
    CHECK(f_eval(s, g.hi) <= 1);
    CHECK(g.width() <= default_tol());
    // polynomial signs agree with the bracket
    CHECK(eval_polynomial(g.poly, g.lo) <= 0);
    CHECK(eval_polynomial(g.poly, g.hi) >= 0);
  }
}

TEST_CASE("dominated sequences have dominated rates") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    SeqSpec s = random_seq(rng, 5, 1, 4);
    std::vector<int> bigger_prefix = s.prefix();
    std::vector<int> bigger_tail = s.tail();
    for (int& v : bigger_prefix) v += static_cast<int>(rng() % 3);
    for (int& v : bigger_tail) v += static_cast<int>(rng() % 3);
    SeqSpec t(bigger_prefix, bigger_tail);
    REQUIRE(t.dominates(s));
    GrowthRate gs = growth_rate(s);
    GrowthRate gt = growth_rate(t);
    CHECK(gt.hi >= gs.lo);
    CHECK(gt.lo >= gs.lo - default_tol());
  }
}

TEST_CASE("polynomial extraction on simple cases") {
  CHECK(seq_to_polynomial(seq("2;2")) == std::vector<long long>{1, -3, 0});
  CHECK(seq_to_polynomial(seq(";1")) == std::vector<long long>{1, -2});
  CHECK(seq_to_polynomial(seq("1,1,2,3;5,4")) ==
        std::vector<long long>{1, -1, -2, -1, -2, -3, -1});
  CHECK(polynomial_str(seq_to_polynomial(seq("1,1,3,5;6"))) == "1,-2,0,-2,-2,-1");
  // |P(midpoint)| shrinks with the tolerance
  SeqSpec lam = seq("1,1,3,5;6");
  Rational coarse = abs(eval_polynomial(seq_to_polynomial(lam),
                                        growth_rate(lam, Rational(1, 1000)).midpoint()));
  Rational fine = abs(eval_polynomial(seq_to_polynomial(lam),
                                      growth_rate(lam, Rational(1, 1000000000)).midpoint()));
  CHECK(fine < coarse);
}

TEST_CASE("class counts") {
  CountSequence ones = class_counts(seq(";1"), 5);
  CHECK(ones.a == std::vector<Int>{1, 1, 2, 4, 8, 16});

  CountSequence threes = class_counts(SeqSpec::constant(3), 6);
  for (int n = 1; n <= 6; ++n) {
    Int expected = 3 * pow(Int(4), static_cast<unsigned>(n - 1));
    CHECK(threes.a[static_cast<size_t>(n)] == expected);
  }

  CountSequence lam = class_counts(seq("1,1,3,5;6"), 5);
  CHECK(lam.a == std::vector<Int>{1, 1, 2, 6, 16, 39});
}

TEST_CASE("class counts are superadditive") {
  for (const char* text : {"1,1,3,5;6", "1,1,3,13;8", "1,1,2,3;5,4", "2;2"}) {
    CountSequence counts = class_counts(seq(text), 24);
    for (int m = 1; m <= 23; ++m) {
      for (int n = 1; m + n <= 24; ++n) {
        CHECK(counts.a[static_cast<size_t>(m + n)] >=
              counts.a[static_cast<size_t>(m)] * counts.a[static_cast<size_t>(n)]);
      }
    }
  }
}

TEST_CASE("proximity bound") {
  CHECK(proximity_bound(parse_rational("0.01"), 8) == 18);
  CHECK(proximity_bound(Rational(4 * 8 * 81), 8) == 1);
  CHECK(proximity_bound(Rational(1000000), 1) == 1);
  CHECK_THROWS_AS(proximity_bound(Rational(0), 3), std::invalid_argument);

  // two sequences agreeing to m(eps, c) terms have rates within eps
  std::mt19937 rng(37);
  for (int trial = 0; trial < 8; ++trial) {
    int c = 2 + static_cast<int>(rng() % 7);
    Rational eps(1, 50 + static_cast<int>(rng() % 200));
    int m = proximity_bound(eps, c);
    std::uniform_int_distribution<int> entry(1, c);
    std::vector<int> shared;
    for (int i = 0; i < m; ++i) shared.push_back(entry(rng));
    SeqSpec a(shared, {entry(rng)});
    SeqSpec b(shared, {entry(rng), entry(rng)});
    GrowthRate ga = growth_rate(a);
    GrowthRate gb = growth_rate(b);
    Rational spread = (ga.hi > gb.hi ? ga.hi : gb.hi) - (ga.lo < gb.lo ? ga.lo : gb.lo);
    CHECK(spread <= eps + 2 * default_tol());
  }
}
