#include <doctest.h>

#include <algorithm>
#include <random>

#include "permgrowth/permutation.hpp"

using namespace permgrowth;

namespace {

Permutation perm(const char* text) { return Permutation::parse(text); }

Permutation fold(const std::vector<Permutation>& parts) {
  Permutation acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

}  // namespace

TEST_CASE("construction rejects anything but a bijection on 1..n") {
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation({1}).size() == 1);
}

TEST_CASE("standardize") {
  CHECK(Permutation::standardize({4, 1, 6, 3}) == perm("3142"));
  CHECK(Permutation::standardize({7}) == perm("1"));
  CHECK(Permutation::standardize({4, 1, 6, 3, 5}) == perm("31524"));
  CHECK(Permutation::standardize({-5, 10, 0}) == perm("132"));
  CHECK_THROWS_AS(Permutation::standardize({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::standardize(std::initializer_list<int>{}), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
  CHECK(perm("3 1 4 2") == perm("3,1,4,2"));
  CHECK(perm("3142").entries() == std::vector<int>{3, 1, 4, 2});
  CHECK(perm("4 1 2 6 3 8 5 11 7 9 10").size() == 11);
  CHECK(perm("3142").str() == "3142");
  CHECK(perm("4 1 2 6 3 8 5 11 7 9 10").str() == "4 1 2 6 3 8 5 11 7 9 10");
  CHECK(perm("1").str() == "1");
  CHECK_THROWS_AS(perm("3x42"), std::invalid_argument);
  CHECK_THROWS_AS(perm(""), std::invalid_argument);
  CHECK_THROWS_AS(perm("10"), std::invalid_argument);  // neither reading is a permutation
}

TEST_CASE("containment") {
  CHECK(contains(perm("51342"), perm("391867452")));  // witness 91672
  CHECK(contains(perm("1"), perm("391867452")));
  CHECK_FALSE(contains(perm("21"), perm("12")));
  CHECK(contains(perm("3142"), perm("3142")));
  CHECK_FALSE(contains(perm("123"), perm("21")));
  CHECK_FALSE(contains(perm("1234"), perm("4321")));
  CHECK(properly_contains(perm("21"), perm("321")));
  CHECK_FALSE(properly_contains(perm("21"), perm("21")));
}

TEST_CASE("direct sums and decomposition") {
  CHECK(direct_sum(perm("21"), perm("1")) == perm("213"));
  CHECK(direct_sum(perm("132"), perm("21")) == perm("13254"));
  CHECK(direct_sum(perm("1"), perm("1")) == perm("12"));

  CHECK(sum_decompose(perm("213546")) ==
        std::vector<Permutation>{perm("21"), perm("1"), perm("21"), perm("1")});
  CHECK(sum_decompose(perm("1")) == std::vector<Permutation>{perm("1")});
  CHECK(sum_decompose(perm("412563")) == std::vector<Permutation>{perm("412563")});

  CHECK(is_sum_indecomposable(perm("21")));
  CHECK_FALSE(is_sum_indecomposable(perm("12")));
  CHECK(is_sum_indecomposable(perm("3142")));
}

TEST_CASE("decomposition round trip over all short permutations") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_all(n)) {
      auto parts = sum_decompose(p);
      CHECK(fold(parts) == p);
      for (const auto& part : parts) CHECK(is_sum_indecomposable(part));
    }
  }
}

TEST_CASE("inflation") {
  CHECK(inflate(perm("3142"), {perm("132"), perm("21"), perm("1"), perm("123")}) ==
        perm("687219345"));
  CHECK(inflate(perm("12"), {perm("3142"), perm("21")}) == direct_sum(perm("3142"), perm("21")));
  CHECK(inflate(perm("1"), {perm("31524")}) == perm("31524"));
  CHECK_THROWS_AS(inflate(perm("21"), {perm("1")}), std::invalid_argument);
}

TEST_CASE("inflation contains its skeleton and parts") {
  std::mt19937 rng(7);
  auto skeletons = enumerate_all(4);
  std::uniform_int_distribution<size_t> pick(0, skeletons.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    Permutation sigma = skeletons[pick(rng)];
    std::vector<Permutation> parts;
    bool big_part = false;
    for (int i = 0; i < sigma.size(); ++i) {
      auto all = enumerate_all(1 + static_cast<int>(rng() % 3));
      Permutation part = all[rng() % all.size()];
      big_part = big_part || part.size() >= 2;
      parts.push_back(std::move(part));
    }
    Permutation inflated = inflate(sigma, parts);
    CHECK(contains(sigma, inflated));
    for (const auto& part : parts) CHECK(contains(part, inflated));
    if (big_part) CHECK_FALSE(is_simple(inflated));
  }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(perm("3142")));
  CHECK_FALSE(is_simple(perm("213")));
  CHECK_FALSE(is_simple(perm("687219345")));
  CHECK(is_simple(perm("1")));
  CHECK(is_simple(perm("12")));
  CHECK(is_simple(perm("21")));
  CHECK_FALSE(is_simple(perm("123")));
  CHECK(is_simple(perm("2413")));
  CHECK(is_simple(perm("24153")));
}

TEST_CASE("indecomposable enumeration") {
  auto ones = enumerate_indecomposables(1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0] == perm("1"));
  CHECK(enumerate_indecomposables(2).size() == 1);
  CHECK(enumerate_indecomposables(3).size() == 3);
  CHECK(enumerate_indecomposables(4).size() == 13);
  CHECK(enumerate_indecomposables(5).size() == 71);
  CHECK_THROWS_AS(enumerate_indecomposables(11), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_indecomposables(0), std::invalid_argument);

  auto five = enumerate_indecomposables(5);
  CHECK(std::is_sorted(five.begin(), five.end()));
  for (const auto& p : five) CHECK(is_sum_indecomposable(p));
}

TEST_CASE("the decomposition bijection recovers n!") {
  // n! = sum over compositions of n of products of indecomposable counts,
  // i.e. the convolution recurrence driven by the indecomposable counts
  std::vector<long long> ind(8, 0);
  for (int n = 1; n <= 7; ++n) ind[static_cast<size_t>(n)] = static_cast<long long>(enumerate_indecomposables(n).size());
  std::vector<long long> total(8, 0);
  total[0] = 1;
  long long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    for (int j = 1; j <= n; ++j) total[static_cast<size_t>(n)] += ind[static_cast<size_t>(j)] * total[static_cast<size_t>(n - j)];
    factorial *= n;
    CHECK(total[static_cast<size_t>(n)] == factorial);
  }
}

TEST_CASE("containment is a partial order on short permutations") {
  std::vector<Permutation> perms;
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_all(n);
    perms.insert(perms.end(), all.begin(), all.end());
  }
  for (const auto& p : perms) CHECK(contains(p, p));
  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto& a = perms[pick(rng)];
    const auto& b = perms[pick(rng)];
    const auto& c = perms[pick(rng)];
    if (contains(a, b) && contains(b, a)) CHECK(a == b);
    if (contains(a, b) && contains(b, c)) CHECK(contains(a, c));
  }
}
