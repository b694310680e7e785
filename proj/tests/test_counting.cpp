#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tatami/counting.hpp"
#include "tatami/errors.hpp"
#include "tatami/oracle.hpp"

using namespace tatami;
using counting::BigInt;

namespace {

// Every composition of n as a vector of parts, built recursively.
void compositions(int n, std::vector<int>& parts, const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(parts);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    parts.push_back(p);
    compositions(n - p, parts, f);
    parts.pop_back();
  }
}

BigInt pow2(int e) { return BigInt(1) << e; }

}  // namespace

TEST_CASE("count_tilings examples") {
  CHECK(counting::count_tilings(8, 2) == 32);
  CHECK(counting::count_tilings(1, 1) == 1);
  CHECK(counting::count_tilings(4, 4) == 32);
  CHECK(counting::count_tilings(5, 1) == 10);
  CHECK(counting::count_tilings(6, 3) == 0);
  CHECK(counting::count_tilings(6, 8) == 0);
  CHECK_THROWS_AS(counting::count_tilings(0, 0), DomainError);
  CHECK_THROWS_AS(counting::count_tilings(3, -1), DomainError);
}

TEST_CASE("count_tilings agrees with brute force") {
  for (int n = 1; n <= 6; ++n) {
    const auto by_m = oracle::count_by_monomers(n);
    for (int m = 0; m <= n; ++m) {
      const auto it = by_m.find(m);
      const std::uint64_t expected = it == by_m.end() ? 0 : it->second;
      CAPTURE(n);
      CAPTURE(m);
      CHECK(counting::count_tilings(n, m) == expected);
    }
  }
}

TEST_CASE("totals sum the per-m counts exactly") {
  for (int n = 1; n <= 60; ++n) {
    BigInt sum = 0;
    for (int m = 0; m <= n; ++m) sum += counting::count_tilings(n, m);
    CHECK(sum == counting::total_tilings(n));
    CHECK(counting::count_table(n).total == sum);
  }
  CHECK(counting::total_tilings(5) == 178);
  // Beyond 64 bits.
  CHECK(counting::total_tilings(70) == pow2(69) * 206 + 2);
}

TEST_CASE("count_at_distance") {
  CHECK(counting::count_at_distance(4, 1) == 24);
  CHECK(counting::count_at_distance(4, 3) == 2);
  CHECK_THROWS_AS(counting::count_at_distance(4, 0), DomainError);
  CHECK_THROWS_AS(counting::count_at_distance(4, 4), DomainError);
  for (int n = 2; n <= 20; ++n) {
    BigInt sum = BigInt(n) * pow2(n - 1);
    for (int k = 1; k < n; ++k) sum += counting::count_at_distance(n, k);
    CHECK(sum == counting::total_tilings(n));
  }
}

TEST_CASE("composition square sums") {
  CHECK(counting::composition_square_sum(1) == 1);
  // (3), (2,1), (1,2), (1,1,1): 9 + 5 + 5 + 3.
  CHECK(counting::composition_square_sum(3) == 22);
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    std::vector<int> parts;
    compositions(n, parts, [&](const std::vector<int>& c) {
      for (int p : c) sum += p * p;
    });
    CHECK(counting::composition_square_sum(n) == sum);
  }
  for (int n = 1; n <= 18; ++n) CHECK(counting::composition_square_sum(n) == counting::total_tilings(n));
}

TEST_CASE("summand counts") {
  CHECK(counting::summand_count(3, 1) == 5);
  CHECK(counting::summand_count(7, 7) == 1);
  CHECK_THROWS_AS(counting::summand_count(1, 1), DomainError);
  for (int n = 2; n <= 12; ++n) {
    std::vector<BigInt> occurrences(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> parts;
    compositions(n, parts, [&](const std::vector<int>& c) {
      for (int p : c) occurrences[static_cast<std::size_t>(p)] += 1;
    });
    for (int i = 1; i <= n; ++i) CHECK(counting::summand_count(n, i) == occurrences[static_cast<std::size_t>(i)]);
  }
  for (int n = 2; n <= 18; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += BigInt(i) * i * counting::summand_count(n, i);
    CHECK(sum == counting::composition_square_sum(n));
  }
}

TEST_CASE("red box class sizes") {
  CHECK(counting::red_box_class_size(4, 3) == 2);
  CHECK(counting::red_box_class_size(4, 1) == 24);
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(counting::red_box_class_size(n, k) == counting::count_at_distance(n, k));
      CHECK(counting::count_at_distance(n, k) == BigInt(n - k) * pow2(n - k));
    }
  }
}

TEST_CASE("count table") {
  const auto t = counting::count_table(4);
  CHECK(t.count(0) == 2);
  CHECK(t.count(2) == 32);
  CHECK(t.count(3) == 0);
  CHECK(t.count(9) == 0);
  CHECK(t.total == 66);
}
