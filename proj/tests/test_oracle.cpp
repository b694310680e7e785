#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "tatami/core.hpp"
#include "tatami/errors.hpp"
#include "tatami/oracle.hpp"

using namespace tatami;

namespace {

// Every monomer-dimer covering via a cell bitmask, filtered afterwards with
// validate_tatami; no pruning shared with the oracle.
void all_coverings(int n, std::uint32_t used, std::vector<Tile>& tiles, std::vector<Tiling>& out) {
  int first = -1;
  for (int i = 0; i < n * n; ++i) {
    if ((used >> i & 1U) == 0) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.emplace_back(n, tiles);
    return;
  }
  const int x = first % n;
  const int y = first / n;
  auto bit = [n](int cx, int cy) { return std::uint32_t{1} << (cy * n + cx); };
  tiles.push_back({TileKind::Monomer, {x, y}});
  all_coverings(n, used | bit(x, y), tiles, out);
  tiles.pop_back();
  if (x + 1 < n && (used & bit(x + 1, y)) == 0) {
    tiles.push_back({TileKind::HDimer, {x, y}});
    all_coverings(n, used | bit(x, y) | bit(x + 1, y), tiles, out);
    tiles.pop_back();
  }
  if (y + 1 < n) {
    tiles.push_back({TileKind::VDimer, {x, y}});
    all_coverings(n, used | bit(x, y) | bit(x, y + 1), tiles, out);
    tiles.pop_back();
  }
}

std::map<int, std::uint64_t> filtered_counts(int n) {
  std::vector<Tiling> coverings;
  std::vector<Tile> tiles;
  all_coverings(n, 0, tiles, coverings);
  std::map<int, std::uint64_t> counts;
  for (const Tiling& t : coverings) {
    if (validate_tatami(t).empty()) ++counts[static_cast<int>(monomer_count(t))];
  }
  return counts;
}

}  // namespace

TEST_CASE("oracle matches unpruned search") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(oracle::count_by_monomers(n) == filtered_counts(n));
  }
}

TEST_CASE("small grids by hand") {
  // 1x1: one monomer. 2x2: two dimer pairs, and four ways to place one
  // dimer plus two monomers.
  CHECK(oracle::count_by_monomers(1) == std::map<int, std::uint64_t>{{1, 1}});
  CHECK(oracle::count_by_monomers(2) == std::map<int, std::uint64_t>{{0, 2}, {2, 4}});
}

TEST_CASE("totals") {
  const std::uint64_t expected[] = {1, 6, 22, 66, 178};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t total = 0;
    for (const auto& [m, c] : oracle::count_by_monomers(n)) total += c;
    CHECK(total == expected[n - 1]);
  }
}

TEST_CASE("output is distinct, valid and in a fixed order") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    std::vector<std::string> first_run;
    oracle::enumerate_all(n, [&](const Tiling& t) {
      CHECK(is_tatami(t));
      first_run.push_back(encode(t));
      seen.insert(first_run.back());
    });
    CHECK(seen.size() == first_run.size());
    std::size_t i = 0;
    oracle::enumerate_all(n, [&](const Tiling& t) { CHECK(encode(t) == first_run[i++]); });
  }
}

TEST_CASE("first tiling follows the branch order") {
  std::optional<Tiling> first;
  oracle::enumerate_all(3, [&](const Tiling& t) {
    if (!first) first = t;
  });
  REQUIRE(first);
  CHECK(first->tile_at({0, 0}).is_monomer());
}

TEST_CASE("monomer cap") {
  oracle::Options opts;
  opts.max_monomers = 2;
  std::uint64_t count = 0;
  oracle::enumerate_all(4, [&](const Tiling& t) {
    CHECK(monomer_count(t) <= 2);
    ++count;
  }, opts);
  CHECK(count == 34);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(oracle::enumerate_all(0, [](const Tiling&) {}), DomainError);
  CHECK_THROWS_AS(oracle::enumerate_all(oracle::kMaxN + 1, [](const Tiling&) {}), DomainError);
}
