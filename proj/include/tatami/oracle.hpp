#pragma once

// Brute-force enumeration of every tatami tiling of a small n x n grid.
// Ground truth for the closed forms and the constructive generators.

#include <cstdint>
#include <map>
#include <optional>

#include "tatami/core.hpp"

namespace tatami::oracle {

inline constexpr int kMaxN = 7;

struct Options {
  /// Abandon branches once more than this many monomers are placed.
  std::optional<int> max_monomers;
};

/// Calls sink once per tatami tiling of the n x n grid (1 <= n <= kMaxN).
///
/// Cells are scanned in row-major order from the bottom-left; at the first
/// uncovered cell the branches are Monomer, HDimer, VDimer in that order,
/// which fixes the output order. A lattice point is checked as soon as its
/// four cells are covered.
void enumerate_all(int n, const TilingSink& sink, const Options& opts = {});

/// Tiling counts keyed by monomer count; absent keys mean zero.
std::map<int, std::uint64_t> count_by_monomers(int n);

}  // namespace tatami::oracle
