#pragma once

// Feature/diagonal structure of tatami tilings with fewer than n monomers.
//
// A tiling with m < n monomers has exactly one bidimer or vortex f. The
// tiling T_f whose only feature is f is built by laying the source tiles
// and filling the four wedges cut out by the X through f with running bond;
// every other tiling containing f is T_f with some subset of its diagonals
// flipped.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tatami/core.hpp"

namespace tatami {

/// A point in half-unit coordinates: (x2, y2) stands for (x2/2, y2/2).
/// Lattice points have even coordinates, cell centres odd ones.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;
  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

enum class Side : std::uint8_t { Bottom, Right, Top, Left };

enum class FeatureKind : std::uint8_t { HBidimer, VBidimer, CcwVortex, CwVortex, Loner, Vee };

std::string to_string(FeatureKind kind);

struct Feature {
  FeatureKind kind = FeatureKind::VBidimer;
  HalfPoint center;
  /// Boundary the feature sits on (loners and vees only).
  std::optional<Side> side;

  /// Bidimer centred on lattice point (x, y); its 2x2 block spans cells
  /// x-1..x by y-1..y.
  static Feature bidimer(bool vertical, int x, int y);
  /// Vortex around the monomer in cell c.
  static Feature vortex(bool clockwise, Cell c);

  bool is_bidimer() const { return kind == FeatureKind::HBidimer || kind == FeatureKind::VBidimer; }
  bool is_vortex() const { return kind == FeatureKind::CwVortex || kind == FeatureKind::CcwVortex; }

  friend auto operator<=>(const Feature&, const Feature&) = default;
};

std::string to_string(const Feature& f);

/// Tiles that make up a feature's source in a tiling where it occurs.
std::vector<Tile> source_tiles(const Feature& f);

/// A boundary monomer plus a staircase of dimers reaching the boundary.
///
/// Cells c_0 .. c_{2L}: c_0 is the monomer, c_{2k} = c_0 + k * heading and
/// c_{2k+1} = c_{2k} + first step, where the first step runs along the
/// boundary the monomer lies on. Unflipped, dimers cover {c_{2k-1}, c_{2k}};
/// flipping re-pairs them as {c_{2k}, c_{2k+1}} and moves the monomer to c_{2L}.
struct Diagonal {
  Cell monomer;
  Cell heading;  // (+-1, +-1)
  int length = 0;  // number of dimers
  bool vertical_first = false;

  Cell first_step() const { return vertical_first ? Cell{0, heading.y} : Cell{heading.x, 0}; }
  Cell far_end() const { return monomer + length * heading; }
  /// The same staircase described from its far end, i.e. the diagonal that
  /// undoes a flip of this one.
  Diagonal reversed() const;
  std::vector<Cell> cells() const;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// The diagonal headed by the non-corner boundary cell `monomer` in direction
/// `heading`, or nullopt if the cell is a corner, off the boundary, or the
/// heading does not point into the grid.
std::optional<Diagonal> make_diagonal(int n, Cell monomer, Cell heading);

/// True if d's monomer and unflipped dimers are present in g.
bool diagonal_present(const TileGrid& g, const Diagonal& d);
/// Re-pairs d's cells in place. Requires diagonal_present(g, d).
void apply_flip(TileGrid& g, const Diagonal& d);

/// Flips d. Throws StructuralError if d is not present in t or the result
/// would violate the tatami condition.
Tiling flip_diagonal(const Tiling& t, const Diagonal& d);

/// Every present diagonal of t whose flip yields a tatami tiling, sorted.
std::vector<Diagonal> find_flippable_diagonals(const Tiling& t);

/// The X through a feature centre: lines (x-xf) +- (y-yf) = 0 clipped to the
/// grid, which cut the grid into four wedges.
struct XCross {
  enum class Wedge : std::uint8_t { Bottom, Right, Top, Left, OnArm };

  int n = 0;
  HalfPoint center;
  /// Boundary endpoints of the arms: lower-left, lower-right, upper-right,
  /// upper-left.
  std::array<HalfPoint, 4> arm_ends;

  Wedge wedge_of(Cell c) const;
};

XCross x_cross(int n, HalfPoint center);

/// Centre re-oriented by the grid symmetries so that y <= x <= n/2, in
/// half units: {x2, y2}.
HalfPoint canonical_position(int n, HalfPoint center);

/// Monomers in T_f: n - 2y_f (bidimer) or n - 2y_f + 1 (vortex) after
/// re-orientation.
int predicted_monomer_count(int n, const Feature& f);
/// Flippable diagonals in T_f: n-2y_f-2 if y_f < x_f, n-2y_f-1 if
/// y_f = x_f < n/2, 0 otherwise.
int predicted_diagonal_count(int n, const Feature& f);

/// The unique tatami tiling whose only feature is f. Throws DomainError for
/// loners, vees, and sources that do not fit in the grid.
Tiling place_feature(int n, const Feature& f);

struct FeatureFamily {
  Tiling base;  // T_f
  std::vector<Diagonal> diagonals;
};

FeatureFamily feature_family(int n, const Feature& f);

/// All 2^d tilings obtained from T_f by flipping subsets of its diagonals,
/// in binary reflected Gray code order (one flip between consecutive outputs).
void enumerate_with_feature(int n, const Feature& f, const TilingSink& sink);

/// Bidimers on the ring at distance (n-m)/2 (H before V at each position),
/// then vortices on the ring giving m monomers (Ccw before Cw). Rings are
/// walked clockwise from their bottom-left corner.
/// Throws DomainError unless 0 <= m < n and m = n (mod 2).
std::vector<Feature> feature_positions(int n, int m);

/// Every n x n tatami tiling with exactly m < n monomers.
void enumerate_class(int n, int m, const TilingSink& sink);

/// Bidimers, vortices, vees and loners of t, in that order, each group in
/// row-major scan order. Corner monomers never form loners or vees.
std::vector<Feature> detect_features(const Tiling& t);

}  // namespace tatami
