#pragma once

// Grid and tiling data model for monomer-dimer tilings of the n x n grid.
//
// Coordinates are 0-based with the origin at the bottom-left; a cell is
// named by its bottom-left corner. Interior lattice points (x, y) with
// 1 <= x, y <= n-1 are the corners shared by four cells.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/errors.hpp"

namespace tatami {

struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
  friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Cell operator*(int k, Cell a) { return {k * a.x, k * a.y}; }
};

enum class TileKind : std::uint8_t { Monomer, HDimer, VDimer };

char kind_letter(TileKind kind);

struct Tile {
  TileKind kind = TileKind::Monomer;
  Cell anchor;  // minimum covered cell

  bool is_monomer() const { return kind == TileKind::Monomer; }
  int area() const { return is_monomer() ? 1 : 2; }
  /// The second covered cell of a dimer; the anchor for a monomer.
  Cell other() const;
  bool covers(Cell c) const { return c == anchor || c == other(); }

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Canonical tile order: by (y, x, kind letter).
bool canonical_less(const Tile& a, const Tile& b);

/// A complete monomer-dimer tiling of the n x n grid.
///
/// Immutable once constructed. Construction checks that every cell is
/// covered exactly once and throws StructuralError otherwise. Tiles are
/// stored in canonical order, so equality is set equality of tiles.
class Tiling {
 public:
  Tiling(int n, std::vector<Tile> tiles);

  int n() const noexcept { return n_; }
  std::span<const Tile> tiles() const noexcept { return tiles_; }
  bool in_grid(Cell c) const noexcept { return c.x >= 0 && c.y >= 0 && c.x < n_ && c.y < n_; }

  /// Index into tiles() of the tile covering c.
  std::size_t owner(Cell c) const { return owner_[index(c)]; }
  const Tile& tile_at(Cell c) const { return tiles_[owner(c)]; }

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.n_ == b.n_ && a.tiles_ == b.tiles_;
  }

 private:
  std::size_t index(Cell c) const;

  int n_;
  std::vector<Tile> tiles_;
  std::vector<std::uint32_t> owner_;
};

/// Mutable, possibly partial cell-to-tile assignment. Used by generators
/// and searches as scratch state; public operations take a Tiling.
class TileGrid {
 public:
  explicit TileGrid(int n);
  explicit TileGrid(const Tiling& t);

  int n() const noexcept { return n_; }
  bool in_grid(Cell c) const noexcept { return c.x >= 0 && c.y >= 0 && c.x < n_ && c.y < n_; }
  bool covered(Cell c) const { return cells_[index(c)].has_value(); }
  /// Tile covering c, or nullptr.
  const Tile* tile_at(Cell c) const;
  bool is_monomer_at(Cell c) const;

  bool can_place(const Tile& t) const;
  void place(const Tile& t);
  void remove(const Tile& t);

  /// True if (x, y) is an interior lattice point whose four cells are all
  /// covered by four distinct tiles.
  bool violates_at(int x, int y) const;
  /// True if no lattice point touching cell c is a violation.
  bool tatami_ok_around(Cell c) const;

  Tiling to_tiling() const;

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * n_ + c.x; }

  int n_;
  std::vector<std::optional<Tile>> cells_;
};

struct TatamiViolation {
  Cell point;  // interior lattice point where four tiles meet
  friend bool operator==(const TatamiViolation&, const TatamiViolation&) = default;
};

/// Every interior lattice point where four distinct tiles meet, in
/// row-major order from the bottom-left. Empty iff t is a tatami tiling.
std::vector<TatamiViolation> validate_tatami(const Tiling& t);
bool is_tatami(const Tiling& t);

std::size_t monomer_count(std::span<const Tile> tiles);
inline std::size_t monomer_count(const Tiling& t) { return monomer_count(t.tiles()); }

/// Quarter turn counterclockwise: cell (x, y) -> (n-1-y, x).
Tiling rotate90(const Tiling& t);
/// Mirror across the vertical center line: cell (x, y) -> (n-1-x, y).
Tiling reflect(const Tiling& t);

/// "tatami v1" text: header, `n <N>`, then one `M|H|V x y` line per tile in
/// canonical order, LF terminated.
std::string encode(const Tiling& t);
/// Inverse of encode. Throws ParseError on malformed text and
/// StructuralError on overlap, out-of-range tiles or incompleteness.
Tiling decode(std::string_view text);

struct TilingHash {
  std::size_t operator()(const Tiling& t) const noexcept;
};

using TilingSink = std::function<void(const Tiling&)>;

}  // namespace tatami
