#pragma once

// Text and SVG pictures of tilings.

#include <string>
#include <vector>

#include "tatami/core.hpp"
#include "tatami/structure.hpp"

namespace tatami {

enum class RenderFormat { Ascii, Svg };

struct RenderOptions {
  RenderFormat format = RenderFormat::Ascii;
  int cell_size = 24;  // SVG pixels per cell
  /// Plain '+', '-', '|' instead of box-drawing characters.
  bool ascii_only = false;
  /// Tiles of these sources, and tiles lying inside these diagonals, are
  /// drawn highlighted.
  std::vector<Feature> features;
  std::vector<Diagonal> diagonals;
};

/// A (2n+1) x (2n+1) character picture, top row first. Even positions hold
/// lattice points and edges; odd-odd positions hold cell interiors ('o' for
/// a monomer, '*' or '@' when highlighted).
std::string render_ascii(const Tiling& t, const RenderOptions& opts = {});

/// Standalone SVG 1.1 document with one <rect> per tile, y axis pointing up.
std::string render_svg(const Tiling& t, const RenderOptions& opts = {});

/// Dispatches on opts.format. Throws DomainError for cell_size <= 0.
std::string render(const Tiling& t, const RenderOptions& opts);

/// For each tile in t.tiles(), whether opts highlights it.
std::vector<bool> highlighted_tiles(const Tiling& t, const RenderOptions& opts);

}  // namespace tatami
