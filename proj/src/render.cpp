#include "tatami/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tatami/errors.hpp"

namespace tatami {

std::vector<bool> highlighted_tiles(const Tiling& t, const RenderOptions& opts) {
  std::vector<bool> marked(t.tiles().size(), false);
  for (const Feature& f : opts.features) {
    for (const Tile& src : source_tiles(f)) {
      if (!t.in_grid(src.anchor) || !t.in_grid(src.other())) continue;
      const std::size_t i = t.owner(src.anchor);
      if (t.tiles()[i] == src) marked[i] = true;
    }
  }
  std::set<Cell> diag_cells;
  for (const Diagonal& d : opts.diagonals) {
    for (Cell c : d.cells()) diag_cells.insert(c);
  }
  for (std::size_t i = 0; i < t.tiles().size(); ++i) {
    const Tile& tile = t.tiles()[i];
    if (diag_cells.contains(tile.anchor) && diag_cells.contains(tile.other())) marked[i] = true;
  }
  return marked;
}

namespace {

const char* junction_glyph(bool up, bool down, bool left, bool right) {
  const int key = (up ? 8 : 0) | (down ? 4 : 0) | (left ? 2 : 0) | (right ? 1 : 0);
  static const char* const glyphs[16] = {
      " ", "╶", "╴", "─", "╷", "┌", "┐", "┬", "╵", "└", "┘", "┴", "│", "├", "┤", "┼",
  };
  return glyphs[key];
}

}  // namespace

std::string render_ascii(const Tiling& t, const RenderOptions& opts) {
  const int n = t.n();
  const auto marked = highlighted_tiles(t, opts);
  // Whether cells a and b (possibly off-grid) are in different tiles.
  auto split = [&](Cell a, Cell b) {
    const bool ia = t.in_grid(a);
    const bool ib = t.in_grid(b);
    if (!ia && !ib) return false;
    if (ia != ib) return true;
    return t.owner(a) != t.owner(b);
  };
  // Edge above/below lattice point (x, y) is the vertical segment x between
  // cells (x-1, *) and (x, *).
  auto vertical_edge = [&](int x, int y) { return y >= 0 && y < n && split({x - 1, y}, {x, y}); };
  auto horizontal_edge = [&](int x, int y) { return x >= 0 && x < n && split({x, y - 1}, {x, y}); };

  const std::string hbar = opts.ascii_only ? "-" : "─";
  const std::string vbar = opts.ascii_only ? "|" : "│";
  std::string out;
  for (int row = 2 * n; row >= 0; --row) {
    for (int col = 0; col <= 2 * n; ++col) {
      const int x = col / 2;
      const int y = row / 2;
      if (row % 2 == 0 && col % 2 == 0) {
        const bool up = vertical_edge(x, y);
        const bool down = vertical_edge(x, y - 1);
        const bool left = horizontal_edge(x - 1, y);
        const bool right = horizontal_edge(x, y);
        if (opts.ascii_only) {
          if (!up && !down && !left && !right) {
            out += ' ';
          } else if (!up && !down) {
            out += '-';
          } else if (!left && !right) {
            out += '|';
          } else {
            out += '+';
          }
        } else {
          out += junction_glyph(up, down, left, right);
        }
      } else if (row % 2 == 0) {
        out += horizontal_edge(x, y) ? hbar : " ";
      } else if (col % 2 == 0) {
        out += vertical_edge(x, y) ? vbar : " ";
      } else {
        const std::size_t i = t.owner({x, y});
        const bool mono = t.tiles()[i].is_monomer();
        if (marked[i]) {
          out += mono ? '@' : '*';
        } else {
          out += mono ? 'o' : ' ';
        }
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& t, const RenderOptions& opts) {
  if (opts.cell_size <= 0) throw DomainError("cell size must be positive");
  const int n = t.n();
  const int s = opts.cell_size;
  const int margin = std::max(1, s / 8);
  const int size = n * s + 2 * margin;
  const auto marked = highlighted_tiles(t, opts);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<style>\n"
        ".tile { stroke: #222222; stroke-width: "
     << std::max(1, s / 12)
     << "; }\n"
        ".monomer { fill: #f2c14e; }\n"
        ".hdimer { fill: #ffffff; }\n"
        ".vdimer { fill: #dfe7f2; }\n"
        ".highlight { fill: #d81b9a; }\n"
        "</style>\n";
  for (std::size_t i = 0; i < t.tiles().size(); ++i) {
    const Tile& tile = t.tiles()[i];
    const int w = tile.kind == TileKind::HDimer ? 2 : 1;
    const int h = tile.kind == TileKind::VDimer ? 2 : 1;
    const char* kind = tile.kind == TileKind::Monomer ? "monomer" : tile.kind == TileKind::HDimer ? "hdimer" : "vdimer";
    const int px = margin + tile.anchor.x * s;
    const int py = margin + (n - tile.anchor.y - h) * s;
    os << "<rect class=\"tile " << kind << (marked[i] ? " highlight" : "") << "\" x=\"" << px << "\" y=\"" << py
       << "\" width=\"" << w * s << "\" height=\"" << h * s << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const Tiling& t, const RenderOptions& opts) {
  if (opts.cell_size <= 0) throw DomainError("cell size must be positive");
  return opts.format == RenderFormat::Svg ? render_svg(t, opts) : render_ascii(t, opts);
}

}  // namespace tatami
