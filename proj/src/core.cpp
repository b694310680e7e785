#include "tatami/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace tatami {

char kind_letter(TileKind kind) {
  switch (kind) {
    case TileKind::Monomer:
      return 'M';
    case TileKind::HDimer:
      return 'H';
    case TileKind::VDimer:
      return 'V';
  }
  return '?';
}

Cell Tile::other() const {
  switch (kind) {
    case TileKind::HDimer:
      return {anchor.x + 1, anchor.y};
    case TileKind::VDimer:
      return {anchor.x, anchor.y + 1};
    case TileKind::Monomer:
      break;
  }
  return anchor;
}

bool canonical_less(const Tile& a, const Tile& b) {
  if (a.anchor.y != b.anchor.y) return a.anchor.y < b.anchor.y;
  if (a.anchor.x != b.anchor.x) return a.anchor.x < b.anchor.x;
  return kind_letter(a.kind) < kind_letter(b.kind);
}

namespace {

std::string describe(const Tile& t) {
  std::ostringstream os;
  os << kind_letter(t.kind) << ' ' << t.anchor.x << ' ' << t.anchor.y;
  return os.str();
}

constexpr std::uint32_t kUncovered = std::numeric_limits<std::uint32_t>::max();

}  // namespace

// ---------------------------------------------------------------- Tiling

Tiling::Tiling(int n, std::vector<Tile> tiles) : n_(n), tiles_(std::move(tiles)) {
  if (n_ < 1) throw StructuralError("grid size must be positive");
  std::sort(tiles_.begin(), tiles_.end(), canonical_less);
  owner_.assign(static_cast<std::size_t>(n_) * n_, kUncovered);
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const Tile& t = tiles_[i];
    for (Cell c : {t.anchor, t.other()}) {
      if (!in_grid(c)) throw StructuralError("tile out of range: " + describe(t));
      auto& slot = owner_[index(c)];
      if (slot != kUncovered && slot != i) throw StructuralError("overlapping tile: " + describe(t));
      slot = static_cast<std::uint32_t>(i);
    }
  }
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x) {
      if (owner_[index({x, y})] == kUncovered) {
        throw StructuralError("uncovered cell (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
}

std::size_t Tiling::index(Cell c) const {
  if (!in_grid(c)) throw std::out_of_range("cell outside grid");
  return static_cast<std::size_t>(c.y) * n_ + c.x;
}

// -------------------------------------------------------------- TileGrid

TileGrid::TileGrid(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw StructuralError("grid size must be positive");
}

TileGrid::TileGrid(const Tiling& t) : TileGrid(t.n()) {
  for (const Tile& tile : t.tiles()) place(tile);
}

const Tile* TileGrid::tile_at(Cell c) const {
  if (!in_grid(c)) return nullptr;
  const auto& slot = cells_[index(c)];
  return slot ? &*slot : nullptr;
}

bool TileGrid::is_monomer_at(Cell c) const {
  const Tile* t = tile_at(c);
  return t != nullptr && t->is_monomer();
}

bool TileGrid::can_place(const Tile& t) const {
  const Cell a = t.anchor;
  const Cell b = t.other();
  return in_grid(a) && in_grid(b) && !covered(a) && !covered(b);
}

void TileGrid::place(const Tile& t) {
  if (!can_place(t)) throw StructuralError("cannot place tile " + describe(t));
  cells_[index(t.anchor)] = t;
  cells_[index(t.other())] = t;
}

void TileGrid::remove(const Tile& t) {
  cells_[index(t.anchor)].reset();
  cells_[index(t.other())].reset();
}

bool TileGrid::violates_at(int x, int y) const {
  if (x < 1 || y < 1 || x >= n_ || y >= n_) return false;
  const Tile* q[4] = {tile_at({x - 1, y - 1}), tile_at({x, y - 1}), tile_at({x - 1, y}), tile_at({x, y})};
  for (const Tile* t : q) {
    if (t == nullptr) return false;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (q[i]->anchor == q[j]->anchor) return false;
    }
  }
  return true;
}

bool TileGrid::tatami_ok_around(Cell c) const {
  for (int dy = 0; dy <= 1; ++dy) {
    for (int dx = 0; dx <= 1; ++dx) {
      if (violates_at(c.x + dx, c.y + dy)) return false;
    }
  }
  return true;
}

Tiling TileGrid::to_tiling() const {
  std::vector<Tile> tiles;
  tiles.reserve(cells_.size());
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x) {
      const auto& slot = cells_[index({x, y})];
      if (!slot) throw StructuralError("incomplete grid");
      if (slot->anchor == Cell{x, y}) tiles.push_back(*slot);
    }
  }
  return Tiling(n_, std::move(tiles));
}

// ------------------------------------------------------------ operations

std::vector<TatamiViolation> validate_tatami(const Tiling& t) {
  std::vector<TatamiViolation> out;
  const int n = t.n();
  for (int y = 1; y < n; ++y) {
    for (int x = 1; x < n; ++x) {
      const std::size_t q[4] = {t.owner({x - 1, y - 1}), t.owner({x, y - 1}), t.owner({x - 1, y}), t.owner({x, y})};
      bool distinct = true;
      for (int i = 0; i < 4 && distinct; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (q[i] == q[j]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) out.push_back({{x, y}});
    }
  }
  return out;
}

bool is_tatami(const Tiling& t) { return validate_tatami(t).empty(); }

std::size_t monomer_count(std::span<const Tile> tiles) {
  return static_cast<std::size_t>(std::count_if(tiles.begin(), tiles.end(), [](const Tile& t) { return t.is_monomer(); }));
}

namespace {

Tile tile_from_cells(Cell a, Cell b) {
  if (a == b) return {TileKind::Monomer, a};
  const Cell lo = std::min(a, b, [](Cell p, Cell q) { return p.y != q.y ? p.y < q.y : p.x < q.x; });
  return {a.y == b.y ? TileKind::HDimer : TileKind::VDimer, lo};
}

template <typename CellMap>
Tiling map_cells(const Tiling& t, CellMap f) {
  std::vector<Tile> out;
  out.reserve(t.tiles().size());
  for (const Tile& tile : t.tiles()) out.push_back(tile_from_cells(f(tile.anchor), f(tile.other())));
  return Tiling(t.n(), std::move(out));
}

}  // namespace

Tiling rotate90(const Tiling& t) {
  const int n = t.n();
  return map_cells(t, [n](Cell c) { return Cell{n - 1 - c.y, c.x}; });
}

Tiling reflect(const Tiling& t) {
  const int n = t.n();
  return map_cells(t, [n](Cell c) { return Cell{n - 1 - c.x, c.y}; });
}

// ------------------------------------------------------------ text format

std::string encode(const Tiling& t) {
  std::string out = "tatami v1\nn " + std::to_string(t.n()) + "\n";
  for (const Tile& tile : t.tiles()) {
    out += describe(tile);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    const auto j = line.find(' ', i);
    const auto end = j == std::string_view::npos ? line.size() : j;
    fields.push_back(line.substr(i, end - i));
    i = end;
  }
  return fields;
}

int parse_int(std::string_view s, std::size_t line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Tiling decode(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "tatami v1") throw ParseError("line 1: expected 'tatami v1'");
  if (lines.size() < 2) throw ParseError("line 2: missing grid size");
  const auto header = split_fields(lines[1]);
  if (header.size() != 2 || header[0] != "n") throw ParseError("line 2: expected 'n <N>'");
  const int n = parse_int(header[1], 2);
  if (n < 1) throw ParseError("line 2: grid size must be positive");

  std::vector<Tile> tiles;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto f = split_fields(lines[i]);
    if (f.size() != 3 || f[0].size() != 1) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<M|H|V> x y'");
    }
    Tile t;
    switch (f[0][0]) {
      case 'M':
        t.kind = TileKind::Monomer;
        break;
      case 'H':
        t.kind = TileKind::HDimer;
        break;
      case 'V':
        t.kind = TileKind::VDimer;
        break;
      default:
        throw ParseError("line " + std::to_string(line_no) + ": unknown tile kind '" + std::string(f[0]) + "'");
    }
    t.anchor = {parse_int(f[1], line_no), parse_int(f[2], line_no)};
    tiles.push_back(t);
  }
  return Tiling(n, std::move(tiles));
}

std::size_t TilingHash::operator()(const Tiling& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.n());
  for (const Tile& tile : t.tiles()) {
    const std::size_t v = (static_cast<std::size_t>(tile.anchor.y) << 20) ^ (static_cast<std::size_t>(tile.anchor.x) << 4) ^
                          static_cast<std::size_t>(tile.kind);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace tatami
