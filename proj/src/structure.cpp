#include "tatami/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace tatami {

// ---------------------------------------------------------------- features

std::string to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::HBidimer:
      return "HBidimer";
    case FeatureKind::VBidimer:
      return "VBidimer";
    case FeatureKind::CcwVortex:
      return "CcwVortex";
    case FeatureKind::CwVortex:
      return "CwVortex";
    case FeatureKind::Loner:
      return "Loner";
    case FeatureKind::Vee:
      return "Vee";
  }
  return "?";
}

namespace {

std::string half_string(int v2) {
  return v2 % 2 == 0 ? std::to_string(v2 / 2) : std::to_string(v2 / 2) + ".5";
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Bottom:
      return "bottom";
    case Side::Right:
      return "right";
    case Side::Top:
      return "top";
    case Side::Left:
      return "left";
  }
  return "?";
}

}  // namespace

std::string to_string(const Feature& f) {
  std::string out = to_string(f.kind) + " (" + half_string(f.center.x2) + ", " + half_string(f.center.y2) + ")";
  if (f.side) out += std::string(" ") + side_name(*f.side);
  return out;
}

Feature Feature::bidimer(bool vertical, int x, int y) {
  return {vertical ? FeatureKind::VBidimer : FeatureKind::HBidimer, {2 * x, 2 * y}, std::nullopt};
}

Feature Feature::vortex(bool clockwise, Cell c) {
  return {clockwise ? FeatureKind::CwVortex : FeatureKind::CcwVortex, {2 * c.x + 1, 2 * c.y + 1}, std::nullopt};
}

std::vector<Tile> source_tiles(const Feature& f) {
  const int x2 = f.center.x2;
  const int y2 = f.center.y2;
  switch (f.kind) {
    case FeatureKind::VBidimer: {
      const int x = x2 / 2, y = y2 / 2;
      return {{TileKind::VDimer, {x - 1, y - 1}}, {TileKind::VDimer, {x, y - 1}}};
    }
    case FeatureKind::HBidimer: {
      const int x = x2 / 2, y = y2 / 2;
      return {{TileKind::HDimer, {x - 1, y - 1}}, {TileKind::HDimer, {x - 1, y}}};
    }
    case FeatureKind::CwVortex: {
      // Each arm runs clockwise: top arm to the right, right arm downward.
      const int cx = (x2 - 1) / 2, cy = (y2 - 1) / 2;
      return {{TileKind::Monomer, {cx, cy}},
              {TileKind::HDimer, {cx, cy + 1}},
              {TileKind::VDimer, {cx + 1, cy - 1}},
              {TileKind::HDimer, {cx - 1, cy - 1}},
              {TileKind::VDimer, {cx - 1, cy}}};
    }
    case FeatureKind::CcwVortex: {
      const int cx = (x2 - 1) / 2, cy = (y2 - 1) / 2;
      return {{TileKind::Monomer, {cx, cy}},
              {TileKind::HDimer, {cx - 1, cy + 1}},
              {TileKind::VDimer, {cx - 1, cy - 1}},
              {TileKind::HDimer, {cx, cy - 1}},
              {TileKind::VDimer, {cx + 1, cy}}};
    }
    case FeatureKind::Loner:
      return {{TileKind::Monomer, {(x2 - 1) / 2, (y2 - 1) / 2}}};
    case FeatureKind::Vee: {
      // Two monomers either side of the centre along the boundary.
      if (f.side == Side::Bottom || f.side == Side::Top) {
        const int y = (y2 - 1) / 2;
        return {{TileKind::Monomer, {x2 / 2 - 1, y}}, {TileKind::Monomer, {x2 / 2, y}}};
      }
      const int x = (x2 - 1) / 2;
      return {{TileKind::Monomer, {x, y2 / 2 - 1}}, {TileKind::Monomer, {x, y2 / 2}}};
    }
  }
  return {};
}

// --------------------------------------------------------------- diagonals

Diagonal Diagonal::reversed() const { return {far_end(), Cell{-heading.x, -heading.y}, length, !vertical_first}; }

std::vector<Cell> Diagonal::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(2 * length + 1));
  const Cell step = first_step();
  for (int k = 0; k <= length; ++k) {
    const Cell c = monomer + k * heading;
    out.push_back(c);
    if (k < length) out.push_back(c + step);
  }
  return out;
}

std::optional<Diagonal> make_diagonal(int n, Cell m, Cell heading) {
  if (std::abs(heading.x) != 1 || std::abs(heading.y) != 1) return std::nullopt;
  if (m.x < 0 || m.y < 0 || m.x >= n || m.y >= n) return std::nullopt;
  const bool on_lr = m.x == 0 || m.x == n - 1;
  const bool on_bt = m.y == 0 || m.y == n - 1;
  if (on_lr == on_bt) return std::nullopt;  // interior cell or corner
  if (on_lr) {
    if ((m.x == 0) != (heading.x > 0)) return std::nullopt;
    const int len = heading.y > 0 ? n - 1 - m.y : m.y;
    return Diagonal{m, heading, len, true};
  }
  if ((m.y == 0) != (heading.y > 0)) return std::nullopt;
  const int len = heading.x > 0 ? n - 1 - m.x : m.x;
  return Diagonal{m, heading, len, false};
}

bool diagonal_present(const TileGrid& g, const Diagonal& d) {
  if (!g.is_monomer_at(d.monomer)) return false;
  const Cell step = d.first_step();
  for (int k = 1; k <= d.length; ++k) {
    const Cell b = d.monomer + k * d.heading;
    const Cell a = b - (d.heading - step);  // c_{2k-1}
    const Tile* t = g.tile_at(a);
    if (t == nullptr || t->is_monomer() || !t->covers(b)) return false;
  }
  return true;
}

namespace {

Tile tile_over(Cell a, Cell b) {
  if (a.y == b.y) return {TileKind::HDimer, {std::min(a.x, b.x), a.y}};
  return {TileKind::VDimer, {a.x, std::min(a.y, b.y)}};
}

bool tatami_ok_along(const TileGrid& g, const Diagonal& d) {
  for (Cell c : d.cells()) {
    if (!g.tatami_ok_around(c)) return false;
  }
  return true;
}

}  // namespace

void apply_flip(TileGrid& g, const Diagonal& d) {
  const auto cells = d.cells();
  g.remove({TileKind::Monomer, cells.front()});
  for (std::size_t k = 1; k + 1 < cells.size(); k += 2) g.remove(tile_over(cells[k], cells[k + 1]));
  for (std::size_t k = 0; k + 1 < cells.size(); k += 2) g.place(tile_over(cells[k], cells[k + 1]));
  g.place({TileKind::Monomer, cells.back()});
}

Tiling flip_diagonal(const Tiling& t, const Diagonal& d) {
  TileGrid g(t);
  if (!diagonal_present(g, d)) throw StructuralError("diagonal not present in tiling");
  apply_flip(g, d);
  if (!tatami_ok_along(g, d)) throw StructuralError("flip would violate the tatami condition");
  return g.to_tiling();
}

std::vector<Diagonal> find_flippable_diagonals(const Tiling& t) {
  const int n = t.n();
  TileGrid g(t);
  std::vector<Diagonal> out;
  for (const Tile& tile : t.tiles()) {
    if (!tile.is_monomer()) continue;
    for (int hx : {-1, 1}) {
      for (int hy : {-1, 1}) {
        const auto d = make_diagonal(n, tile.anchor, {hx, hy});
        if (!d || !diagonal_present(g, *d)) continue;
        apply_flip(g, *d);
        const bool ok = tatami_ok_along(g, *d);
        apply_flip(g, d->reversed());
        if (ok) out.push_back(*d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- X cross

XCross::Wedge XCross::wedge_of(Cell c) const {
  const int u = 2 * c.x + 1 - center.x2;
  const int v = 2 * c.y + 1 - center.y2;
  if (std::abs(u) == std::abs(v)) return Wedge::OnArm;
  if (v > std::abs(u)) return Wedge::Top;
  if (-v > std::abs(u)) return Wedge::Bottom;
  return u > 0 ? Wedge::Right : Wedge::Left;
}

XCross x_cross(int n, HalfPoint c) {
  const int n2 = 2 * n;
  const int ll = std::min(c.x2, c.y2);
  const int lr = std::min(n2 - c.x2, c.y2);
  const int ur = std::min(n2 - c.x2, n2 - c.y2);
  const int ul = std::min(c.x2, n2 - c.y2);
  return {n,
          c,
          {HalfPoint{c.x2 - ll, c.y2 - ll}, HalfPoint{c.x2 + lr, c.y2 - lr}, HalfPoint{c.x2 + ur, c.y2 + ur},
           HalfPoint{c.x2 - ul, c.y2 + ul}}};
}

HalfPoint canonical_position(int n, HalfPoint c) {
  const int dx = std::min(c.x2, 2 * n - c.x2);
  const int dy = std::min(c.y2, 2 * n - c.y2);
  return {std::max(dx, dy), std::min(dx, dy)};
}

int predicted_monomer_count(int n, const Feature& f) {
  const HalfPoint p = canonical_position(n, f.center);
  if (f.is_bidimer()) return n - p.y2;
  if (f.is_vortex()) return n - p.y2 + 1;
  throw DomainError("monomer prediction applies to bidimers and vortices only");
}

int predicted_diagonal_count(int n, const Feature& f) {
  if (!f.is_bidimer() && !f.is_vortex()) throw DomainError("diagonal prediction applies to bidimers and vortices only");
  const HalfPoint p = canonical_position(n, f.center);
  if (p.y2 < p.x2) return n - p.y2 - 2;
  if (p.x2 < n) return n - p.y2 - 1;
  return 0;
}

// ------------------------------------------------------------ construction

namespace {

void require_placeable(int n, const Feature& f) {
  if (!f.is_bidimer() && !f.is_vortex()) {
    throw DomainError("only bidimers and vortices can be placed, got " + to_string(f.kind));
  }
  const auto [x2, y2] = f.center;
  if (f.is_bidimer()) {
    if (x2 % 2 != 0 || y2 % 2 != 0) throw DomainError("bidimer centre must be a lattice point");
    if (x2 < 2 || y2 < 2 || x2 > 2 * n - 2 || y2 > 2 * n - 2) throw DomainError("bidimer does not fit: " + to_string(f));
  } else {
    if (x2 % 2 == 0 || y2 % 2 == 0) throw DomainError("vortex centre must be a cell centre");
    if (x2 < 3 || y2 < 3 || x2 > 2 * n - 3 || y2 > 2 * n - 3) throw DomainError("vortex does not fit: " + to_string(f));
  }
}

// Completes the source tiles with running bond: horizontal dimers may not
// enter the left/right wedges, vertical dimers may not enter the top/bottom
// wedges, monomers sit on the boundary. The orientation is the same for
// every bidimer and vortex; a quarter turn swaps both wedges and dimers.
class WedgeFill {
 public:
  WedgeFill(int n, const Feature& f) : n_(n), grid_(n), cross_(x_cross(n, f.center)), target_(predicted_monomer_count(n, f)) {
    for (const Tile& t : source_tiles(f)) {
      grid_.place(t);
      if (t.is_monomer()) ++placed_monomers_;
    }
  }

  /// Solutions found, stopping at two.
  std::vector<Tiling> run() {
    extend(0, placed_monomers_);
    return std::move(solutions_);
  }

 private:
  bool horizontal_wedge(Cell c) const {
    const auto w = cross_.wedge_of(c);
    return w == XCross::Wedge::Top || w == XCross::Wedge::Bottom;
  }
  bool vertical_wedge(Cell c) const {
    return cross_.wedge_of(c) != XCross::Wedge::OnArm && !horizontal_wedge(c);
  }
  bool on_boundary(Cell c) const { return c.x == 0 || c.y == 0 || c.x == n_ - 1 || c.y == n_ - 1; }

  bool allowed(const Tile& t) const {
    switch (t.kind) {
      case TileKind::Monomer:
        return on_boundary(t.anchor);
      case TileKind::HDimer:
        return !vertical_wedge(t.anchor) && !vertical_wedge(t.other());
      case TileKind::VDimer:
        return !horizontal_wedge(t.anchor) && !horizontal_wedge(t.other());
    }
    return false;
  }

  void extend(int cursor, int monomers) {
    if (solutions_.size() >= 2) return;
    while (cursor < n_ * n_ && grid_.covered({cursor % n_, cursor / n_})) ++cursor;
    if (cursor == n_ * n_) {
      if (monomers == target_) solutions_.push_back(grid_.to_tiling());
      return;
    }
    const Cell c{cursor % n_, cursor / n_};
    for (TileKind kind : {TileKind::Monomer, TileKind::HDimer, TileKind::VDimer}) {
      const Tile t{kind, c};
      const int m = monomers + (t.is_monomer() ? 1 : 0);
      if (m > target_ || !grid_.can_place(t) || !allowed(t)) continue;
      grid_.place(t);
      if (grid_.tatami_ok_around(t.anchor) && grid_.tatami_ok_around(t.other())) extend(cursor + 1, m);
      grid_.remove(t);
    }
  }

  int n_;
  TileGrid grid_;
  XCross cross_;
  int target_;
  int placed_monomers_ = 0;
  std::vector<Tiling> solutions_;
};

}  // namespace

Tiling place_feature(int n, const Feature& f) {
  require_placeable(n, f);
  auto solutions = WedgeFill(n, f).run();
  if (solutions.size() != 1) {
    throw std::logic_error("wedge fill for " + to_string(f) + " on n=" + std::to_string(n) + " found " +
                           std::to_string(solutions.size()) + " completions, expected exactly one");
  }
  return std::move(solutions.front());
}

FeatureFamily feature_family(int n, const Feature& f) {
  Tiling base = place_feature(n, f);
  auto diagonals = find_flippable_diagonals(base);
  return {std::move(base), std::move(diagonals)};
}

void enumerate_with_feature(int n, const Feature& f, const TilingSink& sink) {
  const FeatureFamily family = feature_family(n, f);
  const auto& diags = family.diagonals;
  if (diags.size() >= 63) throw DomainError("too many diagonals to enumerate");
  TileGrid g(family.base);
  std::vector<bool> flipped(diags.size(), false);
  sink(family.base);
  const std::uint64_t count = std::uint64_t{1} << diags.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    apply_flip(g, flipped[bit] ? diags[bit].reversed() : diags[bit]);
    flipped[bit] = !flipped[bit];
    sink(g.to_tiling());
  }
}

namespace {

// Square ring with corner coordinates lo and hi, clockwise from (lo, lo).
std::vector<Cell> ring(int lo, int hi) {
  if (lo == hi) return {{lo, lo}};
  std::vector<Cell> out;
  for (int y = lo; y <= hi; ++y) out.push_back({lo, y});
  for (int x = lo + 1; x <= hi; ++x) out.push_back({x, hi});
  for (int y = hi - 1; y >= lo; --y) out.push_back({hi, y});
  for (int x = hi - 1; x > lo; --x) out.push_back({x, lo});
  return out;
}

}  // namespace

std::vector<Feature> feature_positions(int n, int m) {
  if (n < 1 || m < 0 || m >= n || (n - m) % 2 != 0) {
    throw DomainError("need 0 <= m < n with m = n (mod 2), got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::vector<Feature> out;
  const int k = (n - m) / 2;
  for (Cell p : ring(k, n - k)) {
    out.push_back(Feature::bidimer(false, p.x, p.y));
    out.push_back(Feature::bidimer(true, p.x, p.y));
  }
  if (m >= 1) {
    for (Cell c : ring(k, n - 1 - k)) {
      out.push_back(Feature::vortex(false, c));
      out.push_back(Feature::vortex(true, c));
    }
  }
  return out;
}

void enumerate_class(int n, int m, const TilingSink& sink) {
  for (const Feature& f : feature_positions(n, m)) enumerate_with_feature(n, f, sink);
}

// --------------------------------------------------------------- detection

namespace {

bool is_dimer(const Tile* t, TileKind kind, Cell anchor) { return t != nullptr && t->kind == kind && t->anchor == anchor; }

struct BoundaryFrame {
  Side side;
  Cell inward;
  Cell along;
};

std::optional<BoundaryFrame> frame_of(int n, Cell c) {
  const bool corner = (c.x == 0 || c.x == n - 1) && (c.y == 0 || c.y == n - 1);
  if (corner) return std::nullopt;
  if (c.y == 0) return BoundaryFrame{Side::Bottom, {0, 1}, {1, 0}};
  if (c.y == n - 1) return BoundaryFrame{Side::Top, {0, -1}, {1, 0}};
  if (c.x == 0) return BoundaryFrame{Side::Left, {1, 0}, {0, 1}};
  if (c.x == n - 1) return BoundaryFrame{Side::Right, {-1, 0}, {0, 1}};
  return std::nullopt;
}

}  // namespace

std::vector<Feature> detect_features(const Tiling& t) {
  const int n = t.n();
  const TileGrid g(t);
  std::vector<Feature> bidimers, vortices, vees, loners;

  for (int y = 1; y < n; ++y) {
    for (int x = 1; x < n; ++x) {
      if (is_dimer(g.tile_at({x - 1, y - 1}), TileKind::VDimer, {x - 1, y - 1}) &&
          is_dimer(g.tile_at({x, y - 1}), TileKind::VDimer, {x, y - 1})) {
        bidimers.push_back(Feature::bidimer(true, x, y));
      }
      if (is_dimer(g.tile_at({x - 1, y - 1}), TileKind::HDimer, {x - 1, y - 1}) &&
          is_dimer(g.tile_at({x - 1, y}), TileKind::HDimer, {x - 1, y})) {
        bidimers.push_back(Feature::bidimer(false, x, y));
      }
    }
  }

  for (int y = 1; y + 1 < n; ++y) {
    for (int x = 1; x + 1 < n; ++x) {
      if (!g.is_monomer_at({x, y})) continue;
      for (bool clockwise : {false, true}) {
        const Feature f = Feature::vortex(clockwise, {x, y});
        const auto src = source_tiles(f);
        const bool match = std::all_of(src.begin(), src.end(), [&](const Tile& s) {
          const Tile* here = g.tile_at(s.anchor);
          return here != nullptr && *here == s;
        });
        if (match) vortices.push_back(f);
      }
    }
  }

  std::vector<Cell> in_vee;
  for (const Tile& tile : t.tiles()) {
    if (!tile.is_monomer()) continue;
    const Cell p = tile.anchor;
    const auto fr = frame_of(n, p);
    if (!fr) continue;
    const Cell q = p + fr->along;
    if (!frame_of(n, q) || !g.is_monomer_at(q)) continue;
    const Tile* inner = g.tile_at(p + fr->inward);
    if (inner != nullptr && !inner->is_monomer() && inner->covers(q + fr->inward)) {
      vees.push_back({FeatureKind::Vee, {p.x + q.x + 1, p.y + q.y + 1}, fr->side});
      in_vee.push_back(p);
      in_vee.push_back(q);
    }
  }

  for (const Tile& tile : t.tiles()) {
    if (!tile.is_monomer()) continue;
    const Cell p = tile.anchor;
    const auto fr = frame_of(n, p);
    if (!fr || std::find(in_vee.begin(), in_vee.end(), p) != in_vee.end()) continue;
    const Tile* inner = g.tile_at(p + fr->inward);
    if (inner == nullptr || inner->is_monomer()) continue;
    const bool parallel = (inner->kind == TileKind::HDimer) == (fr->along.x != 0);
    if (parallel) loners.push_back({FeatureKind::Loner, {2 * p.x + 1, 2 * p.y + 1}, fr->side});
  }

  std::vector<Feature> out;
  for (auto* group : {&bidimers, &vortices, &vees, &loners}) out.insert(out.end(), group->begin(), group->end());
  return out;
}

}  // namespace tatami
