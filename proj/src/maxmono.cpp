#include "tatami/maxmono.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tatami::maxmono {

namespace {

bool is_left(Tag t) { return t == Tag::LDown || t == Tag::LUp; }
bool is_right(Tag t) { return t == Tag::RDown || t == Tag::RUp; }
bool is_top(Tag t) { return t == Tag::TLeft || t == Tag::TRight; }
bool even_tag(Tag t) { return is_left(t) || is_right(t); }

// 0 for the L/To word, 1 for the R/Bo word.
int word_of(Tag t) { return (is_left(t) || is_top(t)) ? 0 : 1; }

void require_grid(int n) {
  if (n < 2) throw DomainError("n-monomer structure needs n >= 2, got " + std::to_string(n));
}

void require_valid(int n, DiagonalId id) {
  if (!is_valid(n, id)) throw DomainError("diagonal " + to_string(id) + " is not valid for n=" + std::to_string(n));
}

Tag tag_for(int word, int sign, bool even) {
  if (even) {
    if (word == 0) return sign < 0 ? Tag::LDown : Tag::LUp;
    return sign < 0 ? Tag::RDown : Tag::RUp;
  }
  if (word == 0) return sign < 0 ? Tag::TLeft : Tag::TRight;
  return sign < 0 ? Tag::BLeft : Tag::BRight;
}

std::vector<DiagonalId> all_diagonals(int n) {
  std::vector<DiagonalId> out;
  const auto [a, b] = side_lengths(n);
  const bool even = n % 2 == 0;
  for (int word = 0; word < 2; ++word) {
    for (int i = 0; i < (word == 0 ? a : b); ++i) {
      for (int sign : {-1, 1}) out.push_back({tag_for(word, sign, even), i});
    }
  }
  return out;
}

void sort_by_length(int n, std::vector<DiagonalId>& ids) {
  std::sort(ids.begin(), ids.end(), [n](DiagonalId a, DiagonalId b) {
    const int la = diagonal_length(n, a);
    const int lb = diagonal_length(n, b);
    if (la != lb) return la > lb;
    return a < b;
  });
}

bool contains(const std::vector<DiagonalId>& ids, DiagonalId id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

std::string to_string(DiagonalId id) {
  static const char* const names[] = {"ℓ↓", "ℓ↑", "r↓", "r↑", "t←", "t→", "b←", "b→"};
  return names[static_cast<int>(id.tag)] + std::to_string(id.index);
}

std::string to_string(const ClassId& c) { return c ? to_string(*c) : std::string("∅"); }

ConflictError::ConflictError(DiagonalId a, DiagonalId b)
    : DomainError("conflicting flips " + to_string(a) + " and " + to_string(b)), first(a), second(b) {}

std::pair<int, int> side_lengths(int n) {
  require_grid(n);
  if (n % 2 == 0) return {(n - 2) / 2, (n - 2) / 2};
  return {(n - 3) / 2, (n - 1) / 2};
}

bool is_valid(int n, DiagonalId id) {
  if (n < 2 || id.index < 0) return false;
  if (even_tag(id.tag) != (n % 2 == 0)) return false;
  const auto [a, b] = side_lengths(n);
  return id.index < (word_of(id.tag) == 0 ? a : b);
}

DiagonalId complement(DiagonalId id) {
  static const Tag other[] = {Tag::LUp, Tag::LDown, Tag::RUp, Tag::RDown, Tag::TRight, Tag::TLeft, Tag::BRight, Tag::BLeft};
  return {other[static_cast<int>(id.tag)], id.index};
}

int flip_sign(DiagonalId id) {
  switch (id.tag) {
    case Tag::LDown:
    case Tag::RDown:
    case Tag::TLeft:
    case Tag::BLeft:
      return -1;
    default:
      return 1;
  }
}

bool same_monomer(DiagonalId a, DiagonalId b) { return a.index == b.index && word_of(a.tag) == word_of(b.tag) && even_tag(a.tag) == even_tag(b.tag); }

int diagonal_length(int n, DiagonalId id) {
  require_valid(n, id);
  const int i = id.index;
  switch (id.tag) {
    case Tag::LDown:
    case Tag::RDown:
    case Tag::BLeft:
      return 2 * i + 1;
    case Tag::LUp:
    case Tag::RUp:
    case Tag::BRight:
      return n - 2 * i - 2;
    case Tag::TLeft:
      return 2 * i + 2;
    case Tag::TRight:
      return n - 2 * i - 3;
  }
  return 0;
}

namespace {

Cell home_cell(int n, DiagonalId id) {
  const int i = id.index;
  if (is_left(id.tag)) return {0, 2 * i + 1};
  if (is_right(id.tag)) return {n - 1, 2 * i + 1};
  if (is_top(id.tag)) return {2 * i + 2, n - 1};
  return {2 * i + 1, 0};
}

Cell heading_of(Tag t) {
  switch (t) {
    case Tag::LDown:
      return {1, -1};
    case Tag::LUp:
      return {1, 1};
    case Tag::RDown:
      return {-1, -1};
    case Tag::RUp:
      return {-1, 1};
    case Tag::TLeft:
      return {-1, -1};
    case Tag::TRight:
      return {1, -1};
    case Tag::BLeft:
      return {-1, 1};
    case Tag::BRight:
      return {1, 1};
  }
  return {0, 0};
}

}  // namespace

Diagonal geometry(int n, DiagonalId id) {
  require_valid(n, id);
  const auto d = make_diagonal(n, home_cell(n, id), heading_of(id.tag));
  if (!d || d->length != diagonal_length(n, id)) throw std::logic_error("diagonal geometry mismatch for " + to_string(id));
  return *d;
}

bool conflicts(int n, DiagonalId a, DiagonalId b) {
  require_valid(n, a);
  require_valid(n, b);
  if (same_monomer(a, b)) return true;
  if (word_of(a.tag) == word_of(b.tag)) {
    // Same side: conflict iff the lower-indexed monomer flips toward the
    // higher one and vice versa.
    const DiagonalId lo = a.index < b.index ? a : b;
    const DiagonalId hi = a.index < b.index ? b : a;
    return flip_sign(lo) > 0 && flip_sign(hi) < 0;
  }
  if (flip_sign(a) != flip_sign(b)) return false;
  return diagonal_length(n, a) + diagonal_length(n, b) >= n;
}

// ------------------------------------------------------------ representation

TernaryRep TernaryRep::zero(int n) {
  const auto [a, b] = side_lengths(n);
  return {n, std::vector<int>(static_cast<std::size_t>(a), 0), std::vector<int>(static_cast<std::size_t>(b), 0)};
}

int TernaryRep::symbol(DiagonalId id) const {
  const auto& word = word_of(id.tag) == 0 ? first : second;
  return word.at(static_cast<std::size_t>(id.index));
}

void TernaryRep::set(DiagonalId id, int value) {
  auto& word = word_of(id.tag) == 0 ? first : second;
  word.at(static_cast<std::size_t>(id.index)) = value;
}

std::vector<DiagonalId> TernaryRep::flipped() const {
  std::vector<DiagonalId> out;
  const bool even = n % 2 == 0;
  for (int word = 0; word < 2; ++word) {
    const auto& w = word == 0 ? first : second;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) out.push_back({tag_for(word, w[i], even), static_cast<int>(i)});
    }
  }
  return out;
}

std::string format_rep(const TernaryRep& rep) {
  auto word = [](const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(w[i]);
    }
    return s + ")";
  };
  return word(rep.first) + "·" + word(rep.second);
}

TernaryRep parse_rep(int n, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += ch;
  }
  auto parse_word = [&](std::size_t& pos) {
    std::vector<int> w;
    if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '(' in ternary representation");
    ++pos;
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
      return w;
    }
    while (true) {
      int sign = 1;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) sign = s[pos++] == '-' ? -1 : 1;
      if (pos >= s.size() || s[pos] < '0' || s[pos] > '1') throw ParseError("ternary symbols must be -1, 0 or 1");
      const int v = sign * (s[pos++] - '0');
      w.push_back(v);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return w;
      }
      throw ParseError("expected ',' or ')' in ternary representation");
    }
  };
  std::size_t pos = 0;
  TernaryRep rep = TernaryRep::zero(n);
  rep.first = parse_word(pos);
  static const std::string dot = "·";
  if (s.compare(pos, dot.size(), dot) == 0) {
    pos += dot.size();
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
  } else {
    throw ParseError("expected '·' between the two words");
  }
  rep.second = parse_word(pos);
  if (pos != s.size()) throw ParseError("trailing text after ternary representation");
  const auto [a, b] = side_lengths(n);
  if (rep.first.size() != static_cast<std::size_t>(a) || rep.second.size() != static_cast<std::size_t>(b)) {
    throw ParseError("word lengths do not match n=" + std::to_string(n));
  }
  return rep;
}

Tiling trivial_tiling(int n) {
  require_grid(n);
  std::vector<Tile> tiles;
  if (n % 2 == 0) {
    for (int y = 0; y < n; ++y) {
      if (y % 2 == 1) {
        tiles.push_back({TileKind::Monomer, {0, y}});
        for (int x = 1; x + 1 < n - 1; x += 2) tiles.push_back({TileKind::HDimer, {x, y}});
        tiles.push_back({TileKind::Monomer, {n - 1, y}});
      } else {
        for (int x = 0; x < n; x += 2) tiles.push_back({TileKind::HDimer, {x, y}});
      }
    }
  } else {
    for (int x = 0; x < n; ++x) {
      if (x % 2 == 0) {
        for (int y = 0; y + 1 < n; y += 2) tiles.push_back({TileKind::VDimer, {x, y}});
        tiles.push_back({TileKind::Monomer, {x, n - 1}});
      } else {
        tiles.push_back({TileKind::Monomer, {x, 0}});
        for (int y = 1; y < n; y += 2) tiles.push_back({TileKind::VDimer, {x, y}});
      }
    }
  }
  return Tiling(n, std::move(tiles));
}

Tiling decode(const TernaryRep& rep) {
  const int n = rep.n;
  const auto [a, b] = side_lengths(n);
  if (rep.first.size() != static_cast<std::size_t>(a) || rep.second.size() != static_cast<std::size_t>(b)) {
    throw DomainError("representation word lengths do not match n=" + std::to_string(n));
  }
  for (const auto* w : {&rep.first, &rep.second}) {
    for (int v : *w) {
      if (v < -1 || v > 1) throw DomainError("ternary symbols must be -1, 0 or 1");
    }
  }
  const auto flips = rep.flipped();
  for (std::size_t i = 0; i < flips.size(); ++i) {
    for (std::size_t j = i + 1; j < flips.size(); ++j) {
      if (conflicts(n, flips[i], flips[j])) throw ConflictError(flips[i], flips[j]);
    }
  }
  TileGrid g(trivial_tiling(n));
  for (DiagonalId id : flips) apply_flip(g, geometry(n, id));
  return g.to_tiling();
}

TernaryRep encode_rep(const Tiling& t) {
  const int n = t.n();
  require_grid(n);
  const TileGrid g(t);
  TernaryRep rep = TernaryRep::zero(n);
  for (DiagonalId down : all_diagonals(n)) {
    if (flip_sign(down) > 0) continue;
    const Diagonal dn = geometry(n, down);
    if (g.is_monomer_at(dn.monomer)) continue;
    int symbol = 0;
    for (DiagonalId id : {down, complement(down)}) {
      const Diagonal d = geometry(n, id);
      if (diagonal_present(g, d.reversed())) {
        symbol = flip_sign(id);
        break;
      }
    }
    if (symbol == 0) throw StructuralError("tiling is not in the fixed-corner n-monomer family");
    rep.set(down, symbol);
  }
  try {
    if (decode(rep) != t) throw StructuralError("tiling is not in the fixed-corner n-monomer family");
  } catch (const ConflictError&) {
    throw StructuralError("tiling is not in the fixed-corner n-monomer family");
  }
  return rep;
}

// ------------------------------------------------------------------ classes

std::vector<DiagonalId> class_diagonals(int n) {
  std::vector<DiagonalId> out;
  for (DiagonalId id : all_diagonals(n)) {
    if (diagonal_length(n, id) >= diagonal_length(n, complement(id))) out.push_back(id);
  }
  sort_by_length(n, out);
  return out;
}

std::vector<DiagonalId> available_diagonals(int n, const ClassId& c) {
  std::vector<DiagonalId> out;
  if (!c) {
    for (DiagonalId b : all_diagonals(n)) {
      if (diagonal_length(n, b) < diagonal_length(n, complement(b))) out.push_back(b);
    }
  } else {
    const DiagonalId a = *c;
    if (!contains(class_diagonals(n), a)) throw DomainError(to_string(a) + " does not label a class for n=" + std::to_string(n));
    const int len = diagonal_length(n, a);
    for (DiagonalId b : all_diagonals(n)) {
      if (!same_monomer(a, b) && diagonal_length(n, b) < len && !conflicts(n, a, b)) out.push_back(b);
    }
  }
  sort_by_length(n, out);
  return out;
}

ClassId class_of(const TernaryRep& rep) {
  const int n = rep.n;
  const auto flips = rep.flipped();
  const auto A = class_diagonals(n);
  std::optional<DiagonalId> longest;
  for (DiagonalId id : flips) {
    if (!longest || diagonal_length(n, id) > diagonal_length(n, *longest)) longest = id;
  }
  if (longest && contains(A, *longest)) return longest;
  return std::nullopt;
}

std::vector<ClassSummary> class_summary(int n) {
  std::vector<ClassSummary> out;
  for (DiagonalId a : class_diagonals(n)) out.push_back({a, available_diagonals(n, a).size()});
  out.push_back({std::nullopt, available_diagonals(n, std::nullopt).size()});
  return out;
}

// --------------------------------------------------------------- generation

namespace {

// Trivial tiling plus ternary state; every change is a single flip.
class Walker {
 public:
  explicit Walker(int n) : n_(n), grid_(trivial_tiling(n)), rep_(TernaryRep::zero(n)) {}

  FlipStep toggle(DiagonalId id) {
    const Diagonal d = geometry(n_, id);
    const int before = rep_.symbol(id);
    if (before == 0) {
      apply_flip(grid_, d);
      rep_.set(id, flip_sign(id));
    } else if (before == flip_sign(id)) {
      apply_flip(grid_, d.reversed());
      rep_.set(id, 0);
    } else {
      throw std::logic_error("toggle of " + to_string(id) + " while its monomer is flipped the other way");
    }
    ++stats_.flips;
    return {id, before, rep_.symbol(id)};
  }

  void emit(const RepSink& sink) {
    ++stats_.tilings;
    sink(grid_.to_tiling(), rep_);
  }

  void emit(const GraySink& sink, const std::optional<FlipStep>& step) {
    ++stats_.tilings;
    sink(grid_.to_tiling(), rep_, step);
  }

  const GenerationStats& stats() const { return stats_; }

 private:
  int n_;
  TileGrid grid_;
  TernaryRep rep_;
  GenerationStats stats_;
};

// Bit order for a class's Gray code: `leading` (if any) takes the most
// significant bit, the rest follow by descending length.
std::vector<DiagonalId> bit_order(std::vector<DiagonalId> avail, std::optional<DiagonalId> leading) {
  if (leading) {
    const auto it = std::find(avail.begin(), avail.end(), *leading);
    if (it == avail.end()) throw std::logic_error("leading diagonal " + to_string(*leading) + " is not available");
    std::rotate(avail.begin(), it, it + 1);
  }
  return avail;
}

// Diagonal for bit position p (0 = least significant) of a k-bit word.
DiagonalId at_bit(const std::vector<DiagonalId>& order, unsigned p) { return order[order.size() - 1 - p]; }

void require_subset_width(const std::vector<DiagonalId>& order) {
  if (order.size() >= 63) throw DomainError("class too large to enumerate");
}

// Walks words 1 .. 2^k - 1 of the reflected Gray code, calling step(p) for
// the bit flipped into each.
template <typename Step>
void gray_forward(std::size_t k, Step step) {
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < count; ++i) step(static_cast<unsigned>(std::countr_zero(i)));
}

template <typename Step>
void gray_backward(std::size_t k, Step step) {
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = count - 1; i >= 1; --i) step(static_cast<unsigned>(std::countr_zero(i)));
}

}  // namespace

GenerationStats generate_class(int n, const ClassId& c, const RepSink& sink) {
  const auto order = available_diagonals(n, c);
  require_subset_width(order);
  Walker w(n);
  if (c) w.toggle(*c);
  w.emit(sink);
  gray_forward(order.size(), [&](unsigned p) {
    w.toggle(at_bit(order, p));
    w.emit(sink);
  });
  return w.stats();
}

std::vector<ClassPart> fixed_corner_parts(int n) {
  std::vector<ClassPart> parts;
  for (DiagonalId a : class_diagonals(n)) parts.push_back({a, std::nullopt, false});
  const auto empty_avail = available_diagonals(n, std::nullopt);
  if (n % 2 == 0 && !empty_avail.empty()) {
    const DiagonalId pivot = *std::min_element(empty_avail.begin(), empty_avail.end());
    parts.push_back({std::nullopt, pivot, false});
    parts.push_back({std::nullopt, pivot, true});
  } else {
    parts.push_back({std::nullopt, std::nullopt, false});
  }
  return parts;
}

GenerationStats generate_part(int n, const ClassPart& part, const RepSink& sink) {
  if (!part.split_on) return generate_class(n, part.cls, sink);
  auto order = available_diagonals(n, part.cls);
  const auto it = std::find(order.begin(), order.end(), *part.split_on);
  if (it == order.end()) throw DomainError("split diagonal is not available in the class");
  order.erase(it);
  require_subset_width(order);
  Walker w(n);
  if (part.cls) w.toggle(*part.cls);
  if (part.split_flipped) w.toggle(*part.split_on);
  w.emit(sink);
  gray_forward(order.size(), [&](unsigned p) {
    w.toggle(at_bit(order, p));
    w.emit(sink);
  });
  return w.stats();
}

GenerationStats generate_fixed_corner(int n, const RepSink& sink) {
  GenerationStats total;
  std::vector<ClassId> classes;
  for (DiagonalId a : class_diagonals(n)) classes.push_back(a);
  classes.push_back(std::nullopt);
  for (const ClassId& c : classes) {
    const auto s = generate_class(n, c, sink);
    total.tilings += s.tilings;
    total.flips += s.flips;
  }
  return total;
}

GenerationStats generate_all_max(int n, const TilingSink& sink) {
  GenerationStats total;
  // Each part is regenerated once per rotation instead of being buffered.
  for (const ClassPart& part : fixed_corner_parts(n)) {
    for (int r = 0; r < 4; ++r) {
      const auto s = generate_part(n, part, [&](const Tiling& t, const TernaryRep&) {
        Tiling out = t;
        for (int k = 0; k < r; ++k) out = rotate90(out);
        sink(out);
      });
      total.tilings += s.tilings;
      total.flips += s.flips;
    }
  }
  return total;
}

// ---------------------------------------------------------------- Gray code

std::vector<ClassId> gray_class_order(int n) {
  require_grid(n);
  if (n % 2 != 0) throw DomainError("the Gray code order is defined for even n only");
  std::vector<DiagonalId> first_chain, second_chain;
  for (DiagonalId a : class_diagonals(n)) {
    const bool first = a.tag == Tag::LUp || a.tag == Tag::RDown;
    (first ? first_chain : second_chain).push_back(a);
  }
  // class_diagonals is already sorted by descending length.
  std::vector<ClassId> order(first_chain.begin(), first_chain.end());
  order.push_back(std::nullopt);
  order.insert(order.end(), second_chain.begin(), second_chain.end());
  return order;
}

GenerationStats gray_generate(int n, const GraySink& sink) {
  const auto order = gray_class_order(n);
  const auto empty_avail = available_diagonals(n, std::nullopt);
  Walker w(n);

  // Entering the empty class from class a happens by unflipping a, which
  // leaves a's leading diagonal flipped; that diagonal must also lead the
  // empty class, whose code is then run backwards to the trivial tiling.
  std::optional<DiagonalId> bridge;

  if (order.front()) w.toggle(*order.front());
  w.emit(sink, std::nullopt);

  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const ClassId& cls = order[idx];
    const ClassId next = idx + 1 < order.size() ? order[idx + 1] : ClassId{};
    const bool has_next = idx + 1 < order.size();
    const auto avail = available_diagonals(n, cls);
    require_subset_width(avail);

    if (cls) {
      std::optional<DiagonalId> leading;
      if (has_next && next) {
        leading = *next;
      } else if (has_next) {
        for (DiagonalId d : avail) {
          if (contains(empty_avail, d)) {
            leading = d;
            break;
          }
        }
        if (!leading) throw std::logic_error("no diagonal bridges " + to_string(cls) + " to the empty class");
        bridge = leading;
      }
      const auto bits = bit_order(avail, leading);
      gray_forward(bits.size(), [&](unsigned p) {
        const FlipStep s = w.toggle(at_bit(bits, p));
        w.emit(sink, s);
      });
      if (has_next) {
        const FlipStep s = w.toggle(*cls);
        w.emit(sink, s);
      }
    } else {
      const auto bits = bit_order(avail, bridge);
      if (bridge) {
        gray_backward(bits.size(), [&](unsigned p) {
          const FlipStep s = w.toggle(at_bit(bits, p));
          w.emit(sink, s);
        });
      } else {
        gray_forward(bits.size(), [&](unsigned p) {
          const FlipStep s = w.toggle(at_bit(bits, p));
          w.emit(sink, s);
        });
      }
      if (has_next) {
        if (bridge && !next) throw std::logic_error("empty class cannot be followed by itself");
        const FlipStep s = w.toggle(*next);
        w.emit(sink, s);
      }
    }
  }
  return w.stats();
}

}  // namespace tatami::maxmono
