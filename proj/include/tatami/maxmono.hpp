#pragma once

// Tilings with the maximum number n of monomers.
//
// Every such tiling with monomers in both upper corners is the trivial
// running bond with a set of pairwise non-conflicting diagonals flipped,
// each non-corner monomer moving at most once. The flip status of each
// monomer is a ternary symbol (-1, 0, +1), and the tilings split into
// classes by their longest flipped diagonal.
//
// Even n: the trivial tiling is horizontal running bond; non-corner
// monomers sit at (0, 2i+1) and (n-1, 2i+1) and are flipped down (-1) or
// up (+1). Odd n: vertical running bond; non-corner monomers sit at
// (2i+2, n-1) on top and (2i+1, 0) on the bottom and are flipped left (-1)
// or right (+1).

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/core.hpp"
#include "tatami/structure.hpp"

namespace tatami::maxmono {

enum class Tag : std::uint8_t { LDown, LUp, RDown, RUp, TLeft, TRight, BLeft, BRight };

struct DiagonalId {
  Tag tag = Tag::LDown;
  int index = 0;
  friend constexpr auto operator<=>(const DiagonalId&, const DiagonalId&) = default;
};

std::string to_string(DiagonalId id);

/// Longest-flipped-diagonal label; nullopt is the empty class.
using ClassId = std::optional<DiagonalId>;

std::string to_string(const ClassId& c);

/// Thrown by decode for a representation that flips two conflicting
/// diagonals.
class ConflictError : public DomainError {
 public:
  ConflictError(DiagonalId a, DiagonalId b);
  DiagonalId first;
  DiagonalId second;
};

/// Number of non-corner monomers on each of the two sides: (L, R) for even
/// n, (top, bottom) for odd n.
std::pair<int, int> side_lengths(int n);

bool is_valid(int n, DiagonalId id);
/// The other diagonal of the same monomer.
DiagonalId complement(DiagonalId id);
/// Ternary symbol written when id is flipped: -1 down/left, +1 up/right.
int flip_sign(DiagonalId id);
bool same_monomer(DiagonalId a, DiagonalId b);

/// Number of dimers in the diagonal.
int diagonal_length(int n, DiagonalId id);
/// The diagonal's cells and heading in the trivial tiling.
Diagonal geometry(int n, DiagonalId id);

/// True iff a and b cannot both be flipped. Same monomer always conflicts;
/// same side flipped toward each other always conflicts; opposite sides
/// flipped in the same direction conflict iff their lengths sum to at
/// least n.
bool conflicts(int n, DiagonalId a, DiagonalId b);

struct TernaryRep {
  int n = 0;
  std::vector<int> first;   // L (even n) or To (odd n)
  std::vector<int> second;  // R (even n) or Bo (odd n)

  static TernaryRep zero(int n);
  /// Symbol of id's monomer.
  int symbol(DiagonalId id) const;
  void set(DiagonalId id, int value);
  /// Flipped diagonals in side order, left/top word first.
  std::vector<DiagonalId> flipped() const;

  friend bool operator==(const TernaryRep&, const TernaryRep&) = default;
};

/// "(a,b,...)·(c,d,...)" with signed digits. parse_rep also accepts '.'
/// as the separator.
std::string format_rep(const TernaryRep& rep);
TernaryRep parse_rep(int n, std::string_view text);

/// Running bond with monomers in both upper corners and n monomers in all.
Tiling trivial_tiling(int n);

/// Applies the flips of rep to the trivial tiling. Throws ConflictError if
/// two flipped diagonals conflict.
Tiling decode(const TernaryRep& rep);
/// Inverse of decode. Throws StructuralError for tilings outside the
/// fixed-corner family.
TernaryRep encode_rep(const Tiling& t);

/// A = {a : d(a) > d(complement a)} plus both diagonals of the odd-n middle
/// monomer, sorted by descending length then (tag, index).
std::vector<DiagonalId> class_diagonals(int n);

/// Diagonals that may be flipped freely inside class c, sorted by
/// descending length then (tag, index).
std::vector<DiagonalId> available_diagonals(int n, const ClassId& c);

/// Class of a tiling given its representation.
ClassId class_of(const TernaryRep& rep);

/// Each class with its number of available diagonals; the class has
/// 2^available tilings.
struct ClassSummary {
  ClassId cls;
  std::size_t available = 0;
};
std::vector<ClassSummary> class_summary(int n);

using RepSink = std::function<void(const Tiling&, const TernaryRep&)>;

/// Counts flips as a constant-amortized-time witness.
struct GenerationStats {
  std::uint64_t tilings = 0;
  std::uint64_t flips = 0;
};

/// Every tiling of class c: c's diagonal flipped (unless empty) plus each
/// subset of the available diagonals, in binary reflected Gray code order.
GenerationStats generate_class(int n, const ClassId& c, const RepSink& sink);

/// One of n equal parts of the fixed-corner family. For even n >= 4 the
/// empty class is halved by the flip state of its smallest available
/// diagonal (by tag, index).
struct ClassPart {
  ClassId cls;
  std::optional<DiagonalId> split_on;
  bool split_flipped = false;
};

std::vector<ClassPart> fixed_corner_parts(int n);
GenerationStats generate_part(int n, const ClassPart& part, const RepSink& sink);

/// Disjoint union of all classes: every n-monomer tiling with both upper
/// corners occupied (n 2^(n-3) of them). Classes in class_diagonals order,
/// empty class last.
GenerationStats generate_fixed_corner(int n, const RepSink& sink);

/// All n 2^(n-1) tilings with n monomers: for each fixed-corner part, its
/// four rotations, so consecutive blocks of 2^(n-1) form the n classes.
GenerationStats generate_all_max(int n, const TilingSink& sink);

/// Class order of the Gray code (even n only).
std::vector<ClassId> gray_class_order(int n);

struct FlipStep {
  DiagonalId diag;
  int from = 0;
  int to = 0;
};

using GraySink = std::function<void(const Tiling&, const TernaryRep&, const std::optional<FlipStep>&)>;

/// All of the fixed-corner family for even n such that consecutive tilings
/// differ by one diagonal flip (one ternary symbol changes by 1). The first
/// output has no step.
GenerationStats gray_generate(int n, const GraySink& sink);

}  // namespace tatami::maxmono
