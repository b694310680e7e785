#pragma once

#include <stdexcept>
#include <string>

namespace tatami {

/// A tile set that does not form a tiling: overlap, out-of-range cells,
/// or uncovered cells.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed "tatami v1" text or ternary-representation text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the domain of an operation (bad n, m, k, parity,
/// diagonal index, class id).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tatami
