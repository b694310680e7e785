#include "tatami/counting.hpp"

#include <cstdint>
#include <string>

#include "tatami/errors.hpp"

namespace tatami::counting {

namespace {

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

void require_grid(int n) {
  if (n < 1) throw DomainError("n must be positive, got " + std::to_string(n));
}

void require_distance(int n, int k) {
  require_grid(n);
  if (k < 1 || k > n - 1) {
    throw DomainError("k must satisfy 1 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace

BigInt count_tilings(int n, int m) {
  require_grid(n);
  if (m < 0) throw DomainError("m must be non-negative");
  if (m == n) return BigInt(n) * pow2(n - 1);
  if (m > n || (n - m) % 2 != 0) return 0;
  return BigInt(m) * pow2(m) + BigInt(m + 1) * pow2(m + 1);
}

BigInt total_tilings(int n) {
  require_grid(n);
  return pow2(n - 1) * (3 * n - 4) + 2;
}

BigInt count_at_distance(int n, int k) {
  require_distance(n, k);
  return BigInt(n - k) * pow2(n - k);
}

BigInt composition_square_sum(int n) {
  require_grid(n);
  if (n > 40) throw DomainError("composition enumeration limited to n <= 40");
  // Bit j of `cuts` set means a part ends after position j+1.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  BigInt total = 0;
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    std::uint64_t sum = 0;
    std::uint64_t part = 0;
    for (int pos = 0; pos < n; ++pos) {
      ++part;
      if (pos == n - 1 || ((cuts >> pos) & 1U) != 0) {
        sum += part * part;
        part = 0;
      }
    }
    total += sum;
  }
  return total;
}

BigInt summand_count(int n, int i) {
  if (n < 2) throw DomainError("summand_count requires n >= 2");
  if (i < 1 || i > n) throw DomainError("summand_count requires 1 <= i <= n");
  if (i == n) return 1;
  // (n+3-i) 2^(n-2-i); for i = n-1 the power is 1/2 and n+3-i = 4.
  return BigInt(n + 3 - i) * pow2(n - 1 - i) / 2;
}

BigInt red_box_class_size(int n, int k) {
  require_distance(n, k);
  BigInt total = 2 * (n - k);
  for (int i = k + 1; i <= n - 1; ++i) total += BigInt(n + 3 - i) * (i - k) * pow2(n - 1 - i);
  return total;
}

const BigInt& CountTable::count(int m) const {
  static const BigInt zero = 0;
  if (m < 0 || m >= static_cast<int>(by_monomers.size())) return zero;
  return by_monomers[static_cast<std::size_t>(m)];
}

CountTable count_table(int n) {
  require_grid(n);
  CountTable table;
  table.n = n;
  for (int m = 0; m <= n; ++m) {
    table.by_monomers.push_back(count_tilings(n, m));
    table.total += table.by_monomers.back();
  }
  return table;
}

}  // namespace tatami::counting
