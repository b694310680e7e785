#pragma once

// Closed-form tiling counts and the composition identities that cross-check
// them. All arithmetic is exact.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tatami::counting {

using BigInt = boost::multiprecision::cpp_int;

/// Number of n x n tatami tilings with exactly m monomers.
///   m < n, m = n (mod 2):  m 2^m + (m+1) 2^(m+1)
///   m = n:                 n 2^(n-1)
///   otherwise:             0
/// Throws DomainError for n < 1 or m < 0.
BigInt count_tilings(int n, int m);

/// 2^(n-1) (3n-4) + 2, the number of all n x n tatami tilings.
BigInt total_tilings(int n);

/// (n-k) 2^(n-k): tilings whose bidimer or vortex lies at distance (k+1)/2
/// from the boundary. Requires 1 <= k <= n-1.
BigInt count_at_distance(int n, int k);

/// Sum over all 2^(n-1) compositions of n of the sum of squared parts,
/// by explicit enumeration of the compositions.
BigInt composition_square_sum(int n);

/// Number of parts equal to i over all compositions of n (n >= 2, 1 <= i <= n).
BigInt summand_count(int n, int i);

/// The red-box class size 2(n-k) + sum_{i=k+1}^{n-1} (n+3-i)(i-k) 2^(n-1-i),
/// evaluated term by term. Requires 1 <= k <= n-1.
BigInt red_box_class_size(int n, int k);

struct CountTable {
  int n = 0;
  std::vector<BigInt> by_monomers;  // index m, 0..n
  BigInt total;

  const BigInt& count(int m) const;
};

CountTable count_table(int n);

}  // namespace tatami::counting
