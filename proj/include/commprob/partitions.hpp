#pragma once

#include "commprob/rational.hpp"

#include <cstddef>
#include <vector>

namespace commprob {

/// Partition counts for 0 <= n <= max_n:
///   p  all partitions of n
///   q  partitions into distinct odd parts
///   r  partitions with an even number of even parts
///   s  partitions with an odd number of even parts
struct PartitionTable {
  std::size_t max_n = 0;
  std::vector<BigInt> p, q, r, s;
};

PartitionTable build_partition_table(std::size_t max_n);

/// p(n) / n!, for n >= 1.
Rational cp_symmetric_closed(unsigned n);
/// 2 (r(n) + q(n)) / n!, checked against (p(n) + 3 q(n)) / n!; n >= 3.
/// Throws FormulaMismatch if the two forms differ.
Rational cp_alternating_closed(unsigned n);
/// (n + 6) / 4n for even n, (n + 3) / 4n for odd n; n >= 3.
Rational cp_dihedral_closed(std::size_t n);

}  // namespace commprob
