#include "commprob/partitions.hpp"

#include "commprob/errors.hpp"

namespace commprob {

PartitionTable build_partition_table(std::size_t max_n) {
  const std::size_t size = max_n + 1;
  PartitionTable t;
  t.max_n = max_n;

  t.p.assign(size, 0);
  t.p[0] = 1;
  for (std::size_t part = 1; part <= max_n; ++part) {
    for (std::size_t n = part; n <= max_n; ++n) t.p[n] += t.p[n - part];
  }

  // 0/1 knapsack over the odd part sizes.
  t.q.assign(size, 0);
  t.q[0] = 1;
  for (std::size_t part = 1; part <= max_n; part += 2) {
    for (std::size_t n = max_n; n >= part; --n) {
      t.q[n] += t.q[n - part];
      if (n == part) break;
    }
  }

  // even[n] / odd[n]: partitions of n using the parts seen so far, with an
  // even / odd number of even parts. An even part flips the parity.
  std::vector<BigInt> even(size, 0), odd(size, 0);
  even[0] = 1;
  for (std::size_t part = 1; part <= max_n; ++part) {
    if (part % 2 == 1) {
      for (std::size_t n = part; n <= max_n; ++n) {
        even[n] += even[n - part];
        odd[n] += odd[n - part];
      }
    } else {
      for (std::size_t n = part; n <= max_n; ++n) {
        BigInt from_odd = odd[n - part];
        BigInt from_even = even[n - part];
        even[n] += from_odd;
        odd[n] += from_even;
      }
    }
  }
  t.r = std::move(even);
  t.s = std::move(odd);
  return t;
}

Rational cp_symmetric_closed(unsigned n) {
  if (n < 1) throw InvalidParameter("cp_symmetric_closed needs n >= 1");
  PartitionTable t = build_partition_table(n);
  return Rational(t.p[n], factorial(n));
}

Rational cp_alternating_closed(unsigned n) {
  if (n < 3) throw InvalidParameter("cp_alternating_closed needs n >= 3");
  PartitionTable t = build_partition_table(n);
  Rational split_form(2 * (t.r[n] + t.q[n]), factorial(n));
  Rational partition_form(t.p[n] + 3 * t.q[n], factorial(n));
  if (split_form != partition_form) {
    throw FormulaMismatch("cp(A_" + std::to_string(n) + "): " + split_form.str() + " vs " + partition_form.str());
  }
  return split_form;
}

Rational cp_dihedral_closed(std::size_t n) {
  if (n < 3) throw InvalidParameter("cp_dihedral_closed needs n >= 3");
  const BigInt nn = n;
  return n % 2 == 0 ? Rational(nn + 6, 4 * nn) : Rational(nn + 3, 4 * nn);
}

}  // namespace commprob
