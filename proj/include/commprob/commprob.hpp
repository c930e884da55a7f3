#pragma once

#include "commprob/group.hpp"
#include "commprob/rational.hpp"

#include <cstdint>
#include <string>

namespace commprob {

/// Commuting probability of one group. Whatever the method, the report
/// satisfies cp = pairs / order^2 = classes / order.
struct CpReport {
  std::string group;
  std::size_t order = 0;
  /// |{(a, b) : ab = ba}|
  std::uint64_t pairs = 0;
  std::size_t classes = 0;
  Rational cp;
  /// True when all three exact methods were run and agreed.
  bool methods_agree = false;
};

/// Counts commuting ordered pairs straight from the table.
CpReport cp_pairs(const FiniteGroup& g);
/// Sums centralizer orders.
CpReport cp_centralizer_sum(const FiniteGroup& g);
/// Class number over order.
CpReport cp_class_count(const FiniteGroup& g);

/// Class-count route; with `verify` the other two methods are run as well
/// and any disagreement throws MethodDisagreement.
CpReport cp(const FiniteGroup& g, bool verify = false);

/// Seeded Monte Carlo estimate with a 99% Wilson score interval.
struct McEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  Rational estimate;
  Rational ci_low;
  Rational ci_high;
  std::uint64_t seed = 0;

  bool contains(const Rational& value) const { return ci_low <= value && value <= ci_high; }
};

/// Two-sided 99% normal quantile used for the interval.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

/// Draws `samples` ordered pairs uniformly with std::mt19937_64 seeded by
/// `seed`; indices come from rejection sampling on the raw 64-bit output, so
/// the result is bit-identical on every platform. Throws InvalidParameter
/// when samples == 0.
McEstimate mc_estimate(const FiniteGroup& g, std::uint64_t samples, std::uint64_t seed);

/// Wilson score interval for hits/samples, clamped so that
/// low <= hits/samples <= high and both lie in [0, 1].
std::pair<Rational, Rational> wilson_interval(std::uint64_t hits, std::uint64_t samples, double z = kWilsonZ99);

}  // namespace commprob
