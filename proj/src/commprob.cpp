#include "commprob/commprob.hpp"

#include "commprob/errors.hpp"
#include "commprob/structure.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace commprob {

namespace {

CpReport from_pairs(const FiniteGroup& g, std::uint64_t pairs) {
  const std::uint64_t n = g.order();
  CpReport r;
  r.group = g.name();
  r.order = g.order();
  r.pairs = pairs;
  r.classes = static_cast<std::size_t>(pairs / n);
  r.cp = Rational(BigInt(pairs), BigInt(n) * n);
  return r;
}

}  // namespace

CpReport cp_pairs(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto t = g.table();
  std::uint64_t off_diagonal = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const Element* row = t.data() + a * n;
    for (std::size_t b = a + 1; b < n; ++b) off_diagonal += row[b] == t[b * n + a];
  }
  return from_pairs(g, 2 * off_diagonal + n);
}

CpReport cp_centralizer_sum(const FiniteGroup& g) {
  std::uint64_t sum = 0;
  for (std::size_t x = 0; x < g.order(); ++x) sum += centralizer(g, static_cast<Element>(x)).size();
  return from_pairs(g, sum);
}

CpReport cp_class_count(const FiniteGroup& g) {
  const std::size_t k = conjugacy_classes(g).class_number();
  CpReport r;
  r.group = g.name();
  r.order = g.order();
  r.classes = k;
  r.pairs = static_cast<std::uint64_t>(k) * g.order();
  r.cp = Rational(BigInt(k), BigInt(g.order()));
  return r;
}

CpReport cp(const FiniteGroup& g, bool verify) {
  CpReport r = cp_class_count(g);
  if (!verify) return r;
  CpReport by_pairs = cp_pairs(g);
  CpReport by_centralizers = cp_centralizer_sum(g);
  if (by_pairs.cp != r.cp || by_centralizers.cp != r.cp || by_pairs.pairs != by_centralizers.pairs) {
    throw MethodDisagreement("cp methods disagree on " + g.name() + ": pairs " + by_pairs.cp.str() +
                             ", centralizers " + by_centralizers.cp.str() + ", classes " + r.cp.str());
  }
  r.methods_agree = true;
  return r;
}

std::pair<Rational, Rational> wilson_interval(std::uint64_t hits, std::uint64_t samples, double z) {
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  Rational estimate{BigInt(hits), BigInt(samples)};
  Rational low = Rational::from_double(std::max(0.0, centre - half));
  Rational high = Rational::from_double(std::min(1.0, centre + half));
  if (low > estimate) low = estimate;
  if (high < estimate) high = estimate;
  return {low, high};
}

McEstimate mc_estimate(const FiniteGroup& g, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidParameter("mc_estimate needs at least one sample");
  const std::uint64_t n = g.order();
  // Values below 2^64 mod n are rejected so that x % n is exactly uniform.
  const std::uint64_t reject_below = (0 - n) % n;
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> Element {
    std::uint64_t x;
    do {
      x = rng();
    } while (x < reject_below);
    return static_cast<Element>(x % n);
  };
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Element a = draw();
    Element b = draw();
    out.hits += g.mul(a, b) == g.mul(b, a);
  }
  out.estimate = Rational(BigInt(out.hits), BigInt(samples));
  std::tie(out.ci_low, out.ci_high) = wilson_interval(out.hits, samples);
  return out;
}

}  // namespace commprob
