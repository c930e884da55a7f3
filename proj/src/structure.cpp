#include "commprob/structure.hpp"

#include "commprob/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace commprob {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : b) h = (h ^ w) * 1099511628211ULL + (h >> 29);
    return h;
  }
};

Bits to_bits(const ElementSet& s, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (Element e : s) b[e / 64] |= std::uint64_t{1} << (e % 64);
  return b;
}

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

ElementSet from_bits(const Bits& b, std::size_t n) {
  ElementSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (test(b, i)) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = smallest_prime_divisor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<std::size_t> ClassDecomposition::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.size());
  return sizes;
}

ElementSet centralizer(const FiniteGroup& g, Element a) {
  ElementSet out;
  auto row = g.row(a);
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (row[y] == g.mul(static_cast<Element>(y), a)) out.push_back(static_cast<Element>(y));
  }
  return out;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet out;
  const std::size_t n = g.order();
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    auto row = g.row(static_cast<Element>(z));
    for (std::size_t y = 0; y < n && central; ++y) central = row[y] == g.mul(static_cast<Element>(y), static_cast<Element>(z));
    if (central) out.push_back(static_cast<Element>(z));
  }
  return out;
}

ClassDecomposition conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ElementSet> orbits;
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ElementSet orbit;
    for (std::size_t x = 0; x < n; ++x) {
      Element c = g.conjugate(static_cast<Element>(a), static_cast<Element>(x));
      if (!seen[c]) {
        seen[c] = true;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> orders;
  orders.reserve(orbits.size());
  for (const auto& o : orbits) orders.push_back(g.element_order(o.front()));
  std::vector<std::size_t> idx(orbits.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return orders[i] != orders[j] ? orders[i] < orders[j] : orbits[i].front() < orbits[j].front();
  });
  ClassDecomposition out;
  out.class_of.assign(n, 0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (Element e : orbits[idx[k]]) out.class_of[e] = k;
    out.classes.push_back(std::move(orbits[idx[k]]));
  }
  return out;
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& gens) {
  // Close the generator set under conjugation first, then under products.
  std::vector<bool> in(g.order(), false);
  ElementSet conj;
  for (Element s : gens) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      Element c = g.conjugate(s, static_cast<Element>(x));
      if (!in[c]) {
        in[c] = true;
        conj.push_back(c);
      }
    }
  }
  return subgroup_generated(g, conj).elements();
}

SubgroupEmbedding derived_subgroup(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  ElementSet commutators;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element c = g.commutator(static_cast<Element>(a), static_cast<Element>(b));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  std::sort(commutators.begin(), commutators.end());
  SubgroupEmbedding d = subgroup_generated(g, commutators);
  return subgroup_from_elements(g, d.elements());
}

std::vector<SubgroupEmbedding> derived_series(const FiniteGroup& g) {
  std::vector<SubgroupEmbedding> series;
  std::vector<Element> identity(g.order());
  std::iota(identity.begin(), identity.end(), Element{0});
  series.push_back(SubgroupEmbedding{g, identity});
  while (true) {
    const SubgroupEmbedding& last = series.back();
    SubgroupEmbedding next = derived_subgroup(last.sub);
    if (next.order() == last.order()) break;
    std::vector<Element> parent;
    parent.reserve(next.order());
    for (Element e : next.inclusion) parent.push_back(last.inclusion[e]);
    std::sort(parent.begin(), parent.end());
    series.push_back(subgroup_from_elements(g, parent));
    if (parent.size() == 1) break;
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().order() == 1; }

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.normal_enum_cap) {
    throw OrderCapExceeded("normal-subgroup enumeration of order " + std::to_string(n) + " exceeds the cap " +
                           std::to_string(limits.normal_enum_cap));
  }
  ClassDecomposition cd = conjugacy_classes(g);

  // Normal closures of single classes of prime-power elements; every normal
  // subgroup is a join of these.
  std::vector<Bits> principal;
  std::unordered_set<Bits, BitsHash> principal_seen;
  for (const auto& cls : cd.classes) {
    if (!is_prime_power(g.element_order(cls.front()))) continue;
    Bits b = to_bits(subgroup_generated(g, cls).elements(), n);
    if (principal_seen.insert(b).second) principal.push_back(std::move(b));
  }

  std::vector<Bits> found{to_bits({0}, n)};
  std::unordered_set<Bits, BitsHash> seen{found.front()};
  std::vector<Element> members;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const ElementSet base = from_bits(found[head], n);
    for (const Bits& d : principal) {
      if (subset_of(d, found[head])) continue;
      // N d is the union of the cosets x N for x in d.
      Bits join = found[head];
      for (std::size_t x = 0; x < n; ++x) {
        if (!test(d, x) || test(join, x)) continue;
        for (Element e : base) set(join, g.mul(static_cast<Element>(x), e));
      }
      if (seen.insert(join).second) found.push_back(std::move(join));
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(from_bits(b, n));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_simple(const FiniteGroup& g, const Limits&) {
  const std::size_t n = g.order();
  if (n == 1) return false;
  if (is_prime(n)) return true;
  // Simple iff the normal closure of every non-identity class is everything.
  ClassDecomposition cd = conjugacy_classes(g);
  for (std::size_t k = 1; k < cd.classes.size(); ++k) {
    if (subgroup_generated(g, cd.classes[k]).order() != n) return false;
  }
  return true;
}

CompositionSeries composition_series(const FiniteGroup& g, const Limits& limits) {
  CompositionSeries out;
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  out.terms.push_back(SubgroupEmbedding{g, all});
  while (out.terms.back().order() > 1) {
    const SubgroupEmbedding& current = out.terms.back();
    const std::size_t m = current.order();
    std::vector<ElementSet> normals = normal_subgroups(current.sub, limits);
    const ElementSet* best = nullptr;
    ElementSet best_parent;
    for (const auto& cand : normals) {
      if (cand.size() == m) continue;
      ElementSet parent;
      parent.reserve(cand.size());
      for (Element e : cand) parent.push_back(current.inclusion[e]);
      std::sort(parent.begin(), parent.end());
      if (best == nullptr || cand.size() > best->size() ||
          (cand.size() == best->size() && parent < best_parent)) {
        best = &cand;
        best_parent = std::move(parent);
      }
    }
    out.factors.push_back(quotient(current.sub, *best));
    out.terms.push_back(subgroup_from_elements(g, best_parent));
  }
  return out;
}

bool is_klein_four(const FiniteGroup& g) {
  if (g.order() != 4) return false;
  for (std::size_t a = 0; a < 4; ++a) {
    if (g.mul(static_cast<Element>(a), static_cast<Element>(a)) != 0) return false;
  }
  return true;
}

bool is_elementary_abelian_p2(const FiniteGroup& g, std::size_t p) {
  if (g.order() != p * p) return false;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.power(static_cast<Element>(a), static_cast<std::int64_t>(p)) != 0) return false;
  }
  return true;
}

std::size_t smallest_prime_divisor(std::size_t n) {
  if (n < 2) return 0;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

bool an_class_splits(unsigned n, const CycleType& t) {
  unsigned total = 0;
  for (unsigned part : t) {
    if (part == 0) throw InvalidParameter("cycle type parts must be positive");
    total += part;
  }
  if (total != n) throw InvalidParameter("cycle type does not partition " + std::to_string(n));
  if (cycle_type_sign(t) != 1) throw OddPermutationType("cycle type belongs to odd permutations");
  CycleType sorted = t;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return is_odc(sorted);
}

std::vector<CycleTypeClasses> alternating_class_profile(unsigned n, const Limits& limits) {
  FiniteGroup a = alternating(n, limits);
  ClassDecomposition cd = conjugacy_classes(a);
  std::map<CycleType, std::vector<std::size_t>, std::greater<>> by_type;
  for (const auto& cls : cd.classes) by_type[a.permutations()[cls.front()].cycle_type()].push_back(cls.size());
  std::vector<CycleTypeClasses> out;
  for (auto& [type, sizes] : by_type) out.push_back({type, sizes});
  return out;
}

}  // namespace commprob
