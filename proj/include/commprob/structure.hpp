#pragma once

#include "commprob/group.hpp"

#include <cstddef>
#include <vector>

namespace commprob {

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by the order of their elements, then by smallest
/// element index, so the identity class {0} always comes first.
struct ClassDecomposition {
  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of;

  std::size_t class_number() const { return classes.size(); }
  std::vector<std::size_t> class_sizes() const;
};

ElementSet centralizer(const FiniteGroup& g, Element a);
ElementSet center(const FiniteGroup& g);
ClassDecomposition conjugacy_classes(const FiniteGroup& g);

/// Smallest normal subgroup containing `gens`.
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& gens);

/// Subgroup generated by all commutators [g, h].
SubgroupEmbedding derived_subgroup(const FiniteGroup& g);
/// G = G^(0) > G^(1) > ... until the series stabilises; every term is
/// embedded in `g`.
std::vector<SubgroupEmbedding> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// Every normal subgroup, sorted by order and then lexicographically.
/// Throws OrderCapExceeded above `limits.normal_enum_cap`.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});
bool is_simple(const FiniteGroup& g, const Limits& limits = {});

/// G = terms[0] > terms[1] > ... > terms.back() = 1, each term a maximal
/// normal subgroup of the previous one (largest order first, then the
/// lexicographically smallest element set). factors[i] = terms[i] / terms[i+1].
struct CompositionSeries {
  std::vector<SubgroupEmbedding> terms;
  std::vector<FiniteGroup> factors;
};
CompositionSeries composition_series(const FiniteGroup& g, const Limits& limits = {});

/// Order 4 and exponent at most 2.
bool is_klein_four(const FiniteGroup& g);
/// Order p^2 and every element satisfies x^p = 1.
bool is_elementary_abelian_p2(const FiniteGroup& g, std::size_t p);
std::size_t smallest_prime_divisor(std::size_t n);

inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

/// Whether the S_n class of cycle type `t` splits into two A_n classes.
/// Throws InvalidParameter if `t` does not partition n and
/// OddPermutationType if it is the type of an odd permutation.
bool an_class_splits(unsigned n, const CycleType& t);

/// Brute-force A_n class sizes grouped by cycle type.
struct CycleTypeClasses {
  CycleType type;
  std::vector<std::size_t> class_sizes;
};
std::vector<CycleTypeClasses> alternating_class_profile(unsigned n, const Limits& limits = {});

}  // namespace commprob
