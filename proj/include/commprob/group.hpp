#pragma once

#include "commprob/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace commprob {

/// Index of a group element. The identity is always 0.
using Element = std::uint16_t;
/// Element indices in ascending order.
using ElementSet = std::vector<Element>;

/// Resource caps shared by every constructor and enumeration.
struct Limits {
  std::size_t order_cap = 10080;
  std::size_t normal_enum_cap = 2520;
  std::size_t associativity_check_cap = 512;
  unsigned max_symmetric_degree = 7;

  /// Largest order representable by `Element`.
  static constexpr std::size_t kMaxRepresentableOrder = 65535;
};

namespace detail {
struct TrustedTable {};
}  // namespace detail

/// An immutable finite group stored as its full Cayley table.
class FiniteGroup {
 public:
  /// Builds a group from a hand-made table and validates every axiom:
  /// identity row/column, Latin-square rows and columns, inverses, and
  /// associativity (exhaustive up to `limits.associativity_check_cap`,
  /// 10^5 seeded random triples above). Throws InvalidTable.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {}, const Limits& limits = {});

  /// Library-internal constructor for tables that are associative by
  /// construction. Checks identity and inverses only.
  FiniteGroup(detail::TrustedTable, std::string name, std::size_t order, std::vector<Element> table,
              std::vector<std::string> labels, std::vector<Permutation> permutations = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// g^-1 a g
  Element conjugate(Element a, Element g) const { return mul(mul(inv(g), a), g); }
  Element power(Element a, std::int64_t k) const;

  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> table() const { return table_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::span<const std::string> labels() const { return labels_; }

  /// Permutation images of the elements when the group was built from
  /// permutations; empty otherwise.
  std::span<const Permutation> permutations() const { return permutations_; }

  std::size_t element_order(Element a) const;
  /// Least common multiple of the element orders.
  std::size_t exponent() const;
  bool is_abelian() const;

  FiniteGroup renamed(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  void check_identity_and_inverses();

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> permutations_;
};

/// A subgroup as a group in its own right plus its inclusion into the parent.
struct SubgroupEmbedding {
  FiniteGroup sub;
  /// inclusion[i] is the parent index of sub element i; inclusion[0] == 0.
  std::vector<Element> inclusion;

  std::size_t order() const { return inclusion.size(); }
  /// Parent indices of the subgroup, ascending.
  ElementSet elements() const;
};

/// Full associativity scan for orders up to `exhaustive_cap`, seeded random
/// triples above it.
bool check_associativity(const FiniteGroup& g, std::size_t exhaustive_cap = 512,
                         std::size_t samples = 100000);

FiniteGroup trivial_group();

/// Group generated by permutations of `degree` points, enumerated in BFS
/// order from the identity with generators applied in list order.
FiniteGroup closure(const std::vector<Permutation>& generators, std::size_t degree,
                    const Limits& limits = {});

FiniteGroup cyclic(std::size_t n, const Limits& limits = {});
/// Symmetries of the n-gon, order 2n; element x^p y^f has index p + n f.
FiniteGroup dihedral(std::size_t n, const Limits& limits = {});
FiniteGroup symmetric(unsigned n, const Limits& limits = {});
FiniteGroup alternating(unsigned n, const Limits& limits = {});
FiniteGroup quaternion();

/// Pair (g, h) has index g |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// H semidirect G with g h g^-1 = action[g][h]. Element h g is stored at
/// index g |H| + h, so H occupies indices 0..|H|-1. Throws
/// ActionNotAutomorphism / ActionNotHomomorphism.
FiniteGroup semidirect_product(const FiniteGroup& acting, const FiniteGroup& normal,
                               const std::vector<std::vector<Element>>& action,
                               const Limits& limits = {});

/// Throws NotSubgroup / NotNormal.
void require_normal_subgroup(const FiniteGroup& g, const ElementSet& n);

/// Coset index of every element of g modulo the normal subgroup n. Cosets are
/// numbered by their smallest element, so the identity coset is 0.
std::vector<Element> coset_index(const FiniteGroup& g, const ElementSet& n);

/// Throws NotSubgroup / NotNormal.
FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n);

/// Closure of `gens` under multiplication, enumerated in BFS order.
SubgroupEmbedding subgroup_generated(const FiniteGroup& g, const ElementSet& gens);

/// The elements of `elements` as a group, when they already form a subgroup
/// (not checked). Sub indices follow ascending parent order.
SubgroupEmbedding subgroup_from_elements(const FiniteGroup& g, const ElementSet& elements);

}  // namespace commprob
