#pragma once

#include "commprob/group.hpp"
#include "commprob/rational.hpp"
#include "commprob/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commprob {

/// Every inequality or identity the suite evaluates, in report order.
enum class BoundId {
  ElementaryLower,       // cp >= (3n - 2) / n^2
  ElementaryLowerThree,  // cp >= 3 / n, n >= 3
  FiveEighths,           // cp <= 5/8, equality iff G/Z is Klein four
  ClassCountUpper,       // K <= floor(5n / 8)
  CenterIndexUpper,      // cp <= 1/p + (p - 1) / (p m)
  CenterIndexChain,      // 1/p + (p - 1) / (p m) <= (p^2 + p - 1) / p^3
  PrimeUpper,            // cp <= (p^2 + p - 1) / p^3, equality iff G/Z = C_p x C_p
  HalfBound,             // 8 does not divide n  =>  cp <= 1/2
  DyadicForm,            // cp > 1/2  =>  cp = 1/2 + 1/2^(2s+1)
  QuotientMonotone,      // cp(G) <= cp(G/N)
  SubgroupMonotone,      // cp(H) >= cp(G)
  NormalProduct,         // cp(G) <= cp(N) cp(G/N)
  CompositionProduct,    // cp(G) <= product of composition factor cps
  CenterLower,           // cp >= ((p + 1) m - p) / m^2
  ClassCountLower,       // K >= p |Z| + 1
  SimpleClassSize,       // simple: every non-trivial class has size >= k + 1, k! <= n
  SimpleFifth,           // simple: cp < 1/5
  SimpleTwelfth,         // simple: cp <= 1/12, equality only for A_5
  SolvabilityThreshold,  // cp > 1/12  =>  solvable
  DerivedUpper,          // cp <= (1 + 3 / |G'|) / 4
  DerivedUpperPrime,     // cp <= (1 + (p^2 - 1) / |G'|) / p^2
  DerivedLower,          // cp >= (m + |G'| - 1) / (|G'| m)
};

std::string_view bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);

enum class Relation {
  Upper,        // lhs <= rhs, slack = rhs - lhs
  StrictUpper,  // lhs < rhs, slack = rhs - lhs
  Lower,        // lhs >= rhs, slack = lhs - rhs
  Identity,     // lhs == rhs, slack = -|lhs - rhs|
  Implication,  // hypothesis lhs > rhs implies a structural property
};

/// One check evaluated on one group (and possibly one subgroup of it).
///
/// For Upper/Lower/Identity, holds <=> slack >= 0 and equality <=>
/// slack == 0. StrictUpper holds iff slack > 0. Inapplicable reports
/// hold vacuously and never flag equality.
struct BoundReport {
  BoundId id = BoundId::ElementaryLower;
  /// Which subgroup the report is about, for per-subgroup checks.
  std::string subject;
  Relation relation = Relation::Upper;
  bool applicable = false;
  Rational lhs;
  Rational rhs;
  bool holds = true;
  Rational slack;
  bool equality = false;
  /// The stated characterization of equality, when one exists.
  std::optional<bool> equality_condition;
  /// Second, equivalent characterization (index [G:Z] = 4 for 5/8).
  std::optional<bool> secondary_condition;
  /// The claim comes from the literature without proof; a failure is a
  /// finding rather than a broken result.
  bool external_claim = false;
};

struct SimpleGroupFacts {
  std::size_t min_nontrivial_class_size = 0;
  /// Largest k with k! <= |G|.
  std::size_t k = 0;
};

/// Lazily computed invariants shared by the checks on one group.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(const FiniteGroup& g, const Limits& limits = {});

  const FiniteGroup& group() const { return *group_; }
  const Limits& limits() const { return limits_; }
  std::size_t order() const { return group_->order(); }

  const ClassDecomposition& classes();
  const Rational& cp();
  const ElementSet& center();
  bool is_abelian();
  /// Smallest prime dividing |G| (0 for the trivial group).
  std::size_t smallest_prime() const;
  /// [G : Z(G)]
  std::size_t center_index();
  const SubgroupEmbedding& derived();
  const std::vector<ElementSet>& normal_subgroups();
  bool can_enumerate_normals() const;
  bool is_solvable();
  bool is_simple();
  const FiniteGroup& central_quotient();
  /// hist[c] = number of ordered pairs (x, y) with [x, y] = c.
  const std::vector<std::uint64_t>& commutator_histogram();
  SimpleGroupFacts simple_facts();

 private:
  const FiniteGroup* group_;
  Limits limits_;
  std::optional<ClassDecomposition> classes_;
  std::optional<Rational> cp_;
  std::optional<ElementSet> center_;
  std::optional<SubgroupEmbedding> derived_;
  std::optional<std::vector<ElementSet>> normals_;
  std::optional<bool> solvable_;
  std::optional<bool> simple_;
  std::optional<FiniteGroup> central_quotient_;
  std::optional<std::vector<std::uint64_t>> commutators_;
};

std::vector<BoundReport> check_elementary_lower(GroupAnalysis& a);
std::vector<BoundReport> check_five_eighths(GroupAnalysis& a);
std::vector<BoundReport> check_class_count_upper(GroupAnalysis& a);
std::vector<BoundReport> check_p_upper(GroupAnalysis& a);
std::vector<BoundReport> check_half_form(GroupAnalysis& a);
/// Throws NotSubgroup / NotNormal.
std::vector<BoundReport> check_quotient_monotonicity(GroupAnalysis& a, const ElementSet& n);
std::vector<BoundReport> check_subgroup_monotonicity(GroupAnalysis& a, const SubgroupEmbedding& h);
/// Throws NotSubgroup / NotNormal.
std::vector<BoundReport> check_product_bound(GroupAnalysis& a, const ElementSet& n);
std::vector<BoundReport> check_composition_bound(GroupAnalysis& a);
std::vector<BoundReport> check_center_lower(GroupAnalysis& a);
std::vector<BoundReport> check_class_count_lower(GroupAnalysis& a);
std::vector<BoundReport> check_simple_bounds(GroupAnalysis& a);
std::vector<BoundReport> check_solvability_threshold(GroupAnalysis& a);
std::vector<BoundReport> check_derived_upper(GroupAnalysis& a);
std::vector<BoundReport> check_derived_lower(GroupAnalysis& a);

/// Subgroups sampled by run_suite: <g> for every element g plus 32 subgroups
/// generated by seeded random pairs, deduplicated, in canonical order
/// (order, then element set).
std::vector<ElementSet> sampled_subgroups(const FiniteGroup& g, std::uint64_t seed = 0x73756267ULL);

/// Every check, over every normal subgroup and the sampled subgroups. The
/// list is ordered by BoundId, then by subgroup canonical order.
std::vector<BoundReport> run_suite(const FiniteGroup& g, const Limits& limits = {});

/// True when every applicable, non-external report holds.
bool all_hold(const std::vector<BoundReport>& reports);

}  // namespace commprob
