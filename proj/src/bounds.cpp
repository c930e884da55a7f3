#include "commprob/bounds.hpp"

#include "commprob/commprob.hpp"
#include "commprob/errors.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace commprob {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 22> kNames{{
    {BoundId::ElementaryLower, "elementary_lower"},
    {BoundId::ElementaryLowerThree, "elementary_lower_3"},
    {BoundId::FiveEighths, "five_eighths"},
    {BoundId::ClassCountUpper, "class_count_upper"},
    {BoundId::CenterIndexUpper, "center_index_upper"},
    {BoundId::CenterIndexChain, "center_index_chain"},
    {BoundId::PrimeUpper, "prime_upper"},
    {BoundId::HalfBound, "half_bound"},
    {BoundId::DyadicForm, "dyadic_form"},
    {BoundId::QuotientMonotone, "quotient_monotone"},
    {BoundId::SubgroupMonotone, "subgroup_monotone"},
    {BoundId::NormalProduct, "normal_product"},
    {BoundId::CompositionProduct, "composition_product"},
    {BoundId::CenterLower, "center_lower"},
    {BoundId::ClassCountLower, "class_count_lower"},
    {BoundId::SimpleClassSize, "simple_class_size"},
    {BoundId::SimpleFifth, "simple_fifth"},
    {BoundId::SimpleTwelfth, "simple_twelfth"},
    {BoundId::SolvabilityThreshold, "solvability_threshold"},
    {BoundId::DerivedUpper, "derived_upper"},
    {BoundId::DerivedUpperPrime, "derived_upper_prime"},
    {BoundId::DerivedLower, "derived_lower"},
}};

Rational ratio(std::size_t a, std::size_t b) { return Rational(BigInt(a), BigInt(b)); }

/// Fills holds/slack/equality from lhs, rhs and the relation.
BoundReport evaluate(BoundId id, Relation rel, bool applicable, Rational lhs, Rational rhs) {
  BoundReport r;
  r.id = id;
  r.relation = rel;
  r.applicable = applicable;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  switch (rel) {
    case Relation::Upper:
    case Relation::StrictUpper: r.slack = r.rhs - r.lhs; break;
    case Relation::Lower: r.slack = r.lhs - r.rhs; break;
    case Relation::Identity: r.slack = -abs(r.lhs - r.rhs); break;
    case Relation::Implication: r.slack = r.lhs - r.rhs; break;
  }
  if (!applicable) {
    r.holds = true;
    r.equality = false;
    return r;
  }
  r.equality = r.slack.is_zero();
  r.holds = rel == Relation::StrictUpper ? r.slack.sign() > 0 : r.slack.sign() >= 0;
  return r;
}

BoundReport inapplicable(BoundId id, Relation rel) { return evaluate(id, rel, false, Rational(0), Rational(0)); }

std::string subject_name(const char* kind, std::size_t index, std::size_t order) {
  return std::string(kind) + "[" + std::to_string(index) + "] order " + std::to_string(order);
}

/// Elements of <gens>, ascending, without building a table.
ElementSet generated_elements(const FiniteGroup& g, const ElementSet& gens) {
  std::vector<bool> in(g.order(), false);
  ElementSet elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(elems[head], s);
      if (!in[next]) {
        in[next] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Rational class_count_cp(const FiniteGroup& g) { return cp_class_count(g).cp; }

BoundReport quotient_report(GroupAnalysis& a, const ElementSet& n, const Rational& cp_quotient) {
  BoundReport r = evaluate(BoundId::QuotientMonotone, Relation::Upper, true, a.cp(), cp_quotient);
  // Equality iff no non-trivial commutator lands in N.
  const auto& hist = a.commutator_histogram();
  bool condition = true;
  std::uint64_t pairs_into_n = 0;
  for (Element e : n) {
    pairs_into_n += hist[e];
    if (e != 0 && hist[e] > 0) condition = false;
  }
  // |{(x, y) : [x, y] in N}| = |N|^2 |L(G/N)|
  const Rational expected = cp_quotient * Rational(BigInt(a.order()) * a.order());
  if (expected != Rational(BigInt(pairs_into_n))) {
    throw MethodDisagreement("commutator count into N disagrees with cp(G/N) on " + a.group().name());
  }
  r.equality_condition = condition;
  return r;
}

BoundReport product_report(GroupAnalysis& a, const Rational& cp_normal, const Rational& cp_quotient) {
  return evaluate(BoundId::NormalProduct, Relation::Upper, true, a.cp(), cp_normal * cp_quotient);
}

BoundReport subgroup_report(GroupAnalysis& a, const Rational& cp_sub) {
  return evaluate(BoundId::SubgroupMonotone, Relation::Lower, true, cp_sub, a.cp());
}

void append(std::vector<BoundReport>& out, std::vector<BoundReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

std::string_view bound_name(BoundId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

GroupAnalysis::GroupAnalysis(const FiniteGroup& g, const Limits& limits) : group_(&g), limits_(limits) {}

const ClassDecomposition& GroupAnalysis::classes() {
  if (!classes_) classes_ = conjugacy_classes(*group_);
  return *classes_;
}

const Rational& GroupAnalysis::cp() {
  if (!cp_) cp_ = ratio(classes().class_number(), order());
  return *cp_;
}

const ElementSet& GroupAnalysis::center() {
  if (!center_) center_ = commprob::center(*group_);
  return *center_;
}

bool GroupAnalysis::is_abelian() { return center().size() == order(); }

std::size_t GroupAnalysis::smallest_prime() const { return smallest_prime_divisor(order()); }

std::size_t GroupAnalysis::center_index() { return order() / center().size(); }

const SubgroupEmbedding& GroupAnalysis::derived() {
  if (!derived_) derived_ = derived_subgroup(*group_);
  return *derived_;
}

bool GroupAnalysis::can_enumerate_normals() const { return order() <= limits_.normal_enum_cap; }

const std::vector<ElementSet>& GroupAnalysis::normal_subgroups() {
  if (!normals_) normals_ = commprob::normal_subgroups(*group_, limits_);
  return *normals_;
}

bool GroupAnalysis::is_solvable() {
  if (!solvable_) solvable_ = commprob::is_solvable(*group_);
  return *solvable_;
}

bool GroupAnalysis::is_simple() {
  if (!simple_) simple_ = commprob::is_simple(*group_, limits_);
  return *simple_;
}

const FiniteGroup& GroupAnalysis::central_quotient() {
  if (!central_quotient_) central_quotient_ = quotient(*group_, center());
  return *central_quotient_;
}

const std::vector<std::uint64_t>& GroupAnalysis::commutator_histogram() {
  if (!commutators_) {
    const std::size_t n = order();
    std::vector<std::uint64_t> hist(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ++hist[group_->commutator(static_cast<Element>(x), static_cast<Element>(y))];
      }
    }
    commutators_ = std::move(hist);
  }
  return *commutators_;
}

SimpleGroupFacts GroupAnalysis::simple_facts() {
  SimpleGroupFacts f;
  std::size_t fact = 1;
  while (fact * (f.k + 1) <= order()) {
    ++f.k;
    fact *= f.k;
  }
  const auto& cd = classes();
  f.min_nontrivial_class_size = 0;
  for (std::size_t k = 1; k < cd.classes.size(); ++k) {
    std::size_t s = cd.classes[k].size();
    if (s > 1 && (f.min_nontrivial_class_size == 0 || s < f.min_nontrivial_class_size)) {
      f.min_nontrivial_class_size = s;
    }
  }
  return f;
}

std::vector<BoundReport> check_elementary_lower(GroupAnalysis& a) {
  const std::size_t n = a.order();
  std::vector<BoundReport> out;
  out.push_back(n >= 2 ? evaluate(BoundId::ElementaryLower, Relation::Lower, true, a.cp(), ratio(3 * n - 2, n * n))
                       : inapplicable(BoundId::ElementaryLower, Relation::Lower));
  out.push_back(n >= 3 ? evaluate(BoundId::ElementaryLowerThree, Relation::Lower, true, a.cp(), ratio(3, n))
                       : inapplicable(BoundId::ElementaryLowerThree, Relation::Lower));
  return out;
}

std::vector<BoundReport> check_five_eighths(GroupAnalysis& a) {
  if (a.is_abelian()) {
    return {evaluate(BoundId::FiveEighths, Relation::Upper, false, a.cp(), Rational(5, 8))};
  }
  BoundReport r = evaluate(BoundId::FiveEighths, Relation::Upper, true, a.cp(), Rational(5, 8));
  r.equality_condition = is_klein_four(a.central_quotient());
  r.secondary_condition = a.center_index() == 4;
  return {r};
}

std::vector<BoundReport> check_class_count_upper(GroupAnalysis& a) {
  const std::size_t n = a.order();
  Rational bound(BigInt(5 * n / 8));
  return {evaluate(BoundId::ClassCountUpper, Relation::Upper, !a.is_abelian(),
                   Rational(BigInt(a.classes().class_number())), bound)};
}

std::vector<BoundReport> check_p_upper(GroupAnalysis& a) {
  if (a.is_abelian()) {
    return {inapplicable(BoundId::CenterIndexUpper, Relation::Upper),
            inapplicable(BoundId::CenterIndexChain, Relation::Upper),
            inapplicable(BoundId::PrimeUpper, Relation::Upper)};
  }
  const std::size_t p = a.smallest_prime();
  const std::size_t m = a.center_index();
  Rational middle = ratio(1, p) + ratio(p - 1, p * m);
  Rational last = ratio(p * p + p - 1, p * p * p);
  std::vector<BoundReport> out;
  out.push_back(evaluate(BoundId::CenterIndexUpper, Relation::Upper, true, a.cp(), middle));
  out.push_back(evaluate(BoundId::CenterIndexChain, Relation::Upper, true, middle, last));
  BoundReport r = evaluate(BoundId::PrimeUpper, Relation::Upper, true, a.cp(), last);
  r.equality_condition = is_elementary_abelian_p2(a.central_quotient(), p);
  out.push_back(r);
  return out;
}

std::vector<BoundReport> check_half_form(GroupAnalysis& a) {
  const bool nonabelian = !a.is_abelian();
  const Rational half(1, 2);
  std::vector<BoundReport> out;
  out.push_back(evaluate(BoundId::HalfBound, Relation::Upper, nonabelian && a.order() % 8 != 0, a.cp(), half));

  // Nearest value of the form 1/2 + 1/2^(2s+1), s >= 0, from the
  // denominator of cp - 1/2.
  const bool above_half = nonabelian && a.cp() > half;
  Rational target = half;
  BoundReport dyadic;
  if (above_half) {
    Rational excess = a.cp() - half;
    unsigned bits = 0;
    while ((BigInt(1) << (bits + 1)) <= excess.den()) ++bits;
    if (bits % 2 == 0) ++bits;
    target = half + Rational(BigInt(1), BigInt(1) << bits);
    dyadic = evaluate(BoundId::DyadicForm, Relation::Identity, true, a.cp(), target);
    dyadic.subject = "s=" + std::to_string((bits - 1) / 2);
  } else {
    dyadic = evaluate(BoundId::DyadicForm, Relation::Identity, false, a.cp(), target);
  }
  dyadic.external_claim = true;
  out.push_back(dyadic);
  return out;
}

std::vector<BoundReport> check_quotient_monotonicity(GroupAnalysis& a, const ElementSet& n) {
  FiniteGroup q = quotient(a.group(), n);
  return {quotient_report(a, n, class_count_cp(q))};
}

std::vector<BoundReport> check_subgroup_monotonicity(GroupAnalysis& a, const SubgroupEmbedding& h) {
  return {subgroup_report(a, class_count_cp(h.sub))};
}

std::vector<BoundReport> check_product_bound(GroupAnalysis& a, const ElementSet& n) {
  FiniteGroup q = quotient(a.group(), n);
  SubgroupEmbedding sub = subgroup_from_elements(a.group(), n);
  return {product_report(a, class_count_cp(sub.sub), class_count_cp(q))};
}

std::vector<BoundReport> check_composition_bound(GroupAnalysis& a) {
  if (!a.can_enumerate_normals()) return {inapplicable(BoundId::CompositionProduct, Relation::Upper)};
  CompositionSeries series = composition_series(a.group(), a.limits());
  Rational product(1);
  for (const auto& f : series.factors) product *= class_count_cp(f);
  BoundReport r = evaluate(BoundId::CompositionProduct, Relation::Upper, true, a.cp(), product);
  r.subject = std::to_string(series.factors.size()) + " factors";
  return {r};
}

std::vector<BoundReport> check_center_lower(GroupAnalysis& a) {
  if (a.is_abelian()) return {inapplicable(BoundId::CenterLower, Relation::Lower)};
  const std::size_t p = a.smallest_prime();
  const std::size_t m = a.center_index();
  Rational bound(BigInt((p + 1) * m - p), BigInt(m) * m);
  BoundReport r = evaluate(BoundId::CenterLower, Relation::Lower, true, a.cp(), bound);
  // Equality iff [Z_G(x) : Z(G)] = p for every non-central x, i.e. every
  // non-central class has size n / (p |Z|).
  const std::size_t z = a.center().size();
  bool condition = true;
  for (const auto& cls : a.classes().classes) {
    if (cls.size() > 1 && a.order() / cls.size() != p * z) condition = false;
  }
  r.equality_condition = condition;
  return {r};
}

std::vector<BoundReport> check_class_count_lower(GroupAnalysis& a) {
  if (a.is_abelian()) return {inapplicable(BoundId::ClassCountLower, Relation::Lower)};
  const std::size_t p = a.smallest_prime();
  return {evaluate(BoundId::ClassCountLower, Relation::Lower, true, Rational(BigInt(a.classes().class_number())),
                   Rational(BigInt(p * a.center().size() + 1)))};
}

std::vector<BoundReport> check_simple_bounds(GroupAnalysis& a) {
  const bool applicable = !a.is_abelian() && a.is_simple();
  if (!applicable) {
    return {inapplicable(BoundId::SimpleClassSize, Relation::Lower),
            inapplicable(BoundId::SimpleFifth, Relation::StrictUpper),
            inapplicable(BoundId::SimpleTwelfth, Relation::Upper)};
  }
  SimpleGroupFacts facts = a.simple_facts();
  std::vector<BoundReport> out;
  BoundReport size = evaluate(BoundId::SimpleClassSize, Relation::Lower, true,
                              Rational(BigInt(facts.min_nontrivial_class_size)), Rational(BigInt(facts.k + 1)));
  size.subject = "k=" + std::to_string(facts.k);
  out.push_back(size);
  out.push_back(evaluate(BoundId::SimpleFifth, Relation::StrictUpper, true, a.cp(), Rational(1, 5)));
  BoundReport twelfth = evaluate(BoundId::SimpleTwelfth, Relation::Upper, true, a.cp(), Rational(1, 12));
  // The only simple group of order 60 is A_5.
  twelfth.equality_condition = a.order() == 60;
  out.push_back(twelfth);
  return out;
}

std::vector<BoundReport> check_solvability_threshold(GroupAnalysis& a) {
  const Rational threshold(1, 12);
  BoundReport r = evaluate(BoundId::SolvabilityThreshold, Relation::Implication, a.cp() > threshold, a.cp(), threshold);
  if (r.applicable) r.holds = a.is_solvable();
  r.equality = false;
  return {r};
}

std::vector<BoundReport> check_derived_upper(GroupAnalysis& a) {
  const std::size_t d = a.derived().order();
  std::vector<BoundReport> out;
  out.push_back(evaluate(BoundId::DerivedUpper, Relation::Upper, true, a.cp(),
                         Rational(1, 4) * (Rational(1) + ratio(3, d))));
  const std::size_t p = a.smallest_prime();
  if (p == 0) {
    out.push_back(inapplicable(BoundId::DerivedUpperPrime, Relation::Upper));
  } else {
    out.push_back(evaluate(BoundId::DerivedUpperPrime, Relation::Upper, true, a.cp(),
                           ratio(1, p * p) * (Rational(1) + ratio(p * p - 1, d))));
  }
  return out;
}

std::vector<BoundReport> check_derived_lower(GroupAnalysis& a) {
  const std::size_t d = a.derived().order();
  const std::size_t m = a.center_index();
  BoundReport r = evaluate(BoundId::DerivedLower, Relation::Lower, true, a.cp(), ratio(m + d - 1, d * m));
  bool condition = true;
  for (const auto& cls : a.classes().classes) {
    if (cls.size() > 1 && cls.size() != d) condition = false;
  }
  r.equality_condition = condition;
  return {r};
}

std::vector<ElementSet> sampled_subgroups(const FiniteGroup& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out;
  for (std::size_t x = 0; x < n; ++x) out.push_back(generated_elements(g, {static_cast<Element>(x)}));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 32; ++i) {
    auto x = static_cast<Element>(rng() % n);
    auto y = static_cast<Element>(rng() % n);
    out.push_back(generated_elements(g, {x, y}));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BoundReport> run_suite(const FiniteGroup& g, const Limits& limits) {
  GroupAnalysis a(g, limits);
  std::vector<BoundReport> out;
  append(out, check_elementary_lower(a));
  append(out, check_five_eighths(a));
  append(out, check_class_count_upper(a));
  append(out, check_p_upper(a));
  append(out, check_half_form(a));

  std::vector<BoundReport> product_reports;
  if (a.can_enumerate_normals()) {
    const auto& normals = a.normal_subgroups();
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const ElementSet& n = normals[i];
      // Already known to be normal; skip the re-check inside quotient().
      std::vector<Element> ids = coset_index(g, n);
      const std::size_t m = g.order() / n.size();
      FiniteGroup q = [&] {
        std::vector<Element> rep(m);
        std::vector<bool> has(m, false);
        for (std::size_t x = 0; x < g.order(); ++x) {
          if (!has[ids[x]]) {
            has[ids[x]] = true;
            rep[ids[x]] = static_cast<Element>(x);
          }
        }
        std::vector<Element> table(m * m);
        for (std::size_t u = 0; u < m; ++u) {
          for (std::size_t v = 0; v < m; ++v) table[u * m + v] = ids[g.mul(rep[u], rep[v])];
        }
        return FiniteGroup(detail::TrustedTable{}, g.name() + "/N", m, std::move(table), {});
      }();
      Rational cp_q = class_count_cp(q);
      Rational cp_n = class_count_cp(subgroup_from_elements(g, n).sub);
      std::string subject = subject_name("normal", i, n.size());
      BoundReport qr = quotient_report(a, n, cp_q);
      qr.subject = subject;
      out.push_back(std::move(qr));
      BoundReport pr = product_report(a, cp_n, cp_q);
      pr.subject = subject;
      product_reports.push_back(std::move(pr));
    }
  } else {
    out.push_back(inapplicable(BoundId::QuotientMonotone, Relation::Upper));
    product_reports.push_back(inapplicable(BoundId::NormalProduct, Relation::Upper));
  }

  std::vector<ElementSet> subs = sampled_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    BoundReport r = subgroup_report(a, class_count_cp(subgroup_from_elements(g, subs[i]).sub));
    r.subject = subject_name("subgroup", i, subs[i].size());
    out.push_back(std::move(r));
  }
  append(out, std::move(product_reports));
  append(out, check_composition_bound(a));
  append(out, check_center_lower(a));
  append(out, check_class_count_lower(a));
  append(out, check_simple_bounds(a));
  append(out, check_solvability_threshold(a));
  append(out, check_derived_upper(a));
  append(out, check_derived_lower(a));
  std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) { return x.id < y.id; });
  return out;
}

bool all_hold(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return !r.applicable || r.external_claim || r.holds; });
}

}  // namespace commprob
