#include "commprob/errors.hpp"
#include "commprob/group.hpp"
#include "commprob/permutation.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace commprob;

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<Permutation::Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

void expect_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    auto e = static_cast<Element>(a);
    EXPECT_EQ(g.mul(0, e), e);
    EXPECT_EQ(g.mul(e, 0), e);
    EXPECT_EQ(g.mul(e, g.inv(e)), 0);
    std::set<Element> row(g.row(e).begin(), g.row(e).end());
    EXPECT_EQ(row.size(), n);
  }
  EXPECT_TRUE(check_associativity(g)) << g.name();
}

}  // namespace

TEST(Permutation, ComposesRightToLeft) {
  Permutation a = cyc(3, {{1, 2}});
  Permutation b = cyc(3, {{2, 3}});
  // (a*b)(i) = a(b(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ((a * b).to_string(), "(1 2 3)");
  EXPECT_EQ((b * a).to_string(), "(1 3 2)");
  EXPECT_EQ(cyc(3, {{1, 2}, {2, 3}}), a * b);
}

TEST(Permutation, CycleTypeSignInverse) {
  Permutation p = cyc(7, {{1, 2, 3}, {4, 5}});
  EXPECT_EQ(p.cycle_type(), (CycleType{3, 2, 1, 1}));
  EXPECT_EQ(p.sign(), -1);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(Permutation(4).to_string(), "()");
  EXPECT_EQ(cycle_type_sign({3, 2, 1, 1}), -1);
  EXPECT_EQ(cycle_type_sign({2, 2}), 1);
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidParameter);
  EXPECT_THROW(cyc(3, {{1, 4}}), InvalidParameter);
  EXPECT_THROW(cyc(3, {{1, 2, 1}}), InvalidParameter);
}

TEST(Permutation, OddDistinctCycleTypes) {
  EXPECT_TRUE(is_odc({5}));
  EXPECT_TRUE(is_odc({3, 1}));
  EXPECT_TRUE(is_odc({5, 3, 1}));
  EXPECT_FALSE(is_odc({3, 3}));
  EXPECT_FALSE(is_odc({2, 2}));
  EXPECT_FALSE(is_odc({1, 1}));
}

TEST(FiniteGroup, BuiltinFamiliesHaveExpectedOrders) {
  EXPECT_EQ(trivial_group().order(), 1U);
  EXPECT_EQ(cyclic(12).order(), 12U);
  EXPECT_EQ(dihedral(5).order(), 10U);
  EXPECT_EQ(symmetric(5).order(), 120U);
  EXPECT_EQ(alternating(6).order(), 360U);
  EXPECT_EQ(quaternion().order(), 8U);
  EXPECT_EQ(direct_product(cyclic(3), symmetric(3)).order(), 18U);
  EXPECT_EQ(symmetric(1).order(), 1U);
  EXPECT_EQ(alternating(2).order(), 1U);
  EXPECT_EQ(cyclic(7).name(), "cyclic(7)");
  EXPECT_EQ(direct_product(cyclic(2), quaternion()).name(), "prod(cyclic(2),q8)");
}

TEST(FiniteGroup, AxiomsHoldForConstructions) {
  for (const auto& g : {cyclic(9), dihedral(6), symmetric(4), alternating(5), quaternion(),
                        direct_product(dihedral(3), cyclic(4))}) {
    expect_group_axioms(g);
  }
}

TEST(FiniteGroup, ElementOrdersAndExponent) {
  FiniteGroup q = quaternion();
  EXPECT_EQ(q.element_order(0), 1U);
  std::multiset<std::size_t> orders;
  for (Element e = 0; e < 8; ++e) orders.insert(q.element_order(e));
  EXPECT_EQ(orders, (std::multiset<std::size_t>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(q.exponent(), 4U);
  EXPECT_EQ(symmetric(4).exponent(), 12U);
  EXPECT_FALSE(q.is_abelian());
  EXPECT_TRUE(cyclic(6).is_abelian());
  EXPECT_EQ(q.power(2, 4), 0);
  EXPECT_EQ(q.power(2, -1), q.inv(2));
}

TEST(FiniteGroup, QuaternionRelations) {
  FiniteGroup q = quaternion();
  auto by_label = [&](const std::string& s) {
    for (Element e = 0; e < 8; ++e) {
      if (q.label(e) == s) return e;
    }
    throw std::runtime_error("no label " + s);
  };
  Element i = by_label("i"), j = by_label("j"), k = by_label("k"), m = by_label("-1");
  EXPECT_EQ(q.mul(i, j), k);
  EXPECT_EQ(q.mul(j, i), by_label("-k"));
  EXPECT_EQ(q.mul(i, i), m);
  EXPECT_EQ(q.mul(q.mul(i, j), k), m);
}

TEST(FiniteGroup, DihedralIndexing) {
  FiniteGroup d = dihedral(5);
  // x has index 1, y has index 5; y x y = x^-1.
  EXPECT_EQ(d.label(1), "x");
  EXPECT_EQ(d.label(5), "y");
  EXPECT_EQ(d.mul(d.mul(5, 1), 5), d.inv(1));
  EXPECT_EQ(d.element_order(1), 5U);
  EXPECT_EQ(d.element_order(7), 2U);
}

TEST(FiniteGroup, ClosureMatchesPermutations) {
  FiniteGroup s4 = symmetric(4);
  ASSERT_EQ(s4.permutations().size(), 24U);
  EXPECT_TRUE(s4.permutations()[0].is_identity());
  for (Element a = 0; a < 24; ++a) {
    for (Element b = 0; b < 24; ++b) {
      EXPECT_EQ(s4.permutations()[s4.mul(a, b)], s4.permutations()[a] * s4.permutations()[b]);
    }
  }
  std::set<Permutation> distinct(s4.permutations().begin(), s4.permutations().end());
  EXPECT_EQ(distinct.size(), 24U);
}

TEST(FiniteGroup, OrderCapIsEnforced) {
  Limits small;
  small.order_cap = 100;
  EXPECT_THROW(symmetric(5, small), OrderCapExceeded);
  EXPECT_THROW(cyclic(101, small), OrderCapExceeded);
  EXPECT_THROW(direct_product(cyclic(10), cyclic(11), small), OrderCapExceeded);
  EXPECT_THROW(symmetric(8), OrderCapExceeded);
  EXPECT_THROW(cyclic(0), InvalidParameter);
  EXPECT_THROW(dihedral(2), InvalidParameter);
}

TEST(FiniteGroup, FromTableValidates) {
  // Z/3 by hand.
  FiniteGroup z3 = FiniteGroup::from_table("z3", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_EQ(z3.order(), 3U);
  EXPECT_EQ(z3.label(2), "2");
  EXPECT_THROW(FiniteGroup::from_table("bad", 3, {0, 1, 2, 1, 1, 0, 2, 0, 1}), InvalidTable);
  EXPECT_THROW(FiniteGroup::from_table("bad", 2, {1, 0, 0, 1}), InvalidTable);
  EXPECT_THROW(FiniteGroup::from_table("bad", 2, {0, 1, 1}), InvalidTable);
  EXPECT_THROW(FiniteGroup::from_table("bad", 3, {0, 1, 2, 1, 2, 3, 2, 0, 1}), InvalidTable);
  // A Latin square with identity that is not associative (order 5 loop).
  std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup::from_table("loop", 5, loop), InvalidTable);
}

TEST(FiniteGroup, FromTableRoundTrip) {
  FiniteGroup s3 = symmetric(3);
  std::vector<Element> table(s3.table().begin(), s3.table().end());
  FiniteGroup copy = FiniteGroup::from_table("copy", 6, table);
  EXPECT_EQ(copy, s3);
}

TEST(FiniteGroup, SemidirectProductFrobenius) {
  FiniteGroup c7 = cyclic(7), c3 = cyclic(3);
  std::vector<std::vector<Element>> action(3, std::vector<Element>(7));
  for (std::size_t g = 0; g < 3; ++g) {
    std::size_t mult = 1;
    for (std::size_t i = 0; i < g; ++i) mult *= 2;
    for (std::size_t h = 0; h < 7; ++h) action[g][h] = static_cast<Element>((h * mult) % 7);
  }
  FiniteGroup f = semidirect_product(c3, c7, action);
  EXPECT_EQ(f.order(), 21U);
  EXPECT_FALSE(f.is_abelian());
  expect_group_axioms(f);
  // g h g^-1 = action[g][h] with g = index 7 (acting generator), h = 1.
  EXPECT_EQ(f.mul(f.mul(7, 1), f.inv(7)), 2);
}

TEST(FiniteGroup, SemidirectProductRejectsBadActions) {
  FiniteGroup c7 = cyclic(7), c3 = cyclic(3), c2 = cyclic(2);
  std::vector<std::vector<Element>> not_auto(3, std::vector<Element>(7, 0));
  EXPECT_THROW(semidirect_product(c3, c7, not_auto), ActionNotAutomorphism);
  // x -> x^-1 has order 2, which cannot be the image of a generator of C_3.
  std::vector<std::vector<Element>> inversion(3, std::vector<Element>(7));
  for (Element h = 0; h < 7; ++h) {
    inversion[0][h] = h;
    inversion[1][h] = c7.inv(h);
    inversion[2][h] = c7.inv(h);
  }
  EXPECT_THROW(semidirect_product(c3, c7, inversion), ActionNotHomomorphism);
  std::vector<std::vector<Element>> dihedral_action(2, std::vector<Element>(7));
  for (Element h = 0; h < 7; ++h) {
    dihedral_action[0][h] = h;
    dihedral_action[1][h] = c7.inv(h);
  }
  EXPECT_EQ(semidirect_product(c2, c7, dihedral_action).order(), 14U);
}

TEST(FiniteGroup, QuotientAndCosets) {
  FiniteGroup s4 = symmetric(4);
  // V4 = {(), (1 2)(3 4), (1 3)(2 4), (1 4)(2 3)}
  ElementSet v4;
  for (Element e = 0; e < 24; ++e) {
    if (s4.permutations()[e].cycle_type() == CycleType{2, 2} || e == 0) v4.push_back(e);
  }
  ASSERT_EQ(v4.size(), 4U);
  FiniteGroup q = quotient(s4, v4);
  EXPECT_EQ(q.order(), 6U);
  EXPECT_FALSE(q.is_abelian());
  auto idx = coset_index(s4, v4);
  EXPECT_EQ(idx[0], 0);
  for (Element e : v4) EXPECT_EQ(idx[e], 0);

  ElementSet not_normal;
  for (Element e = 0; e < 24; ++e) {
    if (s4.permutations()[e] == Permutation::from_cycles(4, {{1, 2}}) || e == 0) not_normal.push_back(e);
  }
  EXPECT_THROW(quotient(s4, not_normal), NotNormal);
  EXPECT_THROW(quotient(s4, ElementSet{0, 1}), NotSubgroup);
}

TEST(FiniteGroup, SubgroupGeneratedAndEmbedding) {
  FiniteGroup s4 = symmetric(4);
  SubgroupEmbedding h = subgroup_generated(s4, {1});
  EXPECT_EQ(h.order(), s4.element_order(1));
  EXPECT_EQ(h.inclusion[0], 0);
  for (Element a = 0; a < h.order(); ++a) {
    for (Element b = 0; b < h.order(); ++b) {
      EXPECT_EQ(h.inclusion[h.sub.mul(a, b)], s4.mul(h.inclusion[a], h.inclusion[b]));
    }
  }
  ElementSet all;
  for (Element e = 0; e < 24; ++e) all.push_back(e);
  EXPECT_EQ(subgroup_generated(s4, {1, 2}).order(), 24U);
  EXPECT_EQ(subgroup_from_elements(s4, all).sub, s4);
}

TEST(GroupProperty, RandomProductsRespectAssociativity) {
  for (const auto& g : {symmetric(5), direct_product(quaternion(), dihedral(7)), alternating(6)}) {
    auto xs = oracle::sample_elements(g, 300, 17);
    auto ys = oracle::sample_elements(g, 300, 18);
    auto zs = oracle::sample_elements(g, 300, 19);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      EXPECT_EQ(g.mul(g.mul(xs[i], ys[i]), zs[i]), g.mul(xs[i], g.mul(ys[i], zs[i])));
      EXPECT_EQ(g.inv(g.mul(xs[i], ys[i])), g.mul(g.inv(ys[i]), g.inv(xs[i])));
      Element c = g.commutator(xs[i], ys[i]);
      EXPECT_EQ(g.mul(xs[i], ys[i]), g.mul(g.mul(ys[i], xs[i]), c));
    }
  }
}

TEST(GroupProperty, DirectProductIsComponentwise) {
  FiniteGroup a = dihedral(4), b = cyclic(3);
  FiniteGroup p = direct_product(a, b);
  for (Element x = 0; x < p.order(); ++x) {
    for (Element y = 0; y < p.order(); ++y) {
      Element ga = x / 3, ha = x % 3, gb = y / 3, hb = y % 3;
      EXPECT_EQ(p.mul(x, y), a.mul(ga, gb) * 3 + b.mul(ha, hb));
    }
  }
}
