#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "antiramsey/bounds.hpp"
#include "antiramsey/search.hpp"
#include "oracle.hpp"

using namespace antiramsey;

TEST(RandomBaseline, Values) {
  EXPECT_EQ(random_baseline(3, 3), Rational(2, 9));
  for (int r = 1; r < 8; ++r) EXPECT_EQ(random_baseline(1, r), Rational(1));
  EXPECT_EQ(random_baseline(4, 3), Rational(0));
  EXPECT_EQ(random_baseline(0, 4), Rational(1));
}

TEST(RandomBaseline, FiveEdgesFiveColorsByEnumeration) {
  // All 5^5 assignments; count the injective ones.
  int rainbow = 0, total = 0;
  for (int x = 0; x < 3125; ++x) {
    int digits = x, seen = 0;
    bool ok = true;
    for (int i = 0; i < 5; ++i, digits /= 5) {
      ok = ok && !((seen >> (digits % 5)) & 1);
      seen |= 1 << (digits % 5);
    }
    rainbow += ok;
    ++total;
  }
  EXPECT_EQ(rainbow, 120);
  EXPECT_EQ(random_baseline(5, 5), Rational(rainbow, total));
  EXPECT_EQ(random_baseline(5, 5), Rational(24, 625));
}

TEST(Maclaurin, Examples) {
  const Rational c(7, 3);
  const std::vector<Rational> constant{c, c, c};
  EXPECT_EQ(maclaurin_upper(constant, 2), 3 * c * c);
  EXPECT_EQ(elementary_symmetric(constant, 2), 3 * c * c);
  const std::vector<Rational> xs{1, 2, 3};
  EXPECT_EQ(maclaurin_upper(xs, 2), Rational(12));
  EXPECT_EQ(elementary_symmetric(xs, 2), Rational(11));
  EXPECT_EQ(maclaurin_upper(xs, 3), Rational(8));
  EXPECT_EQ(elementary_symmetric(xs, 3), Rational(6));
}

TEST(Maclaurin, DomainErrors) {
  const std::vector<Rational> xs{1, 2};
  EXPECT_THROW(maclaurin_upper(xs, 0), Error);
  EXPECT_THROW(maclaurin_upper(xs, 3), Error);
  const std::vector<Rational> bad{1, 0};
  EXPECT_THROW(maclaurin_upper(bad, 1), Error);
}

TEST(StarUpperBound, Values) {
  for (int n = 2; n < 9; ++n)
    for (int r = 1; r < 5; ++r) EXPECT_EQ(star_upper_bound(n, 2, r), Rational(n * (n - 1)));
  EXPECT_EQ(star_upper_bound(4, 3, 2), Rational(9));
  EXPECT_EQ(star_upper_bound(5, 3, 2), Rational(20));
}

TEST(StarUpperBound, DominatesExhaustiveMaximum) {
  const Graph s3 = build_graph("S3");
  EXPECT_LE(Rational(oracle::max_rainbow(s3, 4, 2)), star_upper_bound(4, 3, 2));
  // K_5 with two colors: the bound is attained.
  EXPECT_EQ(Rational(exact_rb(s3, 5, 2).value), star_upper_bound(5, 3, 2));
  const Graph s4 = build_graph("S4");
  EXPECT_LE(Rational(exact_rb(s4, 5, 3).value), star_upper_bound(5, 4, 3));
}

TEST(StarPartition, DerivedQuantities) {
  const StarPartition p({3, 3, 2});
  EXPECT_EQ(p.order(), 8);
  EXPECT_EQ(p.part_count(), 3);
  EXPECT_EQ(p.gamma(), 2);
  EXPECT_EQ(p.multinomial(), 30);
  EXPECT_EQ(p.automorphisms(), BigInt(automorphism_count(p.graph())));
  EXPECT_THROW(StarPartition({3, 1}), Error);
}

TEST(StarPartition, Invariants) {
  for (int m = 2; m <= 12; ++m) {
    for (const auto& p : star_partitions(m)) {
      EXPECT_EQ(p.order(), m);
      EXPECT_EQ(factorial(p.part_count()) % p.gamma(), 0);
      BigInt prod = p.multinomial();
      for (int part : p.parts()) prod *= factorial(part - 1);
      EXPECT_EQ(prod, factorial(m - p.part_count()));
    }
  }
}

TEST(StarPartition, Enumeration) {
  EXPECT_EQ(star_partitions(8, 3).size(), 2u);  // {4,2,2}, {3,3,2}
  EXPECT_EQ(star_partitions(8).size(), 7u);     // 8 | 6,2 5,3 4,4 | 4,2,2 3,3,2 | 2,2,2,2
  EXPECT_TRUE(star_partitions(5, 3).empty());
  for (const auto& p : star_partitions(10, 3))
    for (int part : p.parts()) EXPECT_GE(part, 2);
}

TEST(DisjointStarsTarget, NormalizesToBaseline) {
  for (int m = 2; m <= 8; ++m)
    for (const auto& p : star_partitions(m))
      for (int n : {m, m + 3}) {
        const Graph g = p.graph();
        const Rational normalized = disjoint_stars_target(p, m, n) / Rational(copies_in_complete(g, n));
        EXPECT_EQ(normalized, random_baseline(m - p.part_count(), m));
      }
}

TEST(DisjointStarsTarget, Examples) {
  const StarPartition two_edges({2, 2});
  EXPECT_EQ(disjoint_stars_target(two_edges, 4, 10) / Rational(copies_in_complete(two_edges.graph(), 10)),
            random_baseline(2, 4));
  // r = 2 < m = 4 is outside the stated precondition.
  EXPECT_THROW(disjoint_stars_target(two_edges, 2, 10), Error);
  // Single star: binom(r, m-1) binom(n, m) m! / r^(m-1).
  const StarPartition single({5});
  EXPECT_EQ(disjoint_stars_target(single, 6, 9),
            Rational(binomial(6, 4) * binomial(9, 5) * factorial(5), ipow(6, 4)));
}

TEST(BlowupCoefficient, Values) {
  EXPECT_EQ(blowup_coefficient(5, 10, 4).coefficient, Rational(1, 62));
  for (int a = 2; a <= 8; ++a)
    EXPECT_EQ(blowup_coefficient(a, 1, a).coefficient, Rational(BigInt(1), ipow(a, a) - a));
  EXPECT_EQ(blowup_coefficient(2, 1, 2).coefficient, Rational(1, 2));
  EXPECT_THROW(blowup_coefficient(1, 1, 3), Error);
}

TEST(CompleteGraphCriterion, Values) {
  const auto a4 = complete_graph_criterion(4);
  EXPECT_TRUE(a4.holds);
  EXPECT_EQ(a4.lhs, Rational(2, 21));
  EXPECT_EQ(a4.rhs, Rational(5, 324));
  const auto a2 = complete_graph_criterion(2);
  EXPECT_FALSE(a2.holds);
  EXPECT_EQ(a2.lhs, Rational(1));
  EXPECT_EQ(a2.rhs, Rational(1));
  const auto a3 = complete_graph_criterion(3);
  EXPECT_TRUE(a3.holds);
  EXPECT_EQ(a3.lhs, Rational(1, 4));
  EXPECT_EQ(a3.rhs, Rational(2, 9));
}

TEST(CompleteGraphCriterion, HoldsThroughCap) {
  for (int a = 4; a <= 12; ++a) EXPECT_TRUE(complete_graph_criterion(a).holds) << a;
  EXPECT_THROW(complete_graph_criterion(13), Error);
  EXPECT_TRUE(complete_graph_criterion(13, BoundsLimits{13}).holds);
}

TEST(Dense1Criterion, Examples) {
  const auto good = dense1_criterion(6, 14, 2 / std::sqrt(5.0L));
  EXPECT_TRUE(good.applicable);
  EXPECT_TRUE(good.holds);
  EXPECT_NEAR(static_cast<double>(good.log_lhs), 0.657, 1e-3);
  EXPECT_NEAR(static_cast<double>(good.log_rhs), 0.4004, 1e-4);

  const auto weak = dense1_criterion(6, 14, 0.3L);
  EXPECT_TRUE(weak.applicable);
  EXPECT_FALSE(weak.holds);
  EXPECT_NEAR(static_cast<double>(weak.log_lhs), 0.0503, 1e-4);

  const auto near_one = dense1_criterion(6, 15, 0.99L);
  EXPECT_FALSE(near_one.applicable);
  EXPECT_FALSE(near_one.holds);
}

TEST(Dense1Criterion, EdgeThreshold) {
  // c*binom(6,2) = 13.42 with c = 2/sqrt(5).
  EXPECT_FALSE(dense1_criterion(6, 13, 2 / std::sqrt(5.0L)).holds);
}

TEST(Dense1Criterion, Errors) {
  EXPECT_THROW(dense1_criterion(6, 14, 0.0L), Error);
  EXPECT_THROW(dense1_criterion(6, 14, 1.0L), Error);
  // 2*pi*m*(1-c) == 1 exactly at c = 1 - 1/(2 pi m).
  try {
    dense1_criterion(6, 14, 1 - 1 / (12 * std::numbers::pi_v<long double>));
    FAIL() << "expected indeterminate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::indeterminate);
  }
  // e == c*binom(m,2) exactly.
  try {
    dense1_criterion(6, 12, 0.8L);
    FAIL() << "expected indeterminate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::indeterminate);
  }
}

TEST(Dense2Criterion, Values) {
  EXPECT_TRUE(dense2_criterion(6, 14));
  EXPECT_FALSE(dense2_criterion(6, 13));
  for (int e = 0; e <= 10; ++e) EXPECT_FALSE(dense2_criterion(5, e));
}

TEST(Dense2Criterion, ImpliesDense1) {
  for (int m = 6; m <= 30; ++m) {
    const long double c = 2 / std::sqrt(static_cast<long double>(m - 1));
    for (int e = 0; e <= m * (m - 1) / 2; ++e) {
      if (!dense2_criterion(m, e)) continue;
      const auto d1 = dense1_criterion(m, e, c);
      EXPECT_TRUE(d1.applicable && d1.holds) << "m=" << m << " e=" << e;
    }
  }
}

TEST(Recoloring, Factor) {
  for (int r = 1; r < 10; ++r) EXPECT_EQ(recoloring_factor(r, 1), Rational(1));
  EXPECT_EQ(recoloring_factor(3, 3), Rational(1, 2));
  EXPECT_EQ(recoloring_factor(3, 5), Rational(0));
  EXPECT_EQ(recoloring_factor(3, 4), Rational(0));
  EXPECT_EQ(recoloring_lower_bound(4, 3, 3), Rational(2));
}

TEST(Recoloring, ChainOnExactValues) {
  const Graph k3 = build_graph("K3");
  const auto rb3 = exact_rb(k3, 4, 3).value;
  const auto rb4 = exact_rb(k3, 4, 4).value;
  EXPECT_GE(rb4, rb3);
  EXPECT_GE(Rational(rb3), recoloring_lower_bound(rb4, 3, 3));
}

TEST(Monotonicity, Checks) {
  const Graph k3 = build_graph("K3");
  const std::vector<RbValue> good{{3, 1}, {4, 4}};
  EXPECT_TRUE(monotonicity_check(k3, good));
  const std::vector<RbValue> zeros{{3, 0}, {4, 0}, {5, 0}};
  EXPECT_TRUE(monotonicity_check(k3, zeros));
  const std::vector<RbValue> bad{{3, 1}, {4, 5}};
  EXPECT_FALSE(monotonicity_check(k3, bad));
  const std::vector<RbValue> gap{{3, 1}, {5, 10}};
  EXPECT_THROW(monotonicity_check(k3, gap), Error);
  EXPECT_TRUE(monotonicity_check(k3, std::vector<RbValue>{{4, 4}}));
}
