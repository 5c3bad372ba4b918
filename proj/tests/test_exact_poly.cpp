#include <gtest/gtest.h>

#include <random>

#include "galoiskit/polynomial.hpp"
#include "galoiskit/qpoly.hpp"
#include "oracles.hpp"

using namespace galoiskit;

TEST(PolyArith, ExactDivision) {
  auto [q, r] = divrem(qpoly({-1, 0, 1}), qpoly({-1, 1}));
  EXPECT_EQ(q, qpoly({1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(PolyArith, DifferenceOfSquares) {
  EXPECT_EQ(qpoly({1, 0, 1}) * qpoly({-1, 0, 1}), qpoly({-1, 0, 0, 0, 1}));
}

TEST(PolyArith, DivremWithRemainder) {
  QPoly p = qpoly({5, 2, 0, 1}), d = qpoly({1, 0, 1});
  auto [q, r] = divrem(p, d);
  EXPECT_EQ(q, qpoly({0, 1}));
  EXPECT_EQ(r, qpoly({5, 1}));
  EXPECT_EQ(q * d + r, p);
}

TEST(PolyArith, DivisionByZeroThrows) {
  EXPECT_THROW(divrem(qpoly({1, 1}), QPoly{}), DomainError);
}

TEST(PolyArith, FieldMismatchThrows) {
  ZpPoly a(std::vector<Zp>{Zp(1, 5), Zp(1, 5)});
  ZpPoly b(std::vector<Zp>{Zp(1, 7), Zp(1, 7)});
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd(qpoly({-1, 0, 1}), qpoly({-1, 0, 0, 1})), qpoly({-1, 1}));
  EXPECT_EQ(gcd(qpoly({4, 0, 2}), QPoly{}), qpoly({2, 0, 1}));
  EXPECT_EQ(gcd(qpoly({1, 0, 1}), qpoly({1, 0, 1})), qpoly({1, 0, 1}));
  EXPECT_THROW(gcd(QPoly{}, QPoly{}), DomainError);
}

TEST(PolyGcd, BruteForceLinearFactors) {
  // Common linear integer factors of x^2-1 and x^3-1, found by trial division.
  auto a = oracle::integer_divisors(qpoly({-1, 0, 1}), 1, 3);
  auto b = oracle::integer_divisors(qpoly({-1, 0, 0, 1}), 1, 3);
  std::vector<QPoly> common;
  for (const auto& f : a)
    for (const auto& g : b)
      if (f == g) common.push_back(f);
  ASSERT_EQ(common.size(), 1U);
  EXPECT_EQ(gcd(qpoly({-1, 0, 1}), qpoly({-1, 0, 0, 1})), common[0]);
}

TEST(Squarefree, Examples) {
  QPoly p = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({2, 1});
  EXPECT_EQ(squarefree_part(p), qpoly({-1, 1}) * qpoly({2, 1}));
  EXPECT_EQ(squarefree_part(qpoly({-2, 0, 1})), qpoly({-2, 0, 1}));
  QPoly g = squarefree_part(qpoly({1, 0, 0, -2, 0, 0, 1}));
  EXPECT_EQ(g, qpoly({-1, 0, 0, 1}));
  EXPECT_EQ(gcd(g, g.derivative()).degree(), 0);
  EXPECT_THROW(squarefree_part(QPoly{}), DomainError);
}

TEST(Squarefree, YunDecompositionReconstructs) {
  QPoly a = qpoly({1, 1}), b = qpoly({-2, 0, 1}), c = qpoly({3, 0, 0, 1});
  QPoly p = a * b * b * c * c * c * Rational(5);
  auto parts = squarefree_decomposition(p);
  QPoly acc = QPoly::constant(Rational(1));
  for (const auto& [f, m] : parts)
    for (unsigned i = 0; i < m; ++i) acc = acc * f;
  EXPECT_EQ(acc, p.monic());
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0].second, 1U);
  EXPECT_EQ(parts[2].second, 3U);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})), 1);
  QPoly q = qpoly({7, -1, 0, 2});
  EXPECT_EQ(resultant(qpoly({-4, 1}), q), q.eval(Rational(4)));
  EXPECT_EQ(resultant(qpoly({-2, 0, 1}), qpoly({-1, 1})), -1);
  EXPECT_THROW(resultant(QPoly{}, q), DomainError);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    QPoly p = oracle::random_poly(rng, 1 + trial % 5, 6);
    QPoly q = oracle::random_poly(rng, 1 + (trial / 5) % 4, 6);
    EXPECT_EQ(resultant(p, q), oracle::sylvester_resultant(p, q)) << to_string(p) << " | " << to_string(q);
  }
}

TEST(Resultant, VanishesExactlyOnCommonFactor) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    QPoly common = oracle::random_poly(rng, 1 + trial % 2, 4);
    QPoly p = oracle::random_poly(rng, 2, 5), q = oracle::random_poly(rng, 2, 5);
    bool planted = trial % 2 == 0;
    if (planted) {
      p = p * common;
      q = q * common;
    }
    bool zero = resultant(p, q) == 0;
    EXPECT_EQ(zero, gcd(p, q).degree() > 0);
    if (planted) EXPECT_TRUE(zero);
  }
}

TEST(ComposePower, Examples) {
  EXPECT_EQ(qpoly({-2, 0, 1}).compose_power(3), qpoly({-2, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(qpoly({-1, 1}).compose_power(5), qpoly({-1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(qpoly({-1, -2, 1}).compose_power(2), qpoly({-1, 0, -2, 0, 1}));
  EXPECT_THROW(qpoly({1, 1}).compose_power(0), DomainError);
}

TEST(PolyProperties, RingAxiomsAndDivision) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    QPoly p = oracle::random_poly(rng, trial % 6, 9);
    QPoly q = oracle::random_poly(rng, (trial + 2) % 5, 9);
    QPoly r = oracle::random_poly(rng, (trial + 1) % 4, 9);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    auto [quot, rem] = divrem(p, q);
    EXPECT_EQ(q * quot + rem, p);
    EXPECT_LT(rem.degree(), q.degree());
    QPoly g = gcd(p * r, q * r);
    EXPECT_TRUE(divrem(p * r, g).second.is_zero());
    EXPECT_TRUE(divrem(q * r, g).second.is_zero());
    EXPECT_TRUE(divrem(g, r.monic()).second.is_zero());
    if (p.degree() > 0) {
      QPoly s = squarefree_part(p * p * q);
      EXPECT_EQ(gcd(s, s.derivative()).degree(), 0);
    }
  }
}

TEST(Rendering, RoundTripFormat) {
  EXPECT_EQ(to_string(qpoly({-1, -1, 0, 0, 0, 1})), "x^5 - x - 1");
  std::vector<Rational> v{Rational(1, 2), Rational(-3), Rational(0), Rational(2, 3)};
  EXPECT_EQ(to_string(QPoly(v)), "2/3*x^3 - 3*x + 1/2");
  EXPECT_EQ(to_string(QPoly{}), "0");
}

TEST(ContentAndPrimitive, SplitsRationalContent) {
  std::vector<Rational> v{Rational(-3, 2), Rational(0), Rational(3, 4)};
  auto [c, prim] = content_and_primitive(QPoly(v));
  EXPECT_EQ(c, Rational(3, 4));
  ASSERT_EQ(prim.size(), 3U);
  EXPECT_EQ(prim[0], -2);
  EXPECT_EQ(prim[2], 1);
}
