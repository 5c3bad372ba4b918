#include <gtest/gtest.h>

#include <random>

#include "galoiskit/factor.hpp"
#include "galoiskit/qpoly.hpp"
#include "oracles.hpp"

using namespace galoiskit;

namespace {

ZpPoly zp(std::initializer_list<long> c, std::uint64_t p) {
  std::vector<Zp> v;
  for (long x : c) v.emplace_back(x, p);
  return ZpPoly(std::move(v));
}

/// Roots of f in F_p by exhaustion.
std::vector<long> roots_mod_p(const ZpPoly& f, long p) {
  std::vector<long> r;
  for (long a = 0; a < p; ++a)
    if (f.eval(Zp(a, static_cast<std::uint64_t>(p))).is_zero()) r.push_back(a);
  return r;
}

}  // namespace

TEST(FactorModP, XSquaredPlusOne) {
  auto f2 = factor_mod_p(zp({1, 0, 1}, 2));
  ASSERT_EQ(f2.factors.size(), 1U);
  EXPECT_EQ(f2.factors[0].first, zp({1, 1}, 2));
  EXPECT_EQ(f2.factors[0].second, 2U);
  EXPECT_EQ(zp({1, 1}, 2) * zp({1, 1}, 2), zp({1, 0, 1}, 2));

  auto f5 = factor_mod_p(zp({1, 0, 1}, 5));
  ASSERT_EQ(f5.factors.size(), 2U);
  EXPECT_EQ(f5.factors[0].first, zp({2, 1}, 5));
  EXPECT_EQ(f5.factors[1].first, zp({3, 1}, 5));
  EXPECT_EQ(roots_mod_p(zp({1, 0, 1}, 5), 5), (std::vector<long>{2, 3}));

  auto f3 = factor_mod_p(zp({1, 0, 1}, 3));
  ASSERT_EQ(f3.factors.size(), 1U);
  EXPECT_EQ(f3.factors[0].first, zp({1, 0, 1}, 3));
  EXPECT_TRUE(roots_mod_p(zp({1, 0, 1}, 3), 3).empty());
}

TEST(FactorModP, Errors) {
  EXPECT_THROW(factor_mod_p(ZpPoly{}), DomainError);
  EXPECT_THROW(factor_mod_p(zp({1, 1}, 9)), DomainError);
}

TEST(FactorModP, QuinticModTwo) {
  auto f = factor_mod_p(zp({1, 1, 0, 0, 0, 1}, 2));
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(to_string(f.factors[0].first), "x^2 + x + 1");
  EXPECT_EQ(to_string(f.factors[1].first), "x^3 + x^2 + 1");
}

TEST(FactorModP, ReconstructsWithPthPowers) {
  // (x+1)^4 (x^2+x+1)^2 over F_2 needs the p-th root step.
  ZpPoly a = zp({1, 1}, 2), b = zp({1, 1, 1}, 2);
  ZpPoly p = a * a * a * a * b * b;
  auto f = factor_mod_p(p);
  EXPECT_EQ(f.expand(), p);
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0].second, 4U);
  EXPECT_EQ(f.factors[1].second, 2U);
}

TEST(FactorModP, RandomReconstruction) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 101ULL}) {
    for (int t = 0; t < 10; ++t) {
      std::uniform_int_distribution<long> d(0, static_cast<long>(p) - 1);
      std::vector<Zp> v;
      for (int i = 0; i < 9; ++i) v.emplace_back(d(rng), p);
      v.emplace_back(1, p);
      ZpPoly poly(std::move(v));
      auto f = factor_mod_p(poly, 17);
      EXPECT_EQ(f.expand(), poly);
      for (const auto& [g, m] : f.factors) EXPECT_EQ(factor_mod_p(g).factors.size(), 1U);
    }
  }
}

TEST(FactorOverQ, XFourMinusOne) {
  auto f = factor_over_Q(qpoly({-1, 0, 0, 0, 1}));
  ASSERT_EQ(f.factors.size(), 3U);
  EXPECT_EQ(f.factors[0].first, qpoly({-1, 1}));
  EXPECT_EQ(f.factors[1].first, qpoly({1, 1}));
  EXPECT_EQ(f.factors[2].first, qpoly({1, 0, 1}));
  // Trial division by all bounded integer candidates finds the same pieces.
  EXPECT_EQ(oracle::integer_divisors(qpoly({-1, 0, 0, 0, 1}), 1, 3).size(), 2U);
  auto quad = oracle::integer_divisors(qpoly({-1, 0, 0, 0, 1}), 2, 3);
  EXPECT_NE(std::find(quad.begin(), quad.end(), qpoly({1, 0, 1})), quad.end());
}

TEST(FactorOverQ, QuinticIrreducible) {
  QPoly p = qpoly({-1, -1, 0, 0, 0, 1});
  auto f = factor_over_Q(p);
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_EQ(f.factors[0].first, p);
  // mod 5 there is no factor of degree 1 or 2, so no rational factorization.
  ZpPoly p5 = zp({-1, -1, 0, 0, 0, 1}, 5);
  EXPECT_TRUE(roots_mod_p(p5, 5).empty());
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) EXPECT_FALSE(divrem(p5, zp({a, b, 1}, 5)).second.is_zero());
}

TEST(FactorOverQ, ContentExtraction) {
  auto f = factor_over_Q(qpoly({-6, 0, 6}));
  EXPECT_EQ(f.unit, 6);
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0].first, qpoly({-1, 1}));
  EXPECT_EQ(f.factors[1].first, qpoly({1, 1}));
  EXPECT_THROW(factor_over_Q(QPoly{}), DomainError);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_over_Q(qpoly({-2, 0, 1})));
  EXPECT_FALSE(is_irreducible_over_Q(qpoly({-4, 0, 1})));
  EXPECT_TRUE(is_irreducible_over_Q(qpoly({1, 0, 0, 0, 1})));
  EXPECT_TRUE(oracle::integer_divisors(qpoly({1, 0, 0, 0, 1}), 2, 2).empty());
  EXPECT_TRUE(oracle::integer_divisors(qpoly({1, 0, 0, 0, 1}), 1, 2).empty());
  EXPECT_THROW(is_irreducible_over_Q(qpoly({3})), DomainError);
}

TEST(FactorOverQ, PlantedProductsRecovered) {
  const std::vector<QPoly> pool = {qpoly({-2, 0, 1}), qpoly({1, 1, 1}), qpoly({-3, 1}),
                                   qpoly({-2, 0, 0, 1}), qpoly({1, -1, 0, 1}), qpoly({5, 2}),
                                   qpoly({-1, -3, 0, 1}), qpoly({7, 0, 3})};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 25; ++t) {
    std::vector<QPoly> planted;
    QPoly prod = QPoly::constant(Rational(1 + t % 3));
    for (int i = 0; i < 1 + t % 3; ++i) {
      planted.push_back(pool[pick(rng)].monic());
      prod = prod * planted.back();
    }
    auto f = factor_over_Q(prod);
    EXPECT_EQ(f.expand(), prod);
    std::vector<QPoly> got;
    int degree_sum = 0;
    for (const auto& [g, m] : f.factors) {
      degree_sum += g.degree() * static_cast<int>(m);
      for (unsigned i = 0; i < m; ++i) got.push_back(g);
      auto again = factor_over_Q(g);
      ASSERT_EQ(again.factors.size(), 1U);
      EXPECT_EQ(again.factors[0].first, g);
    }
    EXPECT_EQ(degree_sum, prod.degree());
    auto by_cmp = [](const QPoly& a, const QPoly& b) { return compare(a, b) < 0; };
    std::sort(got.begin(), got.end(), by_cmp);
    std::sort(planted.begin(), planted.end(), by_cmp);
    EXPECT_EQ(got, planted);
  }
}

TEST(FactorOverQ, NeedsRecombination) {
  // x^4 + 1 splits into quadratics modulo every prime: recombination required.
  QPoly p = qpoly({1, 0, 0, 0, 1}) * qpoly({-2, 0, 0, 0, 1});
  auto f = factor_over_Q(p);
  EXPECT_EQ(f.expand(), p);
  ASSERT_EQ(f.factors.size(), 2U);
  // x^8 - 16x^4... a product of cyclotomic pieces
  QPoly q = qpoly({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  auto fq = factor_over_Q(q);
  EXPECT_EQ(fq.expand(), q);
  EXPECT_EQ(fq.factors.size(), 6U);  // Phi_1,2,3,4,6,12
}
