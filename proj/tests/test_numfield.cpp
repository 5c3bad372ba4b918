#include <gtest/gtest.h>

#include <random>

#include "galoiskit/numfield.hpp"
#include "galoiskit/qpoly.hpp"
#include "oracles.hpp"

using namespace galoiskit;

namespace {

FieldTower tower_of(std::initializer_list<QPoly> polys) {
  FieldTower t;
  int i = 1;
  for (const auto& p : polys) t = adjoin_root(t, lift(p, t.top()), "a" + std::to_string(i++));
  return t;
}

FieldPtr simple_field(const QPoly& m) { return std::make_shared<const AbsoluteField>(m); }

NfPoly nf(const FieldPtr& F, std::initializer_list<FieldElement> c) { return NfPoly(std::vector<FieldElement>(c)); }

NfPoly expand(const NfFactorization& f) {
  NfPoly acc = NfPoly::constant(f.unit);
  for (const auto& [g, m] : f.factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

/// Minimal polynomial of a = r(theta) from numeric conjugates: the distinct
/// values r(z) over the roots z of the defining polynomial.
std::vector<oracle::Complex> numeric_conjugates(const FieldElement& a) {
  auto roots = oracle::complex_roots(a.field()->min_poly());
  auto r = oracle::to_complex(a.residue());
  std::vector<oracle::Complex> out;
  for (auto z : roots) out.push_back(oracle::eval_complex(r, z));
  return out;
}

}  // namespace

TEST(NumberField, SqrtTwoPlusSqrtThree) {
  auto t = tower_of({qpoly({-2, 0, 1}), qpoly({-3, 0, 1})});
  EXPECT_EQ(t.degree(), 4u);
  const auto& g = t.generator_images();
  EXPECT_EQ(minimal_polynomial(g[0] + g[1]), qpoly({1, 0, -10, 0, 1}));
  EXPECT_EQ(g[0] * g[0], FieldElement(t.top(), Rational(2)));
  EXPECT_EQ(g[1] * g[1], FieldElement(t.top(), Rational(3)));
}

TEST(NumberField, InverseOfOnePlusSqrtTwo) {
  auto F = simple_field(qpoly({-2, 0, 1}));
  FieldElement a(F, qpoly({1, 1}));
  EXPECT_EQ(a.inverse(), FieldElement(F, qpoly({-1, 1})));
  EXPECT_THROW(FieldElement(F, Rational(0)).inverse(), DomainError);
}

TEST(NumberField, CubeRootCubed) {
  auto F = simple_field(qpoly({-2, 0, 0, 1}));
  EXPECT_EQ(FieldElement::theta(F).pow(3), FieldElement(F, Rational(2)));
  EXPECT_EQ(norm(FieldElement::theta(F)), 2);
}

TEST(NumberField, DegreeFormulaAndStageRelations) {
  auto t = tower_of({qpoly({-2, 0, 1}), qpoly({-3, 0, 1})});
  ASSERT_EQ(t.stage_count(), 2u);
  EXPECT_EQ(t.stage_degrees(), (std::vector<std::size_t>{2, 2}));
  const auto& st = t.stage(1);
  // the previous primitive element still satisfies its own minimal polynomial
  EXPECT_TRUE(evaluate(t.field_at(1)->min_poly(), st.previous_theta).is_zero());
  const auto pe = primitive_element(t);
  FieldElement theta(t.top(), Rational(0));
  for (std::size_t i = 0; i < pe.combination.size(); ++i)
    theta = theta + pe.generator_images[i] * Rational(pe.combination[i]);
  EXPECT_EQ(theta, FieldElement::theta(t.top()));
  EXPECT_EQ(t.theta_from_images(2, t.generator_images(), t.top()), FieldElement::theta(t.top()));
}

TEST(NumberField, ReducibleAdjunctionRejected) {
  auto t = tower_of({qpoly({-2, 0, 1})});
  EXPECT_THROW(adjoin_root(t, lift(qpoly({-2, 0, 1}), t.top()), "b"), DomainError);
  auto f = factor_over_number_field(lift(qpoly({-2, 0, 1}), t.top()));
  ASSERT_EQ(f.factors.size(), 2u);
  for (const auto& [g, m] : f.factors) EXPECT_EQ(g.degree(), 1);
}

TEST(NumberField, CyclotomicSplitsOverItself) {
  auto F = simple_field(qpoly({1, 1, 1}));
  auto f = factor_over_number_field(lift(qpoly({1, 1, 1}), F));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first.degree(), 1);
  EXPECT_EQ(f.factors[1].first.degree(), 1);
  EXPECT_EQ(expand(f), lift(qpoly({1, 1, 1}), F));
}

TEST(NumberField, TragerExamples) {
  auto Qi = simple_field(qpoly({1, 0, 1}));
  auto f = factor_over_number_field(lift(qpoly({1, 0, 0, 0, 1}), Qi));
  ASSERT_EQ(f.factors.size(), 2u);
  const auto i = FieldElement::theta(Qi);
  const FieldElement one(Qi, Rational(1)), zero(Qi, Rational(0));
  EXPECT_EQ(f.factors[0].first * f.factors[1].first, lift(qpoly({1, 0, 0, 0, 1}), Qi));
  for (const auto& [g, m] : f.factors) {
    EXPECT_EQ(g.degree(), 2);
    EXPECT_TRUE(g == nf(Qi, {i, zero, one}) || g == nf(Qi, {-i, zero, one}));
  }

  auto r2 = simple_field(qpoly({-2, 0, 1}));
  auto h = factor_over_number_field(lift(qpoly({-2, 0, 0, 0, 1}), r2));
  ASSERT_EQ(h.factors.size(), 2u);
  EXPECT_EQ(h.factors[0].first.degree(), 2);

  // irreducible over Q(sqrt 2): x^2 - 3
  auto k = factor_over_number_field(lift(qpoly({-3, 0, 1}), r2));
  EXPECT_EQ(k.factors.size(), 1u);
}

TEST(NumberField, RepeatedFactors) {
  auto F = simple_field(qpoly({-2, 0, 1}));
  auto s = FieldElement::theta(F);
  const FieldElement one(F, Rational(1));
  NfPoly lin = nf(F, {-s, one});
  NfPoly p = lin * lin * lift(qpoly({1, 0, 1}), F) * FieldElement(F, Rational(3));
  auto f = factor_over_number_field(p);
  EXPECT_EQ(expand(f), p);
  EXPECT_EQ(f.unit, FieldElement(F, Rational(3)));
  bool saw_square = false;
  for (const auto& [g, m] : f.factors)
    if (m == 2) saw_square = g == lin;
  EXPECT_TRUE(saw_square);
}

TEST(NumberField, SplittingFieldOfCubeRootTwo) {
  auto t = tower_of({qpoly({-2, 0, 0, 1})});
  auto f = factor_over_number_field(lift(qpoly({-2, 0, 0, 1}), t.top()));
  ASSERT_EQ(f.factors.size(), 2u);
  const NfPoly& quad = f.factors[0].first.degree() == 2 ? f.factors[0].first : f.factors[1].first;
  auto t2 = adjoin_root(t, quad, "a2");
  EXPECT_EQ(t2.degree(), 6u);
  auto full = factor_over_number_field(lift(qpoly({-2, 0, 0, 1}), t2.top()));
  EXPECT_EQ(full.factors.size(), 3u);
  // embedding respects arithmetic
  const auto a = FieldElement::theta(t.top());
  EXPECT_EQ(t2.embed(a * a, 1), t2.embed(a, 1) * t2.embed(a, 1));
  EXPECT_EQ(t2.embed(a, 1), t2.generator_images()[0]);
}

TEST(NumberField, DegreeCap) {
  NumfieldOptions opts;
  opts.degree_cap = 4;
  auto t = tower_of({qpoly({-2, 0, 0, 1})});
  EXPECT_THROW(adjoin_root(t, lift(qpoly({1, 1, 1}), t.top()), "b", opts), DegreeCapExceeded);
}

TEST(NumberField, LinearStageKeepsField) {
  auto t = tower_of({qpoly({-2, 0, 1})});
  auto t2 = adjoin_root(t, lift(qpoly({-5, 1}), t.top()), "b");
  EXPECT_EQ(t2.degree(), 2u);
  EXPECT_EQ(t2.generator_images()[1], FieldElement(t2.top(), Rational(5)));
  EXPECT_EQ(primitive_element(t2).combination[1], 0);
}

TEST(NumberField, MinimalPolynomialMatchesNumericConjugates) {
  std::mt19937_64 rng(7);
  auto t = tower_of({qpoly({-2, 0, 0, 1}), qpoly({1, 1, 1})});
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < t.degree(); ++i) c.emplace_back(d(rng));
    FieldElement a(t.top(), QPoly(c));
    QPoly m = minimal_polynomial(a);
    EXPECT_TRUE(is_irreducible_over_Q(m) || m.degree() == 1);
    EXPECT_TRUE(evaluate(m, a).is_zero());
    EXPECT_EQ(t.degree() % static_cast<std::size_t>(m.degree()), 0u);
    // m(x)^(d / deg m) = prod over conjugates (x - sigma(a))
    const auto conj = numeric_conjugates(a);
    const auto expected = oracle::poly_from_roots(conj);
    const QPoly mp = power(m, static_cast<unsigned>(t.degree() / m.degree()), QPoly::constant(1));
    for (std::size_t i = 0; i < expected.size(); ++i)
      EXPECT_NEAR(static_cast<double>(std::abs(expected[i] - oracle::Complex(mp[i].get_d()))), 0.0,
                  1e-6 * (1 + std::abs(mp[i].get_d())));
    // the norm equals the product of the conjugates
    oracle::Complex prod = 1;
    for (auto z : conj) prod *= z;
    EXPECT_NEAR(static_cast<double>(prod.real()), norm(a).get_d(), 1e-6 * (1 + std::abs(norm(a).get_d())));
  }
}

TEST(NumberField, NormIsMultiplicative) {
  auto F = simple_field(qpoly({-2, 0, 0, 1}));
  const auto s = FieldElement::theta(F);
  const FieldElement one(F, Rational(1));
  NfPoly p = nf(F, {-s, one});
  NfPoly q = nf(F, {s * s, s, one});
  EXPECT_EQ(norm(p), qpoly({-2, 0, 0, 1}));
  EXPECT_EQ(norm(p * q), norm(p) * norm(q));
}

TEST(NumberField, RandomFactorizationsReconstruct) {
  std::mt19937_64 rng(11);
  auto F = simple_field(qpoly({1, 1, 1}));
  std::uniform_int_distribution<long> d(-2, 2);
  auto random_nf = [&](int degree) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(F, qpoly({d(rng), d(rng)}));
    c.emplace_back(F, Rational(1));
    return NfPoly(std::move(c));
  };
  for (int trial = 0; trial < 8; ++trial) {
    NfPoly a = random_nf(2), b = random_nf(3);
    auto f = factor_over_number_field(a * b);
    EXPECT_EQ(expand(f), a * b);
    int total = 0;
    for (const auto& [g, m] : f.factors) total += g.degree() * static_cast<int>(m);
    EXPECT_EQ(total, 5);
    EXPECT_GE(f.factors.size(), 2u);
  }
}

TEST(NumberField, MixedFieldsRejected) {
  auto F = simple_field(qpoly({-2, 0, 1}));
  auto G = simple_field(qpoly({-3, 0, 1}));
  EXPECT_THROW(FieldElement::theta(F) + FieldElement::theta(G), DomainError);
}
