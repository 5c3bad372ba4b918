#include <gtest/gtest.h>

#include "galoiskit/qpoly.hpp"
#include "galoiskit/radical.hpp"

using namespace galoiskit;

namespace {

NormalRadicalTower normalized(const std::vector<RadicalStageSpec>& spec) {
  return normalize_chain(realize_chain(spec));
}

std::vector<std::size_t> orders(const std::vector<PermGroup>& chain) {
  std::vector<std::size_t> v;
  for (const auto& g : chain) v.push_back(g.order());
  return v;
}

const ConditionCheck* find_check(const TowerVerification& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(RadicalChain, Realize) {
  auto c1 = realize_chain({{2, "2"}});
  EXPECT_EQ(c1.tower.degree(), 2u);
  EXPECT_EQ(c1.radicals[0] * c1.radicals[0], FieldElement(c1.tower.top(), Rational(2)));

  auto c2 = realize_chain({{2, "2"}, {2, "1 + r1"}});
  EXPECT_EQ(c2.tower.degree(), 4u);
  // sqrt(1 + sqrt 2) has minimal polynomial x^4 - 2x^2 - 1, irreducible over Q
  EXPECT_TRUE(is_irreducible_over_Q(qpoly({-1, 0, -2, 0, 1})));
  EXPECT_EQ(minimal_polynomial(c2.radicals[1]), qpoly({-1, 0, -2, 0, 1}));

  auto c3 = realize_chain({{2, "4"}});
  EXPECT_EQ(c3.tower.degree(), 1u);
  EXPECT_EQ(c3.radicals[0].rational_value(), 2);
}

TEST(RadicalChain, Errors) {
  EXPECT_THROW(realize_chain({}), DomainError);
  EXPECT_THROW(realize_chain({{1, "2"}}), DomainError);
  EXPECT_THROW(realize_chain({{2, "0"}}), DomainError);
  EXPECT_THROW(realize_chain({{2, "2"}, {2, "r1^2 - 2"}}), DomainError);
  EXPECT_THROW(realize_chain({{2, "2"}, {2, "r2"}}), ParseError);
  EXPECT_THROW(realize_chain({{2, "1/r1"}}), ParseError);
  EXPECT_THROW(realize_chain({{2, "2"}, {2, "1/(r1 - r1)"}}), DomainError);
}

TEST(Normalize, SquareRootOfTwo) {
  auto t = normalized({{2, "2"}});
  EXPECT_EQ(t.N, 2u);
  ASSERT_EQ(t.levels.size(), 3u);
  EXPECT_EQ(t.levels[1].degree(), 1u);
  EXPECT_EQ(t.levels[2].degree(), 2u);
  EXPECT_EQ(t.stages[0].orbit.size(), 1u);
  EXPECT_EQ(t.stages[0].kummer_poly, qpoly({-2, 0, 1}));
  auto v = verify_nested_normal_radical(t);
  EXPECT_TRUE(v.all_passed());
  EXPECT_EQ(orders(associated_group_chain(t).chain), (std::vector<std::size_t>{2, 2, 1}));
}

TEST(Normalize, NestedSquareRoots) {
  auto t = normalized({{2, "2"}, {2, "1 + r1"}});
  ASSERT_EQ(t.levels.size(), 4u);
  EXPECT_EQ(t.stages[1].orbit.size(), 2u);
  EXPECT_EQ(t.stages[1].orbit_poly, qpoly({-1, -2, 1}));
  EXPECT_EQ(t.stages[1].kummer_poly, qpoly({-1, 0, -2, 0, 1}));
  EXPECT_EQ(t.levels[3].degree(), 8u);
  EXPECT_EQ(splitting_degree(qpoly({-1, 0, -2, 0, 1})), 8u);
  const auto roots = roots_in(qpoly({-1, 0, -2, 0, 1}), t.levels[3].field());
  EXPECT_EQ(roots.size(), 4u);
  EXPECT_EQ(generated_degree(roots), 8u);
  auto v = verify_nested_normal_radical(t);
  for (const auto& c : v.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;

  auto groups = associated_group_chain(t);
  EXPECT_EQ(orders(groups.chain), (std::vector<std::size_t>{8, 8, 4, 1}));
  for (const auto& layer : abelian_layers(t, groups)) {
    EXPECT_TRUE(layer.abelian) << layer.layer;
    EXPECT_TRUE(layer.embedding) << layer.layer;
  }
  EXPECT_TRUE(solvable_via_abelian_chain(groups.chain).accepted);
}

TEST(Normalize, CubeRootOfTwo) {
  auto t = normalized({{3, "2"}});
  EXPECT_EQ(t.N, 3u);
  EXPECT_EQ(t.levels[1].degree(), 2u);
  EXPECT_EQ(t.levels[2].degree(), 6u);
  EXPECT_TRUE(verify_nested_normal_radical(t).all_passed());
  auto groups = associated_group_chain(t);
  EXPECT_EQ(orders(groups.chain), (std::vector<std::size_t>{6, 3, 1}));
  EXPECT_TRUE(is_normal(groups.chain[1], groups.chain[0]));
  auto cert = solvable_via_abelian_chain(groups.chain);
  EXPECT_TRUE(cert.accepted);
  auto layers = abelian_layers(t, groups);
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0].target.to_string(), "U(3)");
  EXPECT_EQ(layers[1].target.to_string(), "Z_3^1");
  for (const auto& l : layers) EXPECT_TRUE(l.embedding);
}

TEST(Normalize, MixedDegrees) {
  auto t = normalized({{2, "3"}, {3, "r1"}});
  EXPECT_EQ(t.N, 6u);
  EXPECT_TRUE(verify_nested_normal_radical(t).all_passed());
  auto groups = associated_group_chain(t);
  EXPECT_TRUE(solvable_via_abelian_chain(groups.chain).accepted);
  for (const auto& l : abelian_layers(t, groups)) EXPECT_TRUE(l.embedding) << l.layer;
}

TEST(Normalize, PlantedViolations) {
  auto t = normalized({{2, "2"}});
  auto bad_k = t;
  bad_k.degrees[0] = 3;
  auto v = verify_nested_normal_radical(bad_k);
  EXPECT_FALSE(v.all_passed());
  ASSERT_TRUE(find_check(v, "k1 divides N"));
  EXPECT_FALSE(find_check(v, "k1 divides N")->passed);

  auto n_one = t;
  n_one.N = 1;
  auto w = verify_nested_normal_radical(n_one);
  EXPECT_FALSE(find_check(w, "E1 is the splitting field of x^N - 1")->passed);

  auto not_normal = t;
  not_normal.levels[2].squarefree = qpoly({-3, 0, 1});
  EXPECT_FALSE(verify_nested_normal_radical(not_normal).all_passed());
}

TEST(Quintic, CycleTypeWitness) {
  auto w = quintic_group_witness(qpoly({-1, -1, 0, 0, 0, 1}), default_witness_primes());
  ASSERT_FALSE(w.observations.empty());
  EXPECT_EQ(w.observations[0].prime, 2u);
  EXPECT_EQ(w.observations[0].factors, (std::vector<std::string>{"x^2 + x + 1", "x^3 + x^2 + 1"}));
  EXPECT_TRUE(w.nonsolvable);
  ASSERT_TRUE(w.identified);
  EXPECT_EQ(*w.identified, "S5");

  auto v = quintic_group_witness(qpoly({-2, 0, 0, 0, 0, 1}), default_witness_primes());
  EXPECT_FALSE(v.nonsolvable);
  EXPECT_NE(std::find(v.candidates.begin(), v.candidates.end(), "F20"), v.candidates.end());
  EXPECT_FALSE(v.skipped_primes.empty());

  EXPECT_THROW(quintic_group_witness(qpoly({-1, 0, 0, 0, 0, 1}), default_witness_primes()), DomainError);
  EXPECT_THROW(quintic_group_witness(qpoly({-1, 0, 0, 0, 1}), default_witness_primes()), DomainError);
  EXPECT_THROW(quintic_group_witness(qpoly({-1, -1, 0, 0, 0, 1}), {4}), DomainError);
}

TEST(Verdict, Examples) {
  auto a = necessary_condition_verdict(qpoly({-2, 0, 0, 0, 0, 1}));
  EXPECT_EQ(a.verdict, Verdict::SolvableGroup);
  EXPECT_EQ(a.method, "splitting-field");
  EXPECT_EQ(a.group_order, 20u);
  EXPECT_EQ(a.series.orders(), (std::vector<std::size_t>{20, 5, 1}));
  ASSERT_TRUE(a.certificate);
  EXPECT_TRUE(a.certificate->accepted);

  auto b = necessary_condition_verdict(qpoly({-1, -1, 0, 0, 0, 1}));
  EXPECT_EQ(b.verdict, Verdict::NotSolvableByRadicals);
  EXPECT_EQ(b.method, "quintic-cycle-types");
  EXPECT_EQ(b.series.orders(), (std::vector<std::size_t>{120, 60, 60}));

  auto c = necessary_condition_verdict(qpoly({-2, 0, 1}));
  EXPECT_EQ(c.verdict, Verdict::SolvableGroup);
  EXPECT_EQ(c.group_order, 2u);

  VerdictOptions capped;
  capped.primes = {};
  capped.numfield.degree_cap = 24;
  EXPECT_THROW(necessary_condition_verdict(qpoly({-1, -1, 0, 0, 0, 1}), capped), DegreeCapExceeded);
}
