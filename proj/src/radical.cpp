#include "galoiskit/radical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

namespace {

FieldElement eval_nf(const NfPoly& p, const FieldElement& at) {
  FieldElement acc(at.field(), Rational(0));
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * at + p[k];
  return acc;
}

FieldElement evaluate_radicand(const Expression& e, const std::vector<FieldElement>& values, const FieldPtr& field) {
  return e.evaluate<FieldElement>(
      [&](std::size_t j) { return values.at(j); }, [&](const Rational& c) { return FieldElement(field, c); },
      [](const FieldElement& a, const FieldElement& b, std::size_t column) {
        if (b.is_zero()) throw DomainError("radicand divides by zero at column " + std::to_string(column));
        return a / b;
      });
}

/// x^k - b over the field of b.
NfPoly pure_polynomial(unsigned k, const FieldElement& b) {
  std::vector<FieldElement> c(k + 1, FieldElement(b.field(), Rational(0)));
  c[0] = -b;
  c[k] = FieldElement(b.field(), Rational(1));
  return NfPoly(std::move(c));
}

/// Coefficients of p (over the field of `source_theta`) carried along the
/// homomorphism theta -> image.
NfPoly transport(const NfPoly& p, const FieldElement& image) {
  std::vector<FieldElement> c;
  for (const auto& x : p.coeffs()) c.push_back(evaluate(x.residue(), image));
  return NfPoly(std::move(c));
}

QPoly x_power_minus_one(unsigned long n) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = -1;
  c[n] = 1;
  return QPoly(std::move(c));
}

}  // namespace

RadicalChain realize_chain(const std::vector<RadicalStageSpec>& description, const NumfieldOptions& options) {
  if (description.empty()) throw DomainError("empty radical chain");
  RadicalChain chain;
  for (std::size_t i = 0; i < description.size(); ++i) {
    const auto& spec = description[i];
    if (spec.k < 2) throw DomainError("stage " + std::to_string(i + 1) + ": characteristic degree must be at least 2");
    RadicalStage stage;
    stage.k = spec.k;
    stage.radicand = Expression::parse(spec.radicand, radical_symbols(i));
    stage.b = evaluate_radicand(stage.radicand, chain.radicals, chain.tower.top());
    if (stage.b.is_zero()) throw DomainError("stage " + std::to_string(i + 1) + ": radicand is zero");
    const auto factors = factor_over_number_field(pure_polynomial(stage.k, stage.b), options);
    stage.factor = factors.factors.front().first;

    chain.tower = adjoin_root(chain.tower, stage.factor, "r" + std::to_string(i + 1), options, false);
    const TowerStage& st = chain.tower.stage(i);
    for (auto& r : chain.radicals) r = evaluate(r.residue(), st.previous_theta);
    chain.radicals.push_back(chain.tower.generator_images().back());
    const FieldElement b_top = evaluate(stage.b.residue(), st.previous_theta);
    audit::require(chain.radicals.back().pow(stage.k) == b_top, "radical.stage_relation");
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

NormalRadicalTower normalize_chain(const RadicalChain& chain, const NumfieldOptions& options) {
  if (chain.stages.empty()) throw DomainError("empty radical chain");
  NormalRadicalTower t;
  t.N = 1;
  for (const auto& s : chain.stages) {
    t.degrees.push_back(s.k);
    t.N = std::lcm(t.N, static_cast<unsigned long>(s.k));
  }
  auto guarded = [&](std::size_t level, auto&& build) {
    try {
      return build();
    } catch (const DegreeCapExceeded& e) {
      throw DegreeCapExceeded(e.degree(), e.cap(), "normalize_chain: building E" + std::to_string(level));
    }
  };
  t.levels.push_back(splitting_field(qpoly({-1, 1}), options));
  t.levels.push_back(guarded(1, [&] { return splitting_field(x_power_minus_one(t.N), options); }));

  std::vector<FieldElement> images;  // a_1 .. a_i in the current level
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    const RadicalStage& rs = chain.stages[i];
    const SplittingField& E = t.levels.back();
    const GaloisGroup G = galois_group(E);

    KummerStage ks;
    ks.k = rs.k;
    const FieldElement theta_image = chain.tower.theta_from_images(i, images, E.field());
    ks.radicand = evaluate_radicand(rs.radicand, images, E.field());
    audit::require(ks.radicand == evaluate(rs.b.residue(), theta_image), "radical.radicand_transported");
    ks.orbit = orbit(G, ks.radicand);
    ks.orbit_poly = orbit_min_poly(G, ks.radicand);
    audit::require(ks.orbit_poly == minimal_polynomial(ks.radicand), "radical.orbit_poly_is_minpoly");
    ks.kummer_poly = ks.orbit_poly.compose_power(rs.k);

    SplittingField next = guarded(i + 2, [&] { return extend_splitting(E, ks.kummer_poly, options); });
    const std::size_t below = E.tower.stage_count();
    for (auto& a : images) a = next.tower.embed(a, below);
    const FieldElement b_up = next.tower.embed(ks.radicand, below);
    const NfPoly f = transport(rs.factor, chain.tower.theta_from_images(i, images, next.field()));

    std::optional<FieldElement> chosen;
    std::size_t kummer_roots = 0;
    for (const auto& r : next.roots) {
      if (!evaluate(ks.kummer_poly, r).is_zero()) continue;
      ++kummer_roots;
      if (!chosen && r.pow(rs.k) == b_up && eval_nf(f, r).is_zero()) chosen = r;
    }
    audit::require(kummer_roots == static_cast<std::size_t>(ks.kummer_poly.degree()),
                   "radical.kummer_poly_splits");
    audit::require(chosen.has_value(), "radical.radical_has_image");
    images.push_back(*chosen);

    const FieldElement top_image = chain.tower.theta_from_images(i + 1, images, next.field());
    audit::require(evaluate(chain.tower.field_at(i + 1)->min_poly(), top_image).is_zero(),
                   "radical.chain_embeds");
    ks.radical_images = images;
    t.stages.push_back(std::move(ks));
    t.levels.push_back(std::move(next));
  }
  return t;
}

std::size_t generated_degree(const std::vector<FieldElement>& generators) {
  if (generators.empty()) return 1;
  const FieldPtr& F = generators.front().field();
  linalg::EchelonBasis basis(F->degree());
  std::vector<FieldElement> found{FieldElement(F, Rational(1))};
  basis.insert(found.front().coordinates());
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& g : generators) {
      FieldElement x = found[i] * g;
      if (!basis.insert(x.coordinates())) found.push_back(std::move(x));
    }
  return found.size();
}

namespace {

/// The stored roots of E that are roots of p, each re-evaluated; distinct
/// by construction of the canonical root list, checked again here.
std::vector<FieldElement> verified_roots(const QPoly& p, const SplittingField& e) {
  std::vector<FieldElement> out;
  for (const auto& r : e.roots)
    if (same_field(r.field(), e.field()) && evaluate(p, r).is_zero() &&
        std::find(out.begin(), out.end(), r) == out.end())
      out.push_back(r);
  return out;
}

}  // namespace

bool TowerVerification::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
}

TowerVerification verify_nested_normal_radical(const NormalRadicalTower& t) {
  TowerVerification v;
  const std::size_t n = t.degrees.size();

  ConditionCheck cyclo{"E1 is the splitting field of x^N - 1", false, {}};
  if (t.N < 2) {
    cyclo.witness = "N = " + std::to_string(t.N) + " but every characteristic degree is at least 2";
  } else if (t.levels.size() < 2) {
    cyclo.witness = "tower has no E1";
  } else {
    const SplittingField& e1 = t.levels[1];
    const QPoly cyc = x_power_minus_one(t.N);
    const auto roots = verified_roots(cyc, e1);
    const std::size_t gen = generated_degree(roots);
    cyclo.passed = roots.size() == t.N && gen == e1.degree();
    cyclo.witness = std::to_string(roots.size()) + " roots of " + to_string(cyc) + " in E1, generating degree " +
                    std::to_string(gen) + ", [E1:Q] = " + std::to_string(e1.degree());
  }
  v.checks.push_back(std::move(cyclo));

  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const SplittingField& e = t.levels[i];
    const auto roots = verified_roots(e.squarefree, e);
    const std::size_t gen = generated_degree(roots);
    ConditionCheck c{"E" + std::to_string(i) + " is normal over Q", false, {}};
    c.passed = roots.size() == static_cast<std::size_t>(e.squarefree.degree()) && gen == e.degree();
    c.witness = "splitting field of " + to_string(e.squarefree) + ": " + std::to_string(roots.size()) +
                " roots in E" + std::to_string(i) + ", generating degree " + std::to_string(gen) + " = [E" +
                std::to_string(i) + ":Q] " + (gen == e.degree() ? "holds" : "fails");
    v.checks.push_back(std::move(c));
  }

  for (std::size_t i = 0; i < n; ++i) {
    ConditionCheck c{"k" + std::to_string(i + 1) + " divides N", false, {}};
    c.passed = t.degrees[i] >= 2 && t.N % t.degrees[i] == 0;
    c.witness = "k" + std::to_string(i + 1) + " = " + std::to_string(t.degrees[i]) + ", N = " + std::to_string(t.N);
    v.checks.push_back(std::move(c));
  }

  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
    const auto& lo = t.levels[i];
    const auto& hi = t.levels[i + 1];
    ConditionCheck c{"E" + std::to_string(i) + " is contained in E" + std::to_string(i + 1), false, {}};
    const std::size_t s = lo.tower.stage_count();
    c.passed = s <= hi.tower.stage_count() && same_field(hi.tower.field_at(s), lo.field()) &&
               hi.degree() % lo.degree() == 0;
    c.witness = "[E" + std::to_string(i + 1) + ":E" + std::to_string(i) + "] = " +
                (hi.degree() % lo.degree() == 0 ? std::to_string(hi.degree() / lo.degree()) : "not an integer");
    v.checks.push_back(std::move(c));
  }

  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const KummerStage& ks = t.stages[i];
    ConditionCheck c{"R" + std::to_string(i + 1) + " embeds in E" + std::to_string(i + 2), false, {}};
    if (i + 2 < t.levels.size() && !ks.radical_images.empty()) {
      const auto& lo = t.levels[i + 1];
      const auto& hi = t.levels[i + 2];
      const FieldElement b = hi.tower.embed(ks.radicand, lo.tower.stage_count());
      const FieldElement& a = ks.radical_images.back();
      c.passed = same_field(a.field(), hi.field()) && a.pow(ks.k) == b &&
                 ks.kummer_poly == ks.orbit_poly.compose_power(ks.k);
      c.witness = "image of a" + std::to_string(i + 1) + " satisfies x^" + std::to_string(ks.k) +
                  " = b with b a root of " + to_string(ks.orbit_poly);
    } else {
      c.witness = "missing level or radical images";
    }
    v.checks.push_back(std::move(c));
  }
  return v;
}

AssociatedChain associated_group_chain(const NormalRadicalTower& t) {
  if (t.levels.empty()) throw DomainError("empty tower");
  const SplittingField& top = t.levels.back();
  AssociatedChain out{galois_group(top), {}};
  const GaloisGroup& G = out.group;
  for (const auto& level : t.levels) {
    const FieldElement theta = top.tower.embed(FieldElement::theta(level.field()), level.tower.stage_count());
    std::vector<Permutation> fixing;
    for (const auto& s : G.elements())
      if (apply(s, theta) == theta) fixing.push_back(s.root_permutation);
    out.chain.push_back(PermGroup::from_elements(G.group().degree(), std::move(fixing)));
  }
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    const PermGroup& hi = out.chain[i];
    const PermGroup& lo = out.chain[i + 1];
    audit::require(lo.is_subgroup_of(hi) && is_normal(lo, hi), "radical.chain_normal");
    audit::require(hi.order() == lo.order() * (t.levels[i + 1].degree() / t.levels[i].degree()) &&
                       t.levels[i + 1].degree() % t.levels[i].degree() == 0,
                   "radical.chain_index_is_degree");
  }
  return out;
}

std::vector<LayerEmbedding> abelian_layers(const NormalRadicalTower& t, const AssociatedChain& groups) {
  std::vector<LayerEmbedding> out;
  const GaloisGroup& G = groups.group;
  const SplittingField& top = G.splitting();
  for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
    const SplittingField& hi = t.levels[i + 1];
    // G_i acting on the roots generating E_{i+1} is G(E_{i+1}, E_i)
    std::vector<FieldElement> roots;
    for (const auto& r : hi.roots) roots.push_back(top.tower.embed(r, hi.tower.stage_count()));
    std::vector<Permutation> action;
    for (const auto& p : groups.chain[i].elements()) {
      const Automorphism& s = G[G.index_of(p)];
      std::vector<std::size_t> images;
      for (const auto& r : roots) {
        const FieldElement x = apply(s, r);
        const auto it = std::find(roots.begin(), roots.end(), x);
        audit::require(it != roots.end(), "radical.layer_action_on_roots");
        images.push_back(static_cast<std::size_t>(it - roots.begin()));
      }
      action.emplace_back(std::move(images));
    }
    const PermGroup layer = PermGroup::from_elements(roots.size(), std::move(action));
    audit::require(layer.order() * t.levels[i].degree() == hi.degree(), "radical.layer_order");
    LayerEmbedding le;
    le.layer = "E" + std::to_string(i) + " < E" + std::to_string(i + 1);
    le.group_order = layer.order();
    le.abelian = is_abelian(layer);
    if (i == 0) {
      le.target = AbelianTarget::units(static_cast<long>(t.N));
    } else {
      const KummerStage& ks = t.stages.at(i - 1);
      le.target = AbelianTarget::cyclic_power(static_cast<long>(ks.k), ks.orbit.size());
    }
    le.embedding = find_embedding(layer, le.target);
    out.push_back(std::move(le));
  }
  return out;
}

// ----------------------------------------------------------- verdicts ----

std::vector<std::uint64_t> default_witness_primes() {
  const auto& all = small_primes();
  return std::vector<std::uint64_t>(all.begin(), all.begin() + 25);
}

namespace {

using CycleType = std::vector<std::size_t>;

struct TransitiveQuinticGroup {
  const char* name;
  bool solvable;
  std::vector<CycleType> types;
};

const std::vector<TransitiveQuinticGroup>& transitive_quintic_groups() {
  static const CycleType e{1, 1, 1, 1, 1}, c5{5}, c22{2, 2, 1}, c4{4, 1}, c3{3, 1, 1}, c2{2, 1, 1, 1}, c32{3, 2};
  static const std::vector<TransitiveQuinticGroup> groups = {
      {"C5", true, {e, c5}},
      {"D5", true, {e, c5, c22}},
      {"F20", true, {e, c5, c22, c4}},
      {"A5", false, {e, c5, c22, c3}},
      {"S5", false, {e, c5, c22, c4, c3, c2, c32}},
  };
  return groups;
}

}  // namespace

QuinticWitness quintic_group_witness(const QPoly& p, const std::vector<std::uint64_t>& primes,
                                     const FactorOptions& options) {
  if (p.degree() != 5) throw DomainError("quintic witness needs a polynomial of degree 5");
  if (!is_irreducible_over_Q(p)) throw DomainError("quintic witness needs an irreducible polynomial");
  const auto integral = content_and_primitive(p).second;
  QuinticWitness w;
  std::set<CycleType> observed;
  for (std::uint64_t q : primes) {
    if (!is_prime(q)) throw DomainError("witness prime list contains " + std::to_string(q) + ", which is not prime");
    const ZpPoly f = reduce_mod(integral, q);
    if (f.degree() != 5 || gcd(f, f.derivative()).degree() != 0) {
      w.skipped_primes.push_back(q);
      continue;
    }
    FrobeniusObservation obs;
    obs.prime = q;
    for (const auto& [g, m] : factor_mod_p(f.monic(), options.seed).factors) {
      obs.factors.push_back(to_string(g));
      obs.cycle_type.push_back(static_cast<std::size_t>(g.degree()));
    }
    std::sort(obs.cycle_type.rbegin(), obs.cycle_type.rend());
    observed.insert(obs.cycle_type);
    w.observations.push_back(std::move(obs));
  }
  bool all_nonsolvable = true;
  for (const auto& g : transitive_quintic_groups()) {
    const bool consistent = std::all_of(observed.begin(), observed.end(), [&](const CycleType& c) {
      return std::find(g.types.begin(), g.types.end(), c) != g.types.end();
    });
    if (!consistent) continue;
    w.candidates.push_back(g.name);
    all_nonsolvable = all_nonsolvable && !g.solvable;
  }
  audit::require(!w.candidates.empty(), "radical.quintic_candidates_nonempty");
  w.nonsolvable = !w.observations.empty() && all_nonsolvable;
  if (w.candidates.size() == 1) w.identified = w.candidates.front();
  return w;
}

std::string to_string(Verdict v) {
  return v == Verdict::SolvableGroup ? "SOLVABLE_GROUP" : "NOT_SOLVABLE_BY_RADICALS";
}

VerdictReport necessary_condition_verdict(const QPoly& p, const VerdictOptions& options) {
  if (p.degree() < 1) throw DomainError("verdict needs a polynomial of degree at least 1");
  const QPoly sq = squarefree_part(p).monic();
  VerdictReport r;
  if (sq.degree() == 5 && is_irreducible_over_Q(sq)) {
    r.quintic = quintic_group_witness(sq, options.primes, options.numfield.factor);
    if (r.quintic->nonsolvable) {
      const bool s5 = r.quintic->identified && *r.quintic->identified == "S5";
      const PermGroup g = s5 ? symmetric_group(5) : alternating_group(5);
      r.verdict = Verdict::NotSolvableByRadicals;
      r.method = "quintic-cycle-types";
      r.group_order = r.quintic->identified ? g.order() : 0;
      r.group_generators = generating_set(g);
      r.series = is_solvable(g);
      audit::require(!r.series.solvable, "radical.witness_group_nonsolvable");
      r.note = s5 ? "Galois group certified to be S5 by Frobenius cycle types"
                  : "Galois group certified to contain A5 by Frobenius cycle types";
      return r;
    }
  }
  const SplittingField e = splitting_field(sq, options.numfield);
  const GaloisGroup g = galois_group(e);
  r.method = "splitting-field";
  r.splitting_degree = e.degree();
  r.group_order = g.order();
  r.group_generators = generating_set(g.group());
  r.series = is_solvable(g.group());
  if (r.series.solvable) {
    r.verdict = Verdict::SolvableGroup;
    r.certificate = solvable_via_abelian_chain(r.series.series);
    audit::require(r.certificate->accepted, "radical.certificate_accepted");
    r.note = "a solvable Galois group is necessary for solvability by radicals; sufficiency is not checked";
  } else {
    r.verdict = Verdict::NotSolvableByRadicals;
    r.note = "derived series stalls before the trivial group";
  }
  return r;
}

}  // namespace galoiskit
