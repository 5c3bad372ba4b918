#include "galoiskit/splitting.hpp"

#include <algorithm>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

namespace {

bool element_less(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }

void sort_unique(std::vector<FieldElement>& v) {
  std::sort(v.begin(), v.end(), element_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

FieldElement move_up(const FieldElement& a, const TowerStage& stage) {
  return evaluate(a.residue(), stage.previous_theta);
}

NfPoly move_up(const NfPoly& p, const TowerStage& stage) {
  std::vector<FieldElement> c;
  for (const auto& x : p.coeffs()) c.push_back(move_up(x, stage));
  return NfPoly(std::move(c));
}

/// Splits the pending factors by sorting linear ones into roots.
void absorb(const NfFactorization& f, std::vector<NfPoly>& pending, std::vector<FieldElement>& roots) {
  for (const auto& [g, m] : f.factors) {
    if (g.degree() == 1)
      roots.push_back(-g[0] / g[1]);
    else
      pending.push_back(g);
  }
}

SplittingField split(SplittingField sf, const QPoly& q, const NumfieldOptions& options) {
  std::vector<FieldElement> roots = sf.roots;
  std::vector<NfPoly> pending;
  if (q.degree() >= 1) absorb(factor_over_number_field(lift(q, sf.field()), options), pending, roots);

  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), [](const NfPoly& a, const NfPoly& b) { return compare(a, b) < 0; });
    const NfPoly chosen = pending.front();
    const std::size_t k = sf.tower.stage_count();
    sf.tower = adjoin_root(sf.tower, chosen, "a" + std::to_string(k + 1), options, false);
    const TowerStage& st = sf.tower.stage(k);
    const FieldElement g = sf.tower.generator_images().back();

    for (auto& r : roots) r = move_up(r, st);
    roots.push_back(g);
    std::vector<NfPoly> next;
    const NfPoly x_minus_g = NfPoly({-g, FieldElement(sf.field(), Rational(1))});
    for (std::size_t i = 0; i < pending.size(); ++i) {
      NfPoly f = move_up(pending[i], st);
      if (i == 0) f = exact_quotient(f, x_minus_g);
      if (f.degree() == 1) {
        roots.push_back(-f[0] / f[1]);
      } else if (f.degree() > 1) {
        absorb(factor_over_number_field(f, options), next, roots);
      }
    }
    pending = std::move(next);
  }

  sort_unique(roots);
  sf.roots = std::move(roots);
  for (const auto& r : sf.roots)
    audit::require(evaluate(sf.squarefree, r).is_zero(), "splitting.root_is_root");
  audit::require(sf.roots.size() == static_cast<std::size_t>(sf.squarefree.degree()),
                 "splitting.root_count");
  sf.generator_roots.clear();
  for (const auto& g : sf.tower.generator_images()) sf.generator_roots.push_back(sf.root_index(g));
  return sf;
}

QPoly monic_squarefree(const QPoly& p) {
  if (p.degree() < 1) throw DomainError("splitting field of a constant polynomial");
  return squarefree_part(p).monic();
}

}  // namespace

std::size_t SplittingField::root_index(const FieldElement& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r, element_less);
  if (it == roots.end() || !(*it == r)) throw DomainError("element is not a root of the source polynomial");
  return static_cast<std::size_t>(it - roots.begin());
}

SplittingField splitting_field(const QPoly& p, const NumfieldOptions& options) {
  SplittingField sf;
  sf.source = p;
  sf.squarefree = monic_squarefree(p);
  sf.sources = {sf.squarefree};
  const QPoly q = sf.squarefree;
  return split(std::move(sf), q, options);
}

SplittingField extend_splitting(const SplittingField& base, const QPoly& q, const NumfieldOptions& options) {
  SplittingField sf = base;
  const QPoly qs = monic_squarefree(q);
  sf.source = base.squarefree * qs;
  sf.squarefree = monic_squarefree(sf.source);
  sf.sources.push_back(qs);
  // roots of q that are already roots of the base polynomial are in sf.roots
  const QPoly fresh = exact_quotient(qs, gcd(qs, base.squarefree));
  return split(std::move(sf), fresh, options);
}

std::size_t splitting_degree(const QPoly& p, const NumfieldOptions& options) {
  return splitting_field(p, options).degree();
}

std::vector<FieldElement> roots_in(const QPoly& p, const FieldPtr& field, const NumfieldOptions& options) {
  std::vector<FieldElement> roots;
  for (const auto& [g, m] : factor_over_number_field(lift(p, field), options).factors)
    if (g.degree() == 1) roots.push_back(-g[0] / g[1]);
  sort_unique(roots);
  return roots;
}

}  // namespace galoiskit
