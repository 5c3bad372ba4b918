#include "galoiskit/galois.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

GaloisGroup::GaloisGroup(SplittingField field, std::vector<Automorphism> elements, PermGroup group)
    : field_(std::move(field)), elements_(std::move(elements)), group_(std::move(group)) {}

std::size_t GaloisGroup::identity_index() const {
  return group_.index_of(Permutation::identity(group_.degree()));
}

FieldElement apply(const Automorphism& g, const FieldElement& a) {
  require_same_field(a, g.theta_image);
  return evaluate(a.residue(), g.theta_image);
}

namespace {

FieldElement eval_nf(const NfPoly& p, const FieldElement& at) {
  FieldElement acc(at.field(), Rational(0));
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * at + p[k];
  return acc;
}

Permutation root_action(const SplittingField& e, const FieldElement& theta_image) {
  std::vector<std::size_t> images;
  images.reserve(e.roots.size());
  for (const auto& r : e.roots) {
    const FieldElement s = evaluate(r.residue(), theta_image);
    std::size_t idx = 0;
    try {
      idx = e.root_index(s);
    } catch (const DomainError&) {
      throw SoundnessError("automorphism maps a root outside the root list");
    }
    images.push_back(idx);
  }
  return Permutation(std::move(images));
}

}  // namespace

GaloisGroup galois_group(const SplittingField& e) {
  const FieldTower& tower = e.tower;
  const FieldPtr& E = e.field();
  const std::size_t s = tower.stage_count();
  std::vector<FieldElement> thetas;
  std::vector<FieldElement> images;

  // Extends the embedding stage by stage; each stage generator can only go
  // to a root of the transported stage polynomial.
  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == s) {
      thetas.push_back(tower.theta_from_images(s, images, E));
      return;
    }
    const TowerStage& st = tower.stage(j);
    const FieldElement below = tower.theta_from_images(j, images, E);
    std::vector<FieldElement> c;
    for (const auto& x : st.defining.coeffs()) c.push_back(evaluate(x.residue(), below));
    const NfPoly f(std::move(c));
    if (f.degree() == 1) {
      images.push_back(-f[0] / f[1]);
      self(self, j + 1);
      images.pop_back();
      return;
    }
    for (const auto& r : e.roots) {
      if (!eval_nf(f, r).is_zero()) continue;
      images.push_back(r);
      self(self, j + 1);
      images.pop_back();
    }
  };
  search(search, 0);

  for (const auto& t : thetas)
    audit::require(evaluate(E->min_poly(), t).is_zero(), "galois.theta_image_is_conjugate");
  audit::require(thetas.size() == e.degree(), "galois.order_equals_degree",
                 std::to_string(thetas.size()) + " automorphisms for degree " + std::to_string(e.degree()));

  std::vector<std::pair<Permutation, FieldElement>> pairs;
  for (const auto& t : thetas) pairs.emplace_back(root_action(e, t), t);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    audit::require(pairs[i].first != pairs[i + 1].first, "galois.faithful_on_roots");

  std::vector<Permutation> perms;
  std::vector<Automorphism> autos;
  for (auto& [p, t] : pairs) {
    perms.push_back(p);
    autos.push_back({t, p});
  }
  PermGroup group = PermGroup::from_elements(e.roots.size(), perms);
  audit::require(group.order() == autos.size(), "galois.closed_under_composition");

  // theta-image of g o h is g(h(theta))
  const std::size_t n = autos.size();
  const std::vector<Permutation>& checks = n <= 24 ? group.elements() : group.generators();
  for (const auto& gp : checks) {
    const Automorphism& g = autos[group.index_of(gp)];
    for (const auto& h : autos) {
      const Automorphism& gh = autos[group.index_of(g.root_permutation * h.root_permutation)];
      audit::require(apply(g, h.theta_image) == gh.theta_image, "galois.composition_matches_permutations");
    }
  }
  return GaloisGroup(e, std::move(autos), std::move(group));
}

std::vector<FieldElement> orbit(const GaloisGroup& g, const FieldElement& a) {
  std::vector<FieldElement> out;
  for (const auto& s : g.elements()) out.push_back(apply(s, a));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QPoly orbit_min_poly(const GaloisGroup& g, const FieldElement& a) {
  const FieldPtr& E = g.field();
  NfPoly prod = NfPoly::constant(FieldElement(E, Rational(1)));
  for (const auto& w : orbit(g, a)) prod = prod * NfPoly({-w, FieldElement(E, Rational(1))});
  bool rational = true;
  for (const auto& c : prod.coeffs()) rational = rational && c.is_rational();
  audit::require(rational, "galois.orbit_poly_rational");
  return to_rational(prod);
}

PermGroup subgroup_generated(const GaloisGroup& g, const std::vector<std::size_t>& indices) {
  std::vector<Permutation> gens;
  for (std::size_t i : indices) {
    if (i >= g.order()) throw DomainError("group element index " + std::to_string(i) + " out of range");
    gens.push_back(g.group().elements()[i]);
  }
  return PermGroup::closure(g.group().degree(), gens);
}

namespace {

bool less_elem(const FieldElement& x, const FieldElement& y) { return compare(x, y) < 0; }

std::size_t orbit_size(const GaloisGroup& g, const FieldElement& a) { return orbit(g, a).size(); }

}  // namespace

IntermediateField fixed_field(const GaloisGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g.group())) throw DomainError("fixed_field: H is not a subgroup of the Galois group");
  const FieldPtr& E = g.field();
  const std::size_t d = E->degree();
  linalg::Matrix rows;
  for (const auto& p : h.generators()) {
    const Automorphism& s = g[g.index_of(p)];
    std::vector<linalg::Vec> cols;
    FieldElement power(E, Rational(1));
    for (std::size_t j = 0; j < d; ++j) {
      cols.push_back(power.coordinates());
      power = power * s.theta_image;
    }
    for (std::size_t i = 0; i < d; ++i) {
      linalg::Vec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = cols[j][i] - (i == j ? Rational(1) : Rational(0));
      rows.push_back(std::move(row));
    }
  }
  std::vector<linalg::Vec> kernel;
  if (rows.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      linalg::Vec v(d, Rational(0));
      v[i] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = linalg::kernel(std::move(rows), d);
  }

  IntermediateField b;
  for (const auto& v : kernel) b.basis.push_back(FieldElement::from_coordinates(E, v));
  audit::require(b.basis.size() * h.order() == g.order(), "galois.fixed_field_degree");

  for (long c = 1;; ++c) {
    FieldElement cand(E, Rational(0));
    Rational weight = 1;
    for (const auto& v : b.basis) {
      cand = cand + v * weight;
      weight *= c;
    }
    if (orbit_size(g, cand) == b.degree()) {
      b.primitive = cand;
      break;
    }
    if (c > 1000) throw SoundnessError("fixed_field: no primitive element found");
  }
  b.min_poly = orbit_min_poly(g, b.primitive);
  audit::require(b.min_poly == minimal_polynomial(b.primitive), "galois.orbit_poly_matches_minpoly");
  return b;
}

PermGroup subgroup_fixing(const GaloisGroup& g, const IntermediateField& b) {
  for (const auto& x : b.basis) require_same_field(x, FieldElement::theta(g.field()));
  std::vector<Permutation> fixing;
  for (const auto& s : g.elements()) {
    bool fixes = true;
    for (const auto& x : b.basis) fixes = fixes && apply(s, x) == x;
    if (fixes) fixing.push_back(s.root_permutation);
  }
  PermGroup h = PermGroup::from_elements(g.group().degree(), std::move(fixing));
  audit::require(h.order() * b.degree() == g.order(), "galois.fixing_subgroup_order");
  return h;
}

IntermediateField field_generated_by(const GaloisGroup& g, const std::vector<FieldElement>& generators) {
  std::vector<Permutation> fixing;
  for (const auto& s : g.elements()) {
    bool fixes = true;
    for (const auto& x : generators) fixes = fixes && apply(s, x) == x;
    if (fixes) fixing.push_back(s.root_permutation);
  }
  return fixed_field(g, PermGroup::from_elements(g.group().degree(), std::move(fixing)));
}

Restriction restriction_homomorphism(const GaloisGroup& g, const IntermediateField& b, const QPoly& q,
                                     const NumfieldOptions& options) {
  Restriction out;
  const QPoly qs = squarefree_part(q).monic();
  out.roots = roots_in(qs, g.field(), options);
  if (out.roots.size() != static_cast<std::size_t>(qs.degree()))
    throw DomainError("restriction: " + to_string(q) + " does not split in E");
  const PermGroup fix_b = subgroup_fixing(g, b);
  for (const auto& r : out.roots)
    for (const auto& p : fix_b.elements())
      if (!(apply(g[g.index_of(p)], r) == r))
        throw DomainError("restriction: subfield is not normal, a root of " + to_string(q) + " lies outside it");
  if (field_generated_by(g, out.roots).degree() != b.degree())
    throw DomainError("restriction: subfield is not the splitting field of " + to_string(q));

  std::vector<Permutation> restricted;
  for (const auto& s : g.elements()) {
    std::vector<std::size_t> images;
    for (const auto& r : out.roots) {
      const FieldElement x = apply(s, r);
      auto it = std::lower_bound(out.roots.begin(), out.roots.end(), x, less_elem);
      audit::require(it != out.roots.end() && *it == x, "galois.restriction_permutes_roots");
      images.push_back(static_cast<std::size_t>(it - out.roots.begin()));
    }
    restricted.emplace_back(std::move(images));
  }
  out.image = PermGroup::closure(out.roots.size(), restricted);
  std::vector<Permutation> kernel;
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.map.push_back(out.image.index_of(restricted[i]));
    if (restricted[i].is_identity()) kernel.push_back(g.group().elements()[i]);
  }
  out.kernel = PermGroup::from_elements(g.group().degree(), std::move(kernel));

  audit::require(out.kernel == fix_b, "galois.kernel_is_fixing_subgroup");
  audit::require(is_normal(out.kernel, g.group()), "galois.kernel_normal");
  audit::require(out.image.order() == b.degree(), "galois.restriction_surjective");
  audit::require(out.image.order() * out.kernel.order() == g.order(), "galois.image_kernel_orders");
  const auto& el = g.group().elements();
  bool hom = true;
  for (std::size_t i = 0; i < el.size() && hom; ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      const std::size_t ij = g.index_of(el[i] * el[j]);
      if (out.image.elements()[out.map[ij]] != out.image.elements()[out.map[i]] * out.image.elements()[out.map[j]]) {
        hom = false;
        break;
      }
    }
  audit::require(hom, "galois.restriction_homomorphism");
  return out;
}

std::vector<PermGroup> subgroup_lattice(const PermGroup& g, std::size_t full_bound) {
  std::set<std::vector<Permutation>> seen;
  std::vector<PermGroup> out;
  auto add = [&](PermGroup h) {
    if (seen.insert(h.elements()).second) {
      out.push_back(std::move(h));
      return true;
    }
    return false;
  };
  if (g.order() > full_bound) {
    add(PermGroup(g.degree()));
    for (const auto& x : g.elements()) add(PermGroup::closure(g.degree(), {x}));
  } else {
    add(PermGroup(g.degree()));
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
      const PermGroup h = out[frontier.front()];
      frontier.pop_front();
      for (const auto& x : g.elements()) {
        if (h.contains(x)) continue;
        auto gens = h.generators();
        gens.push_back(x);
        if (add(PermGroup::closure(g.degree(), gens))) frontier.push_back(out.size() - 1);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace galoiskit
