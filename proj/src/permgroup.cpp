#include "galoiskit/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "galoiskit/errors.hpp"

namespace galoiskit {

// -------------------------------------------------------- permutation ----

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw DomainError("cycle point out of range");
      v[c[i]] = c[(i + 1) % c.size()];
    }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (std::size_t len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw DomainError("composing permutations of different degrees");
  Permutation p;
  p.images_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) p.images_[i] = g.images_[h.images_[i]];
  return p;
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g * h * g.inverse() * h.inverse();
}

// -------------------------------------------------------------- groups ----

PermGroup::PermGroup(std::size_t degree) : degree_(degree), elements_{Permutation::identity(degree)} {}

PermGroup PermGroup::closure(std::size_t degree, const std::vector<Permutation>& generators,
                             std::size_t order_bound) {
  PermGroup g(degree);
  for (const auto& s : generators) {
    if (s.degree() != degree) throw DomainError("generator has the wrong degree");
    if (!s.is_identity() && std::find(g.generators_.begin(), g.generators_.end(), s) == g.generators_.end())
      g.generators_.push_back(s);
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation e = frontier.front();
    frontier.pop_front();
    for (const auto& s : g.generators_) {
      Permutation next = s * e;
      if (seen.insert(next).second) {
        if (seen.size() > order_bound)
          throw DomainError("group order exceeds the bound " + std::to_string(order_bound));
        frontier.push_back(std::move(next));
      }
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup claimed(degree);
  claimed.elements_ = elements;
  const auto gens = generating_set(claimed);
  PermGroup g = closure(degree, gens, std::max(elements.size(), kDefaultOrderBound));
  if (g.elements_ != elements) throw DomainError("element list is not closed under composition");
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError("permutation " + p.to_string() + " is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  return std::includes(g.elements_.begin(), g.elements_.end(), elements_.begin(), elements_.end());
}

std::vector<Permutation> generating_set(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermGroup current(g.degree());
  for (const auto& e : g.elements()) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup::closure(g.degree(), gens, std::max(g.order(), kDefaultOrderBound));
    if (current.order() == g.order()) break;
  }
  return gens;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) throw DomainError("is_normal: H is not a subgroup of G");
  for (const auto& s : g.generators()) {
    const Permutation si = s.inverse();
    for (const auto& x : h.elements())
      if (!h.contains(s * x * si)) return false;
  }
  return true;
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comm;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comm.push_back(commutator(gens[i], gens[j]));
  PermGroup d = PermGroup::closure(g.degree(), comm, std::max(g.order(), kDefaultOrderBound));
  // normal closure under conjugation by G
  for (bool grown = true; grown;) {
    grown = false;
    for (const auto& s : gens) {
      const Permutation si = s.inverse();
      for (const auto& x : d.generators()) {
        Permutation c = s * x * si;
        if (d.contains(c)) continue;
        comm.push_back(std::move(c));
        d = PermGroup::closure(g.degree(), comm, std::max(g.order(), kDefaultOrderBound));
        grown = true;
        break;
      }
      if (grown) break;
    }
  }
  return d;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

std::vector<std::size_t> DerivedSeries::orders() const {
  std::vector<std::size_t> v;
  for (const auto& g : series) v.push_back(g.order());
  return v;
}

DerivedSeries is_solvable(const PermGroup& g) {
  DerivedSeries out;
  out.series.push_back(g);
  while (!out.series.back().is_trivial()) {
    PermGroup d = derived_subgroup(out.series.back());
    const bool stalled = d == out.series.back();
    out.series.push_back(std::move(d));
    if (stalled) break;
  }
  out.solvable = out.series.back().is_trivial();
  return out;
}

std::vector<Permutation> coset_representatives(const PermGroup& g, const PermGroup& h) {
  std::set<Permutation> covered;
  std::vector<Permutation> reps;
  for (const auto& x : g.elements()) {
    if (covered.count(x)) continue;
    reps.push_back(x);
    for (const auto& y : h.elements()) covered.insert(x * y);
  }
  return reps;
}

AbelianChainCertificate solvable_via_abelian_chain(const std::vector<PermGroup>& chain) {
  if (chain.empty()) throw DomainError("empty group chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!chain[i + 1].is_subgroup_of(chain[i]))
      throw DomainError("group chain is not descending at step " + std::to_string(i));
  if (!chain.back().is_trivial()) throw DomainError("group chain does not end in the trivial group");

  AbelianChainCertificate cert;
  cert.accepted = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const PermGroup& g = chain[i];
    const PermGroup& h = chain[i + 1];
    ChainStep step;
    step.order = g.order();
    step.sub_order = h.order();
    step.normal = true;
    for (const auto& s : g.generators()) {
      for (const auto& x : h.elements())
        if (!h.contains(s * x * s.inverse())) {
          step.normal = false;
          step.witness = {s, x};
          break;
        }
      if (!step.normal) break;
    }
    step.coset_reps = coset_representatives(g, h);
    step.quotient_abelian = step.normal;
    for (std::size_t a = 0; step.quotient_abelian && a < step.coset_reps.size(); ++a)
      for (std::size_t b = a + 1; b < step.coset_reps.size(); ++b) {
        const auto& x = step.coset_reps[a];
        const auto& y = step.coset_reps[b];
        if (!h.contains((y * x).inverse() * (x * y))) {
          step.quotient_abelian = false;
          step.witness = {x, y};
          break;
        }
      }
    if (!(step.normal && step.quotient_abelian) && cert.accepted) {
      cert.accepted = false;
      cert.failing_step = i;
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

// ------------------------------------------------------- unit groups ----

long UnitGroup::inverse(long a) const {
  for (long b : elements)
    if (multiply(a, b) == 1 % modulus) return b;
  throw DomainError("not a unit");
}

long UnitGroup::element_order(long a) const {
  long o = 1;
  for (long x = a % modulus; x != 1 % modulus; x = multiply(x, a)) ++o;
  return o;
}

UnitGroup unit_group(long n) {
  if (n < 2) throw DomainError("unit_group: modulus must be at least 2");
  UnitGroup u;
  u.modulus = n;
  for (long k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.elements.push_back(k);
  return u;
}

CyclicAutomorphisms aut_cyclic(long n) {
  CyclicAutomorphisms out;
  out.units = unit_group(n);
  for (long m = 0; m < n; ++m) {
    std::vector<long> image(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) image[static_cast<std::size_t>(k)] = (m * k) % n;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    bool bijective = true;
    for (long v : image) {
      if (hit[static_cast<std::size_t>(v)]) bijective = false;
      hit[static_cast<std::size_t>(v)] = true;
    }
    if (!bijective) continue;
    bool additive = true;
    for (long a = 0; a < n && additive; ++a)
      for (long b = 0; b < n; ++b)
        if (image[static_cast<std::size_t>((a + b) % n)] !=
            (image[static_cast<std::size_t>(a)] + image[static_cast<std::size_t>(b)]) % n) {
          additive = false;
          break;
        }
    if (additive) out.multipliers.push_back(m);
  }
  audit::require(out.multipliers == out.units.elements, "permgroup.aut_cyclic_matches_units");
  for (long a : out.multipliers)
    for (long b : out.multipliers)
      for (long k = 0; k < n; ++k)
        audit::require((a * ((b * k) % n)) % n == (out.units.multiply(a, b) * k) % n,
                       "permgroup.aut_cyclic_isomorphism");
  return out;
}

// ---------------------------------------------------------- embeddings ----

std::string AbelianTarget::to_string() const {
  switch (kind) {
    case Kind::Units:
      return "U(" + std::to_string(n) + ")";
    case Kind::Cyclic:
      return "Z_" + std::to_string(n);
    case Kind::CyclicPower:
      return "Z_" + std::to_string(n) + "^" + std::to_string(copies);
  }
  return {};
}

std::vector<TargetElement> target_elements(const AbelianTarget& t) {
  if (t.n < 1) throw DomainError("embedding target modulus must be positive");
  std::vector<TargetElement> out;
  if (t.kind == AbelianTarget::Kind::Units) {
    for (long u : unit_group(t.n).elements) out.push_back({u});
    return out;
  }
  const std::size_t m = t.kind == AbelianTarget::Kind::Cyclic ? 1 : t.copies;
  double size = 1;
  for (std::size_t i = 0; i < m; ++i) size *= static_cast<double>(t.n);
  if (size > 1e6) throw DomainError("embedding target " + t.to_string() + " is too large");
  TargetElement e(m, 0);
  while (true) {
    out.push_back(e);
    std::size_t i = m;
    while (i-- > 0) {
      if (++e[i] < t.n) break;
      e[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

TargetElement target_multiply(const AbelianTarget& t, const TargetElement& a, const TargetElement& b) {
  TargetElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = t.kind == AbelianTarget::Kind::Units ? (a[i] * b[i]) % t.n : (a[i] + b[i]) % t.n;
  return r;
}

std::string to_string(const TargetElement& e) {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
  return s + ")";
}

namespace {

TargetElement target_identity(const AbelianTarget& t) {
  const std::size_t m = t.kind == AbelianTarget::Kind::CyclicPower ? t.copies : 1;
  return TargetElement(m, t.kind == AbelianTarget::Kind::Units ? 1 % t.n : 0);
}

std::size_t target_order(const AbelianTarget& t, const TargetElement& a) {
  const TargetElement id = target_identity(t);
  std::size_t o = 1;
  for (TargetElement x = a; x != id; x = target_multiply(t, x, a)) ++o;
  return o;
}

/// Extends generator images to the whole group; nullopt on inconsistency.
std::optional<std::vector<TargetElement>> extend(const PermGroup& g, const std::vector<Permutation>& gens,
                                                 const std::vector<TargetElement>& gen_images,
                                                 const AbelianTarget& t) {
  std::vector<std::optional<TargetElement>> img(g.order());
  const std::size_t id = g.index_of(Permutation::identity(g.degree()));
  img[id] = target_identity(t);
  std::deque<std::size_t> frontier{id};
  while (!frontier.empty()) {
    const std::size_t e = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::size_t f = g.index_of(gens[j] * g.elements()[e]);
      TargetElement v = target_multiply(t, gen_images[j], *img[e]);
      if (img[f]) {
        if (*img[f] != v) return std::nullopt;
      } else {
        img[f] = std::move(v);
        frontier.push_back(f);
      }
    }
  }
  std::vector<TargetElement> out;
  for (auto& v : img) out.push_back(std::move(*v));
  return out;
}

bool verify_embedding(const PermGroup& g, const std::vector<TargetElement>& img, const AbelianTarget& t) {
  std::set<TargetElement> distinct(img.begin(), img.end());
  if (distinct.size() != img.size()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (img[g.index_of(g.elements()[a] * g.elements()[b])] != target_multiply(t, img[a], img[b]))
        return false;
  return true;
}

}  // namespace

std::optional<Embedding> find_embedding(const PermGroup& g, const AbelianTarget& target) {
  if (!is_abelian(g)) return std::nullopt;
  const auto elements = target_elements(target);
  if (elements.size() < g.order() || elements.size() % g.order() != 0) return std::nullopt;
  const auto gens = generating_set(g);
  std::vector<std::vector<TargetElement>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& e : elements)
      if (target_order(target, e) == gens[j].order()) candidates[j].push_back(e);

  std::vector<TargetElement> choice(gens.size());
  std::optional<Embedding> found;
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == gens.size()) {
      auto img = extend(g, gens, choice, target);
      if (!img || !verify_embedding(g, *img, target)) return false;
      found = Embedding{target, std::move(*img)};
      return true;
    }
    for (const auto& c : candidates[j]) {
      choice[j] = c;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  if (found) audit::require(verify_embedding(g, found->images, target), "permgroup.embedding_verified");
  return found;
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(n);
  std::vector<std::size_t> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return PermGroup::closure(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup::closure(n, gens);
}

}  // namespace galoiskit
