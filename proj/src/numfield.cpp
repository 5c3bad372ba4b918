#include "galoiskit/numfield.hpp"

#include <algorithm>

#include "galoiskit/qpoly.hpp"

namespace galoiskit {

// ------------------------------------------------------------ fields ----

AbsoluteField::AbsoluteField(QPoly min_poly, std::string name)
    : min_poly_(std::move(min_poly)), name_(std::move(name)) {
  if (min_poly_.degree() < 1 || min_poly_.lc() != 1)
    throw DomainError("absolute field needs a monic polynomial of degree >= 1");
  for (const auto& c : min_poly_.coeffs()) {
    if (c.get_den() != 1) {
      integral_.clear();
      break;
    }
    integral_.push_back(c.get_num());
  }
}

namespace {

/// p = numerators / denominator with integer numerators.
Integer clear_denominators(const QPoly& p, std::vector<Integer>& numerators) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  numerators.resize(p.coeffs().size());
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    mpz_divexact(numerators[i].get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    numerators[i] *= c.get_num();
  }
  return den;
}

}  // namespace

QPoly AbsoluteField::multiply(const QPoly& a, const QPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (integral_.empty()) return reduce(a * b);
  std::vector<Integer> x, y;
  const Integer den = clear_denominators(a, x) * clear_denominators(b, y);
  std::vector<Integer> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  const std::size_t d = degree();
  for (std::size_t i = c.size(); i-- > d;) {
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(integral_[j]) != 0) mpz_submul(c[i - d + j].get_mpz_t(), c[i].get_mpz_t(), integral_[j].get_mpz_t());
  }
  c.resize(std::min(c.size(), d));
  std::vector<Rational> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    r[i] = Rational(c[i], den);
    r[i].canonicalize();
  }
  return QPoly(std::move(r));
}

const FieldPtr& AbsoluteField::rationals() {
  static const FieldPtr q = std::make_shared<const AbsoluteField>(qpoly({-1, 1}), "t");
  return q;
}

QPoly AbsoluteField::reduce(const QPoly& p) const {
  const std::size_t d = degree();
  if (p.degree() < static_cast<int>(d)) return p;
  std::vector<Rational> r = p.coeffs();
  const auto& m = min_poly_.coeffs();
  for (std::size_t i = r.size(); i-- > d;) {
    if (sgn(r[i]) == 0) continue;
    const Rational f = r[i];
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(m[j]) != 0) r[i - d + j] -= f * m[j];
  }
  r.resize(d);
  return QPoly(std::move(r));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->min_poly() == b->min_poly();
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) throw DomainError("elements of different fields");
}

// ---------------------------------------------------------- elements ----

FieldElement::FieldElement(FieldPtr field, const QPoly& residue)
    : field_(std::move(field)), residue_(field_->reduce(residue)) {}

FieldElement::FieldElement(FieldPtr field, const Rational& c)
    : field_(std::move(field)), residue_(QPoly::constant(c)) {}

FieldElement FieldElement::theta(const FieldPtr& field) {
  return FieldElement(field, QPoly::x(Rational(1)));
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational: " + to_string());
  return residue_.is_zero() ? Rational(0) : residue_[0];
}

linalg::Vec FieldElement::coordinates() const {
  linalg::Vec v(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < residue_.coeffs().size(); ++i) v[i] = residue_[i];
  return v;
}

FieldElement FieldElement::from_coordinates(const FieldPtr& field, const linalg::Vec& coords) {
  return FieldElement(field, QPoly(coords));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement r;
  r.field_ = a.field_;
  r.residue_ = a.residue_ + b.residue_;
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement r;
  r.field_ = a.field_;
  r.residue_ = a.residue_ - b.residue_;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  FieldElement r;
  r.field_ = a.field_;
  r.residue_ = a.field_->multiply(a.residue_, b.residue_);
  return r;
}

FieldElement operator*(const FieldElement& a, const Rational& s) {
  FieldElement r;
  r.field_ = a.field_;
  r.residue_ = a.residue_ * s;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  auto [g, s, t] = ext_gcd(residue_, field_->min_poly());
  if (g.degree() != 0) throw SoundnessError("defining polynomial is not irreducible");
  return FieldElement(field_, s);
}

FieldElement FieldElement::pow(unsigned long e) const {
  return power(*this, e, FieldElement(field_, Rational(1)));
}

std::string FieldElement::to_string() const { return galoiskit::to_string(residue_, field_->name()); }

int compare(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.residue().coeffs();
  const auto& y = b.residue().coeffs();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational xi = i < x.size() ? x[i] : Rational(0);
    const Rational yi = i < y.size() ? y[i] : Rational(0);
    const int c = cmp(xi, yi);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

FieldElement evaluate(const QPoly& r, const FieldElement& at) {
  if (r.is_zero()) return FieldElement(at.field(), Rational(0));
  FieldElement acc(at.field(), r.lc());
  for (std::size_t i = static_cast<std::size_t>(r.degree()); i-- > 0;)
    acc = acc * at + FieldElement(at.field(), r[i]);
  return acc;
}

NfPoly lift(const QPoly& p, const FieldPtr& field) {
  std::vector<FieldElement> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(field, c);
  return NfPoly(std::move(v));
}

QPoly to_rational(const NfPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.rational_value());
  return QPoly(std::move(v));
}

std::string to_string(const NfPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const auto& c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational_value();
      negative = r < 0;
      if (negative) r = -r;
      if (k == 0 || r != 1) cs = r.get_str();
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += cs;
    if (k > 0) {
      if (!cs.empty()) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// ------------------------------------------------- minimal polynomial ----

QPoly minimal_polynomial(const FieldElement& a) {
  const std::size_t d = a.field()->degree();
  linalg::EchelonBasis basis(d);
  FieldElement power(a.field(), Rational(1));
  for (std::size_t k = 0; k <= d; ++k) {
    if (auto relation = basis.insert(power.coordinates())) {
      std::vector<Rational> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*relation)[i];
      c[k] = 1;
      return QPoly(std::move(c));
    }
    power = power * a;
  }
  throw SoundnessError("minimal_polynomial: powers never became dependent");
}

Rational norm(const FieldElement& a) {
  if (a.is_zero()) return 0;
  return resultant(a.field()->min_poly(), a.residue());
}

namespace {

/// Interpolating polynomial through (x_i, y_i), x_i = 0, 1, 2, ...
QPoly interpolate(const std::vector<Rational>& ys) {
  const std::size_t n = ys.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  // Newton form: dd[0] + dd[1] x + dd[2] x (x-1) + ...
  QPoly acc = QPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    acc = acc * qpoly({-static_cast<long>(i), 1}) + QPoly::constant(dd[i]);
  return acc;
}

/// Search order 1, -1, 2, -2, ..., bound (optionally starting with 0).
std::vector<long> shift_sequence(long bound, bool with_zero) {
  std::vector<long> v;
  if (with_zero) v.push_back(0);
  for (long c = 1; c <= bound; ++c) {
    v.push_back(c);
    v.push_back(-c);
  }
  return v;
}

void sort_factors(std::vector<std::pair<NfPoly, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    const int c = compare(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
}

std::vector<NfPoly> trager_squarefree(const NfPoly& h, const NumfieldOptions& options) {
  const FieldPtr& F = h.lc().field();
  const FieldElement theta = FieldElement::theta(F);
  for (long s : shift_sequence(options.shift_bound, true)) {
    NfPoly shifted = h.taylor_shift(theta * Rational(-s));
    QPoly n = norm(shifted);
    if (!is_squarefree(n)) continue;
    auto fq = factor_over_Q(n, options.factor);
    if (fq.factors.size() == 1) return {h};
    std::vector<NfPoly> out;
    int total = 0;
    for (const auto& [g, mult] : fq.factors) {
      NfPoly piece = gcd(shifted, lift(g, F));
      total += piece.degree();
      out.push_back(piece.taylor_shift(theta * Rational(s)));
    }
    audit::require(total == h.degree(), "trager.degree_conservation");
    return out;
  }
  throw Error("factor_over_number_field: no squarefree norm within shift bound");
}

}  // namespace

QPoly norm(const NfPoly& p) {
  if (p.is_zero()) return {};
  const FieldPtr& F = p.lc().field();
  const std::size_t n = F->degree() * static_cast<std::size_t>(p.degree());
  std::vector<Rational> ys;
  ys.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    ys.push_back(norm(p.eval(FieldElement(F, Rational(static_cast<long>(i))))));
  return interpolate(ys);
}

NfFactorization factor_over_number_field(const NfPoly& p, const NumfieldOptions& options) {
  if (p.is_zero()) throw DomainError("factor_over_number_field: zero polynomial");
  const FieldPtr& F = p.lc().field();
  NfFactorization result{p.lc(), {}};
  if (F->degree() == 1) {
    auto fq = factor_over_Q(to_rational(p), options.factor);
    for (const auto& [g, m] : fq.factors) result.factors.emplace_back(lift(g, F), m);
    return result;
  }
  for (const auto& [g, mult] : squarefree_decomposition(p)) {
    if (g.degree() == 1) {
      result.factors.emplace_back(g, mult);
      continue;
    }
    for (auto& h : trager_squarefree(g, options)) result.factors.emplace_back(std::move(h), mult);
  }
  sort_factors(result.factors);
  return result;
}

// ------------------------------------------------------------- towers ----

FieldTower::FieldTower() : top_(AbsoluteField::rationals()) {}

const FieldPtr& FieldTower::field_at(std::size_t k) const {
  if (k == 0) return AbsoluteField::rationals();
  return stages_.at(k - 1).field;
}

FieldElement FieldTower::embed(const FieldElement& a, std::size_t k) const {
  if (!same_field(a.field(), field_at(k))) throw DomainError("embed: element not in stage field");
  FieldElement x = a;
  for (std::size_t j = k; j < stages_.size(); ++j) x = evaluate(x.residue(), stages_[j].previous_theta);
  if (k == stages_.size()) return FieldElement(top_, a.residue());
  return x;
}

FieldElement FieldTower::theta_from_images(std::size_t k, std::span<const FieldElement> images,
                                           const FieldPtr& target) const {
  FieldElement theta(target, Rational(1));
  for (std::size_t j = 0; j < k; ++j) {
    const auto& st = stages_[j];
    if (st.defining.degree() == 1) continue;
    FieldElement next = images[j] * Rational(st.shift);
    if (field_at(j)->degree() > 1) next = theta + next;
    theta = next;
  }
  return theta;
}

std::vector<std::size_t> FieldTower::stage_degrees() const {
  std::vector<std::size_t> v;
  for (const auto& st : stages_) v.push_back(static_cast<std::size_t>(st.defining.degree()));
  return v;
}

namespace {

/// Coordinates of an element of F[x]/(f) with respect to theta^i x^j.
linalg::Vec relative_coordinates(const NfPoly& a, std::size_t d, std::size_t e) {
  linalg::Vec v(d * e, Rational(0));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    const auto& r = a[j].residue();
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[j * d + i] = r[i];
  }
  return v;
}

}  // namespace

FieldTower adjoin_root(const FieldTower& base, const NfPoly& m_in, const std::string& name,
                       const NumfieldOptions& options, bool verify_irreducible) {
  if (m_in.degree() < 1) throw DomainError("adjoin_root: polynomial of degree < 1");
  const FieldPtr& F = base.top();
  if (!same_field(m_in.lc().field(), F)) throw DomainError("adjoin_root: polynomial not over the top field");
  const NfPoly m = m_in.monic();
  const std::size_t d = F->degree();
  const std::size_t e = static_cast<std::size_t>(m.degree());
  if (d * e > options.degree_cap) throw DegreeCapExceeded(d * e, options.degree_cap, "adjoin_root");

  FieldTower out = base;
  TowerStage st;
  st.name = name;
  st.defining = m;

  if (e == 1) {
    st.field = F;
    st.shift = 0;
    st.previous_theta = FieldElement::theta(F);
    out.generators_.push_back(-m[0]);
    out.stages_.push_back(std::move(st));
    return out;
  }

  if (verify_irreducible) {
    auto f = factor_over_number_field(m, options);
    if (f.factors.size() != 1 || f.factors[0].second != 1)
      throw DomainError("adjoin_root: " + to_string(m) + " is reducible over the base field");
  }

  const std::size_t n = d * e;
  const NfPoly x = NfPoly::x(FieldElement(F, Rational(1)));
  const NfPoly theta = NfPoly::constant(FieldElement::theta(F));
  const auto sequence = d > 1 ? shift_sequence(options.shift_bound, false) : std::vector<long>{1};
  for (long c : sequence) {
    NfPoly gamma = x * FieldElement(F, Rational(c));
    if (d > 1) gamma = gamma + theta;
    std::vector<linalg::Vec> cols;
    cols.reserve(n);
    NfPoly power = NfPoly::constant(FieldElement(F, Rational(1)));
    for (std::size_t k = 0; k < n; ++k) {
      cols.push_back(relative_coordinates(power, d, e));
      power = (power * gamma) % m;
    }
    std::vector<linalg::Vec> rhs{relative_coordinates(power, d, e), relative_coordinates(theta, d, e),
                                 relative_coordinates(x, d, e)};
    auto sol = linalg::solve_columns(cols, rhs);
    if (!sol) continue;
    std::vector<Rational> mp(n + 1);
    for (std::size_t k = 0; k < n; ++k) mp[k] = -(*sol)[0][k];
    mp[n] = 1;
    auto L = std::make_shared<const AbsoluteField>(QPoly(std::move(mp)), F->name());
    st.field = L;
    st.shift = c;
    st.previous_theta = FieldElement::from_coordinates(L, (*sol)[1]);
    const FieldElement generator = FieldElement::from_coordinates(L, (*sol)[2]);
    for (auto& g : out.generators_) g = evaluate(g.residue(), st.previous_theta);
    out.generators_.push_back(generator);

    // the defining relation must hold for the new generator
    FieldElement check(L, Rational(0));
    for (std::size_t k = m.coeffs().size(); k-- > 0;)
      check = check * generator + evaluate(m[k].residue(), st.previous_theta);
    audit::require(check.is_zero(), "numfield.flattening_relation");

    out.top_ = L;
    out.stages_.push_back(std::move(st));
    audit::require(out.degree() == d * e, "numfield.degree_formula");
    return out;
  }
  throw Error("primitive element search exhausted shifts up to " + std::to_string(options.shift_bound));
}

PrimitiveElement primitive_element(const FieldTower& tower) {
  PrimitiveElement pe{tower.top(), std::vector<long>(tower.stage_count(), 0), tower.generator_images()};
  for (std::size_t j = 0; j < tower.stage_count(); ++j) {
    const auto& st = tower.stage(j);
    if (st.defining.degree() == 1) continue;
    if (tower.field_at(j)->degree() == 1) std::fill(pe.combination.begin(), pe.combination.end(), 0);
    pe.combination[j] = st.shift;
  }
  return pe;
}

}  // namespace galoiskit
