#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "galoiskit/errors.hpp"
#include "galoiskit/scalar.hpp"

namespace galoiskit {

/// Dense univariate polynomial over a field T. Coefficient i multiplies x^i.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
template <class T>
class Polynomial {
 public:
  using Traits = FieldTraits<T>;
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  /// c * x^k
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, Traits::from_int(c, 0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  /// The polynomial x over the field of `like`.
  static Polynomial x(const T& like) { return monomial(Traits::from_int(like, 1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  const T& lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  T eval(const T& at) const {
    if (c_.empty()) return Traits::from_int(at, 0);
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  Polynomial operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<T> v(big);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_same_field(a, b);
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, Traits::from_int(a.c_[0], 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const T& s) {
    if (Traits::is_zero(s)) return {};
    std::vector<T> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * Traits::inverse(lc());
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(c_[i] * Traits::from_int(c_[i], static_cast<long>(i)));
    return Polynomial(std::move(v));
  }

  /// p(x^k)
  Polynomial compose_power(unsigned k) const {
    if (k == 0) throw DomainError("compose_power requires k >= 1");
    if (is_zero()) return {};
    std::vector<T> v((c_.size() - 1) * k + 1, Traits::from_int(c_[0], 0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Polynomial(std::move(v));
  }

  /// p(x + a)
  Polynomial taylor_shift(const T& a) const {
    if (is_zero()) return {};
    Polynomial lin(std::vector<T>{a, Traits::from_int(a, 1)});
    Polynomial acc = constant(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  /// Canonical ordering: degree first, then coefficients from x^0 upward.
  friend int compare(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int c = Traits::compare(a.c_[i], b.c_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  static void check_same_field(const Polynomial& a, const Polynomial& b) {
    if (!a.c_.empty() && !b.c_.empty() && !Traits::same_field(a.c_[0], b.c_[0]))
      throw DomainError("polynomials over different coefficient fields");
  }

  std::vector<T> c_;
};

using QPoly = Polynomial<Rational>;
using ZpPoly = Polynomial<Zp>;

/// (quotient, remainder) with deg(remainder) < deg(divisor).
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divrem(const Polynomial<T>& a, const Polynomial<T>& b) {
  using Tr = FieldTraits<T>;
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const T inv_lc = Tr::inverse(bc.back());
  std::vector<T> q(r.size() - db, Tr::from_int(r[0], 0));
  for (std::size_t i = r.size(); i-- > db;) {
    if (Tr::is_zero(r[i])) continue;
    T f = r[i] * inv_lc;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * bc[j];
  }
  r.resize(db);
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

template <class T>
Polynomial<T> operator%(const Polynomial<T>& a, const Polynomial<T>& b) {
  return divrem(a, b).second;
}

/// Quotient of an exact division; throws if the remainder is nonzero.
template <class T>
Polynomial<T> exact_quotient(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw SoundnessError("exact_quotient: nonzero remainder");
  return q;
}

/// Monic greatest common divisor.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> ext_gcd(const Polynomial<T>& a,
                                                                 const Polynomial<T>& b) {
  using P = Polynomial<T>;
  using Tr = FieldTraits<T>;
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  const T& like = a.is_zero() ? b.lc() : a.lc();
  P r0 = a, r1 = b;
  P s0 = P::constant(Tr::from_int(like, 1)), s1;
  P t0, t1 = P::constant(Tr::from_int(like, 1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    P t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  T inv = Tr::inverse(r0.lc());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Squarefree part p / gcd(p, p'), made monic. Characteristic zero only.
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (p.degree() == 0) return p.monic();
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

/// Yun's squarefree decomposition over a field of characteristic zero:
/// monic p = prod f_i^i, f_i squarefree and pairwise coprime. Only
/// nonconstant f_i are returned, paired with their multiplicity.
template <class T>
std::vector<std::pair<Polynomial<T>, unsigned>> squarefree_decomposition(const Polynomial<T>& p) {
  using P = Polynomial<T>;
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
  std::vector<std::pair<P, unsigned>> out;
  if (p.degree() == 0) return out;
  P f = p.monic();
  P d = f.derivative();
  P a = gcd(f, d);
  P b = exact_quotient(f, a);
  P c = exact_quotient(d, a);
  P e = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    P g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    P nb = exact_quotient(b, g);
    c = exact_quotient(e, g);
    b = std::move(nb);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T>
T power(T base, unsigned long e, const T& one) {
  T result = one;
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e != 0) base = base * base;
  }
  return result;
}

/// Resultant with the Sylvester-determinant convention
///   res(p, q) = lc(p)^deg(q) * prod q(alpha_i)  over roots alpha_i of p
///             = (-1)^(deg p * deg q) * lc(q)^deg(p) * prod p(beta_j).
template <class T>
T resultant(Polynomial<T> a, Polynomial<T> b) {
  using Tr = FieldTraits<T>;
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant with zero polynomial");
  const T one = Tr::from_int(a.lc(), 1);
  T acc = one;
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * power(b.lc(), static_cast<unsigned long>(m), one);
    if (m == 0) return acc * power(a.lc(), static_cast<unsigned long>(n), one);
    auto r = divrem(a, b).second;
    if (r.is_zero()) return Tr::from_int(one, 0);
    const int d = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    acc = acc * power(b.lc(), static_cast<unsigned long>(m - d), one);
    a = std::move(b);
    b = std::move(r);
  }
}

/// base^e mod modulus.
template <class T>
Polynomial<T> pow_mod(Polynomial<T> base, Integer e, const Polynomial<T>& modulus) {
  using P = Polynomial<T>;
  P result = P::constant(FieldTraits<T>::from_int(modulus.lc(), 1)) % modulus;
  base = base % modulus;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % modulus;
    e >>= 1;
    if (e > 0) base = (base * base) % modulus;
  }
  return result;
}

}  // namespace galoiskit
