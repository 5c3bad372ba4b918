#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "galoiskit/errors.hpp"

namespace galoiskit {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p, p < 2^32.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, std::uint64_t modulus)
      : p_(modulus), v_(reduce(value, modulus)) {}

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Zp operator+(const Zp& o) const { return raw(v_ + o.v_ >= p_ ? v_ + o.v_ - p_ : v_ + o.v_); }
  Zp operator-(const Zp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Zp operator*(const Zp& o) const { return raw(v_ * o.v_ % p_); }
  Zp operator/(const Zp& o) const { return *this * o.inverse(); }
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }

  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

  bool operator==(const Zp& o) const noexcept { return v_ == o.v_ && p_ == o.p_; }
  std::strong_ordering operator<=>(const Zp& o) const noexcept { return v_ <=> o.v_; }

 private:
  static std::uint64_t reduce(std::int64_t value, std::uint64_t modulus) {
    auto m = static_cast<std::int64_t>(modulus);
    auto r = value % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  Zp raw(std::uint64_t v) const {
    Zp z;
    z.p_ = p_;
    z.v_ = v;
    return z;
  }

  std::uint64_t p_ = 2;
  std::uint64_t v_ = 0;
};

/// Checks primality once and hands out elements of F_p.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t modulus() const noexcept { return p_; }
  Zp operator()(std::int64_t v) const { return Zp(v, p_); }
  Zp operator()(const Integer& v) const;

 private:
  std::uint64_t p_;
};

/// Coefficient-field hooks used by the generic polynomial code. Each
/// specialization produces constants "like" an existing element so that
/// field context (modulus, number field) is carried along.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational from_int(const Rational&, long v) { return Rational(v); }
  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw DomainError("inverse of zero");
    return Rational(1) / a;
  }
  static bool same_field(const Rational&, const Rational&) { return true; }
  static int compare(const Rational& a, const Rational& b) { return cmp(a, b); }
};

template <>
struct FieldTraits<Zp> {
  static bool is_zero(const Zp& a) { return a.is_zero(); }
  static Zp from_int(const Zp& like, long v) { return Zp(v, like.modulus()); }
  static Zp inverse(const Zp& a) { return a.inverse(); }
  static bool same_field(const Zp& a, const Zp& b) { return a.modulus() == b.modulus(); }
  static int compare(const Zp& a, const Zp& b) {
    return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
  }
};

}  // namespace galoiskit
