#include "galoiskit/qpoly.hpp"

#include <sstream>

namespace galoiskit {

QPoly qpoly(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Rational> v;
  v.reserve(coeffs_low_to_high.size());
  for (long c : coeffs_low_to_high) v.emplace_back(c);
  return QPoly(std::move(v));
}

namespace {

template <class T, class Abs, class IsOne, class Str>
std::string render(const Polynomial<T>& p, const std::string& var, Abs abs_of, IsOne is_one,
                   Str str_of, auto is_negative) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p[static_cast<std::size_t>(k)];
    if (FieldTraits<T>::is_zero(c)) continue;
    const bool neg = is_negative(c);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    auto mag = abs_of(c);
    const bool unit = is_one(mag);
    if (k == 0) {
      out << str_of(mag);
      continue;
    }
    if (!unit) out << str_of(mag) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) {
  return render(
      p, var, [](const Rational& c) { return Rational(abs(c)); },
      [](const Rational& c) { return c == 1; }, [](const Rational& c) { return c.get_str(); },
      [](const Rational& c) { return sgn(c) < 0; });
}

std::string to_string(const ZpPoly& p, const std::string& var) {
  return render(
      p, var, [](const Zp& c) { return c; }, [](const Zp& c) { return c.value() == 1; },
      [](const Zp& c) { return std::to_string(c.value()); }, [](const Zp&) { return false; });
}

std::pair<Rational, std::vector<Integer>> content_and_primitive(const QPoly& p) {
  if (p.is_zero()) throw DomainError("content of zero polynomial");
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {make_rational(g, den_lcm), std::move(ints)};
}

QPoly from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

ZpPoly reduce_mod(const std::vector<Integer>& coeffs, std::uint64_t p) {
  PrimeField F(p);
  std::vector<Zp> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(F(c));
  return ZpPoly(std::move(v));
}

bool is_integral(const QPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace galoiskit
