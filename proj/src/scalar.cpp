#include "galoiskit/scalar.hpp"

namespace galoiskit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in F_p");
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(v_);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Zp(s0, p_);
}

Zp Zp::pow(std::uint64_t e) const {
  Zp result(1, p_), base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32U)) throw DomainError("prime modulus too large");
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

Zp PrimeField::operator()(const Integer& v) const {
  Integer r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Zp(static_cast<std::int64_t>(r.get_ui()), p_);
}

}  // namespace galoiskit
