#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "galoiskit/polynomial.hpp"

namespace galoiskit {

/// Rational polynomial from coefficients listed from x^0 upward.
QPoly qpoly(std::initializer_list<long> coeffs_low_to_high);

/// Renders e.g. "x^3 - 3/2*x + 1". Round-trips through the expression parser.
std::string to_string(const QPoly& p, const std::string& var = "x");
std::string to_string(const ZpPoly& p, const std::string& var = "x");

/// p = content * primitive with primitive in Z[x], positive leading
/// coefficient and coprime coefficients.
std::pair<Rational, std::vector<Integer>> content_and_primitive(const QPoly& p);

QPoly from_integers(const std::vector<Integer>& coeffs);
ZpPoly reduce_mod(const std::vector<Integer>& coeffs, std::uint64_t p);

/// True when every coefficient is an integer.
bool is_integral(const QPoly& p);

/// Discriminant-free separability test: gcd(p, p') = 1.
bool is_squarefree(const QPoly& p);

}  // namespace galoiskit
