#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galoiskit/polynomial.hpp"

namespace galoiskit {

/// unit * prod factor_i^multiplicity_i, factors monic and irreducible, sorted
/// by degree and then by coefficients from x^0 upward.
template <class T>
struct Factorization {
  T unit;
  std::vector<std::pair<Polynomial<T>, unsigned>> factors;

  Polynomial<T> expand() const {
    auto acc = Polynomial<T>::constant(unit);
    for (const auto& [f, m] : factors)
      for (unsigned i = 0; i < m; ++i) acc = acc * f;
    return acc;
  }

  std::size_t factor_count() const noexcept { return factors.size(); }
};

using QFactorization = Factorization<Rational>;

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct FactorOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Number of good primes inspected before choosing the one with the fewest
  /// modular factors.
  unsigned prime_candidates = 5;
};

/// Complete factorization over F_p: squarefree decomposition, distinct-degree
/// splitting and seeded Cantor-Zassenhaus equal-degree splitting.
Factorization<Zp> factor_mod_p(const ZpPoly& p, std::uint64_t seed = kDefaultSeed);

/// Degrees of the irreducible factors of a squarefree polynomial mod p, in
/// ascending order (distinct-degree splitting only).
std::vector<unsigned> factor_degrees_mod_p(const ZpPoly& squarefree);

/// Complete factorization over Q via Hensel lifting and subset recombination.
QFactorization factor_over_Q(const QPoly& p, const FactorOptions& options = {});

bool is_irreducible_over_Q(const QPoly& p);

/// Primes in increasing order, first `count` of them.
const std::vector<std::uint64_t>& small_primes();

}  // namespace galoiskit
