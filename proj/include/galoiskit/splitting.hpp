#pragma once

#include <cstddef>
#include <vector>

#include "galoiskit/numfield.hpp"

namespace galoiskit {

/// Splitting field over Q of a rational polynomial with all of its roots.
struct SplittingField {
  FieldTower tower;
  /// The polynomial as given, and its monic squarefree part.
  QPoly source;
  QPoly squarefree;
  /// Every rational polynomial this field was built to split, in order.
  std::vector<QPoly> sources;
  /// Distinct roots of `squarefree`, canonically ordered.
  std::vector<FieldElement> roots;
  /// root_index[j] is the position in `roots` of the generator of stage j.
  std::vector<std::size_t> generator_roots;

  const FieldPtr& field() const noexcept { return tower.top(); }
  std::size_t degree() const noexcept { return tower.degree(); }
  /// Position of r in `roots`; throws DomainError if r is not a root.
  std::size_t root_index(const FieldElement& r) const;
};

/// Splitting field of p over Q. p is replaced by its squarefree part.
SplittingField splitting_field(const QPoly& p, const NumfieldOptions& options = {});

/// Splitting field of q over `base`, which is itself the splitting field of
/// base.squarefree; the result is the splitting field over Q of the
/// squarefree part of base.squarefree * q.
SplittingField extend_splitting(const SplittingField& base, const QPoly& q, const NumfieldOptions& options = {});

/// [E:Q] for the splitting field E of p.
std::size_t splitting_degree(const QPoly& p, const NumfieldOptions& options = {});

/// Roots in F of a rational polynomial, canonically ordered and without
/// repetition.
std::vector<FieldElement> roots_in(const QPoly& p, const FieldPtr& field, const NumfieldOptions& options = {});

}  // namespace galoiskit
