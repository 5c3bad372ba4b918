#pragma once

#include <cstddef>
#include <vector>

#include "galoiskit/permgroup.hpp"
#include "galoiskit/splitting.hpp"

namespace galoiskit {

struct Automorphism {
  FieldElement theta_image;
  Permutation root_permutation;
};

/// G(E, Q) for a splitting field E. elements()[i] corresponds to
/// group().elements()[i].
class GaloisGroup {
 public:
  GaloisGroup(SplittingField field, std::vector<Automorphism> elements, PermGroup group);

  const SplittingField& splitting() const noexcept { return field_; }
  const FieldPtr& field() const noexcept { return field_.field(); }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Automorphism>& elements() const noexcept { return elements_; }
  const Automorphism& operator[](std::size_t i) const { return elements_.at(i); }
  const PermGroup& group() const noexcept { return group_; }
  std::size_t identity_index() const;
  std::size_t index_of(const Permutation& p) const { return group_.index_of(p); }

 private:
  SplittingField field_;
  std::vector<Automorphism> elements_;
  PermGroup group_;
};

/// Enumerates G(E, Q) and checks #G = [E:Q].
GaloisGroup galois_group(const SplittingField& e);

FieldElement apply(const Automorphism& g, const FieldElement& a);

/// {g(a) : g in G}, canonically ordered.
std::vector<FieldElement> orbit(const GaloisGroup& g, const FieldElement& a);

/// prod over the orbit of (x - w), checked to have rational coefficients.
QPoly orbit_min_poly(const GaloisGroup& g, const FieldElement& a);

/// Subfield of E given by a canonical Q-basis and a primitive element.
struct IntermediateField {
  std::vector<FieldElement> basis;
  FieldElement primitive;
  QPoly min_poly;
  std::size_t degree() const noexcept { return basis.size(); }
};

/// The subgroup generated by the elements with the given indices.
PermGroup subgroup_generated(const GaloisGroup& g, const std::vector<std::size_t>& indices);

/// Elements of E fixed by every element of H.
IntermediateField fixed_field(const GaloisGroup& g, const PermGroup& h);

/// Elements of G fixing every basis element of B.
PermGroup subgroup_fixing(const GaloisGroup& g, const IntermediateField& b);

/// The subfield Q(generators) of E.
IntermediateField field_generated_by(const GaloisGroup& g, const std::vector<FieldElement>& generators);

struct Restriction {
  /// Roots of the defining polynomial of B, canonically ordered; image
  /// permutations act on their indices.
  std::vector<FieldElement> roots;
  PermGroup image;
  /// map[i] = index in image of the restriction of G's element i.
  std::vector<std::size_t> map;
  PermGroup kernel;
};

/// Restriction G(E,Q) -> G(B,Q) where B is the splitting field of q inside E.
/// Throws DomainError when B is not normal, i.e. not generated by all roots of
/// q lying in E.
Restriction restriction_homomorphism(const GaloisGroup& g, const IntermediateField& b, const QPoly& q,
                                     const NumfieldOptions& options = {});

/// All subgroups of a group of order at most `full_bound`; larger groups only
/// get their cyclic subgroups. Sorted by order, then elements.
std::vector<PermGroup> subgroup_lattice(const PermGroup& g, std::size_t full_bound = 24);

}  // namespace galoiskit
