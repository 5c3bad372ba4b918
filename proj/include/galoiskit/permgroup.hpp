#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galoiskit {

/// Bijection of {0, ..., n-1}; entry i of images() is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Builds a permutation from disjoint cycles on n points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// Cycle notation on 0-based points, "()" for the identity.
  std::string to_string() const;

  /// (g * h)(i) = g(h(i)).
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::size_t> images_;
};

Permutation commutator(const Permutation& g, const Permutation& h);

inline constexpr std::size_t kDefaultOrderBound = 5040;

/// Finite permutation group given by the full sorted element list.
class PermGroup {
 public:
  /// The trivial group on n points.
  explicit PermGroup(std::size_t degree = 0);

  /// Breadth-first closure of the generators.
  static PermGroup closure(std::size_t degree, const std::vector<Permutation>& generators,
                           std::size_t order_bound = kDefaultOrderBound);

  /// Group from an element list that the caller claims is closed; verified.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  /// Position of p in elements(); throws if absent.
  std::size_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Small generating set chosen greedily from the canonical element order.
std::vector<Permutation> generating_set(const PermGroup& g);

/// True iff g H g^-1 = H for all g in G. H must be a subgroup of G.
bool is_normal(const PermGroup& h, const PermGroup& g);

PermGroup derived_subgroup(const PermGroup& g);

bool is_abelian(const PermGroup& g);

struct DerivedSeries {
  bool solvable = false;
  std::vector<PermGroup> series;  // G, G', G'', ... up to the fixed point
  std::vector<std::size_t> orders() const;
};

DerivedSeries is_solvable(const PermGroup& g);

/// Left coset representatives of H in G, first element of each coset in
/// canonical order.
std::vector<Permutation> coset_representatives(const PermGroup& g, const PermGroup& h);

struct ChainStep {
  std::size_t order = 0;
  std::size_t sub_order = 0;
  bool normal = false;
  bool quotient_abelian = false;
  std::vector<Permutation> coset_reps;
  /// For a failure: a non-normalizing element or a non-commuting pair of
  /// coset representatives.
  std::vector<Permutation> witness;
};

struct AbelianChainCertificate {
  bool accepted = false;
  std::vector<ChainStep> steps;
  std::optional<std::size_t> failing_step;
};

/// Checks G_0 > G_1 > ... > G_n = 1 for normality and abelian quotients.
AbelianChainCertificate solvable_via_abelian_chain(const std::vector<PermGroup>& chain);

/// Multiplicative group of residues coprime to n.
struct UnitGroup {
  long modulus = 2;
  std::vector<long> elements;
  long multiply(long a, long b) const { return (a * b) % modulus; }
  long inverse(long a) const;
  long element_order(long a) const;
};

UnitGroup unit_group(long n);

struct CyclicAutomorphisms {
  UnitGroup units;
  /// multipliers[i] is m for the automorphism k -> m k; it corresponds to
  /// units.elements[i].
  std::vector<long> multipliers;
};

/// All automorphisms of the additive group Z_n, found by exhausting additive
/// self-maps and checked to be isomorphic to U(n).
CyclicAutomorphisms aut_cyclic(long n);

/// Target of an embedding: U(n), Z_n, or the direct sum of m copies of Z_n.
struct AbelianTarget {
  enum class Kind { Units, Cyclic, CyclicPower };
  Kind kind = Kind::Cyclic;
  long n = 1;
  std::size_t copies = 1;

  static AbelianTarget units(long n) { return {Kind::Units, n, 1}; }
  static AbelianTarget cyclic(long n) { return {Kind::Cyclic, n, 1}; }
  static AbelianTarget cyclic_power(long n, std::size_t m) { return {Kind::CyclicPower, n, m}; }

  std::string to_string() const;
};

using TargetElement = std::vector<long>;

struct Embedding {
  AbelianTarget target;
  /// images[i] is the image of g.elements()[i].
  std::vector<TargetElement> images;
};

std::vector<TargetElement> target_elements(const AbelianTarget& t);
TargetElement target_multiply(const AbelianTarget& t, const TargetElement& a, const TargetElement& b);
std::string to_string(const TargetElement& e);

/// Injective homomorphism G -> target or nullopt. Every returned embedding
/// has been checked on all pairs.
std::optional<Embedding> find_embedding(const PermGroup& g, const AbelianTarget& target);

/// Classical groups used in tests and witnesses.
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);

}  // namespace galoiskit
