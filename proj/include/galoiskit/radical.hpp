#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galoiskit/expr.hpp"
#include "galoiskit/galois.hpp"

namespace galoiskit {

/// One radical adjunction a^k = b with b written in the earlier radicals
/// r1 .. r(i-1).
struct RadicalStageSpec {
  unsigned k = 2;
  std::string radicand;
};

struct RadicalStage {
  unsigned k = 2;
  Expression radicand;
  /// b_i in the top field of the tower below this stage.
  FieldElement b;
  /// Irreducible factor of x^k - b whose root was adjoined.
  NfPoly factor;
};

/// Q = R_0 c R_1 c ... c R_n with one tower stage per radical.
struct RadicalChain {
  std::vector<RadicalStage> stages;
  FieldTower tower;
  /// a_1 .. a_n written in the top field.
  std::vector<FieldElement> radicals;
};

RadicalChain realize_chain(const std::vector<RadicalStageSpec>& description, const NumfieldOptions& options = {});

/// Data of E_{i+1} = splitting field over E_i of Q_b(x^k).
struct KummerStage {
  unsigned k = 2;
  /// Image of the radicand b_i in E_i, its orbit under G(E_i, Q) and
  /// Q_b(x) = prod (x - w).
  FieldElement radicand;
  std::vector<FieldElement> orbit;
  QPoly orbit_poly;
  QPoly kummer_poly;  // Q_b(x^k)
  /// Images of a_1 .. a_i in E_{i+1}: the embedding R_i -> E_{i+1}.
  std::vector<FieldElement> radical_images;
};

struct NormalRadicalTower {
  unsigned long N = 0;
  std::vector<unsigned> degrees;        // characteristic degrees k_i
  std::vector<SplittingField> levels;   // E_0 = Q, E_1, ..., E_{n+1}
  std::vector<KummerStage> stages;      // stages[i] builds levels[i + 2]
};

/// Builds the nested normal radical extensions containing the chain.
NormalRadicalTower normalize_chain(const RadicalChain& chain, const NumfieldOptions& options = {});

struct ConditionCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct TowerVerification {
  std::vector<ConditionCheck> checks;
  bool all_passed() const;
};

/// Re-checks the defining conditions of a nested set of normal radical
/// extensions without trusting how the tower was built: every polynomial
/// claimed to split is evaluated at the stored roots, and those roots must
/// generate the whole field.
TowerVerification verify_nested_normal_radical(const NormalRadicalTower& t);

/// Dimension of the Q-algebra generated by the given elements.
std::size_t generated_degree(const std::vector<FieldElement>& generators);

struct AssociatedChain {
  GaloisGroup group;        // G(E_top, Q)
  std::vector<PermGroup> chain;  // G_i fixing E_i pointwise
};

AssociatedChain associated_group_chain(const NormalRadicalTower& t);

/// Embedding checks for the abelian layers of a normalized tower.
struct LayerEmbedding {
  std::string layer;        // "E0 < E1", ...
  std::size_t group_order = 0;
  AbelianTarget target;
  std::optional<Embedding> embedding;
  bool abelian = false;
};

/// G(E_1, Q) into U(N) and every G(E_{i+1}, E_i), i >= 1, into the direct sum
/// of #O_i copies of Z_{k_i}.
std::vector<LayerEmbedding> abelian_layers(const NormalRadicalTower& t, const AssociatedChain& groups);

// ----------------------------------------------------------- verdicts ----

std::vector<std::uint64_t> default_witness_primes();

struct FrobeniusObservation {
  std::uint64_t prime = 0;
  std::vector<std::string> factors;    // factorization mod p
  std::vector<std::size_t> cycle_type; // decreasing
};

struct QuinticWitness {
  std::vector<FrobeniusObservation> observations;
  std::vector<std::uint64_t> skipped_primes;  // dividing the discriminant or leading coefficient
  std::vector<std::string> candidates;        // transitive groups consistent with the observations
  bool nonsolvable = false;                   // every candidate is A5 or S5
  std::optional<std::string> identified;      // the unique remaining candidate
};

/// Frobenius cycle types of an irreducible quintic matched against the
/// transitive subgroups of S5.
QuinticWitness quintic_group_witness(const QPoly& p, const std::vector<std::uint64_t>& primes,
                                     const FactorOptions& options = {});

enum class Verdict { SolvableGroup, NotSolvableByRadicals };

std::string to_string(Verdict v);

struct VerdictReport {
  Verdict verdict = Verdict::SolvableGroup;
  std::string method;  // "splitting-field" or "quintic-cycle-types"
  std::optional<QuinticWitness> quintic;
  std::size_t group_order = 0;
  std::optional<std::size_t> splitting_degree;
  std::vector<Permutation> group_generators;
  DerivedSeries series;
  std::optional<AbelianChainCertificate> certificate;
  std::string note;
};

struct VerdictOptions {
  NumfieldOptions numfield{};
  std::vector<std::uint64_t> primes = default_witness_primes();
};

VerdictReport necessary_condition_verdict(const QPoly& p, const VerdictOptions& options = {});

}  // namespace galoiskit
