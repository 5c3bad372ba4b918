#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galoiskit/factor.hpp"
#include "galoiskit/linalg.hpp"
#include "galoiskit/polynomial.hpp"

namespace galoiskit {

/// Q(theta) = Q[t] / (min_poly(t)). Shared by pointer; immutable.
class AbsoluteField {
 public:
  /// `min_poly` must be monic and irreducible over Q; callers that build
  /// fields guarantee this.
  AbsoluteField(QPoly min_poly, std::string name = "t");

  /// The field Q itself, presented as Q[t]/(t - 1).
  static const std::shared_ptr<const AbsoluteField>& rationals();

  const QPoly& min_poly() const noexcept { return min_poly_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(min_poly_.degree()); }
  const std::string& name() const noexcept { return name_; }

  /// Remainder of p modulo min_poly.
  QPoly reduce(const QPoly& p) const;

  /// Product of two reduced residues, reduced.
  QPoly multiply(const QPoly& a, const QPoly& b) const;

 private:
  QPoly min_poly_;
  std::string name_;
  // integer coefficients of min_poly when it has no denominators
  std::vector<Integer> integral_;
};

using FieldPtr = std::shared_ptr<const AbsoluteField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of an AbsoluteField, stored as a residue polynomial in theta of
/// degree below [F:Q].
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, const QPoly& residue);
  FieldElement(FieldPtr field, const Rational& c);

  static FieldElement theta(const FieldPtr& field);

  const FieldPtr& field() const noexcept { return field_; }
  const QPoly& residue() const noexcept { return residue_; }

  bool is_zero() const noexcept { return residue_.is_zero(); }
  bool is_rational() const noexcept { return residue_.degree() <= 0; }
  Rational rational_value() const;

  /// Coordinates in the power basis 1, theta, ..., theta^(d-1).
  linalg::Vec coordinates() const;
  static FieldElement from_coordinates(const FieldPtr& field, const linalg::Vec& coords);

  FieldElement operator-() const { return {field_, -residue_}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& s);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.residue_ == b.residue_;
  }

  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  QPoly residue_;
};

/// Canonical element ordering: coordinates compared from theta^0 upward.
int compare(const FieldElement& a, const FieldElement& b);

template <>
struct FieldTraits<FieldElement> {
  static bool is_zero(const FieldElement& a) { return a.is_zero(); }
  static FieldElement from_int(const FieldElement& like, long v) {
    return FieldElement(like.field(), Rational(v));
  }
  static FieldElement inverse(const FieldElement& a) { return a.inverse(); }
  static bool same_field(const FieldElement& a, const FieldElement& b) {
    return galoiskit::same_field(a.field(), b.field());
  }
  static int compare(const FieldElement& a, const FieldElement& b) { return galoiskit::compare(a, b); }
};

using NfPoly = Polynomial<FieldElement>;
using NfFactorization = Factorization<FieldElement>;

/// r(at): substitutes an element for the variable of a rational polynomial.
FieldElement evaluate(const QPoly& r, const FieldElement& at);

/// The rational polynomial p viewed over F.
NfPoly lift(const QPoly& p, const FieldPtr& field);

/// Inverse of lift; throws if some coefficient is irrational.
QPoly to_rational(const NfPoly& p);

std::string to_string(const NfPoly& p, const std::string& var = "x");

struct NumfieldOptions {
  std::size_t degree_cap = 64;
  long shift_bound = 20;
  FactorOptions factor{};
};

/// Minimal polynomial over Q by linear algebra on 1, a, a^2, ...
QPoly minimal_polynomial(const FieldElement& a);

/// Norm from F to Q of an element.
Rational norm(const FieldElement& a);

/// Norm of a polynomial over F: prod over embeddings of the conjugate
/// polynomials, computed by evaluation and interpolation.
QPoly norm(const NfPoly& p);

/// Trager's algorithm: complete factorization over F.
NfFactorization factor_over_number_field(const NfPoly& p, const NumfieldOptions& options = {});

/// One adjunction step of a tower.
struct TowerStage {
  std::string name;
  NfPoly defining;             // monic, over the previous stage's field
  FieldPtr field;              // flattened field after this stage
  long shift = 0;              // theta_k = [theta_{k-1}] + shift * g_k; 0 for linear stages
  FieldElement previous_theta; // theta_{k-1} written in `field`
};

/// Increasing fields Q = F_0 c F_1 c ... c F_s, each stage adjoining a root of
/// an irreducible polynomial over the one below, flattened to a primitive
/// element after every step.
class FieldTower {
 public:
  FieldTower();

  const FieldPtr& top() const noexcept { return top_; }
  std::size_t degree() const noexcept { return top_->degree(); }
  std::size_t stage_count() const noexcept { return stages_.size(); }
  const TowerStage& stage(std::size_t i) const { return stages_.at(i); }
  const std::vector<TowerStage>& stages() const noexcept { return stages_; }

  /// F_k for k = 0 .. stage_count().
  const FieldPtr& field_at(std::size_t k) const;

  /// Stage generators written in the top field.
  const std::vector<FieldElement>& generator_images() const noexcept { return generators_; }

  /// Maps an element of F_k into the top field.
  FieldElement embed(const FieldElement& a, std::size_t k) const;

  /// theta_k expressed through images of the generators g_1..g_k in some
  /// target field. Used to extend homomorphisms stage by stage.
  FieldElement theta_from_images(std::size_t k, std::span<const FieldElement> images,
                                 const FieldPtr& target) const;

  /// Degree of every stage, product = degree().
  std::vector<std::size_t> stage_degrees() const;

  friend FieldTower adjoin_root(const FieldTower& base, const NfPoly& m, const std::string& name,
                                const NumfieldOptions& options, bool verify_irreducible);

 private:
  FieldPtr top_;
  std::vector<TowerStage> stages_;
  std::vector<FieldElement> generators_;
};

/// Adjoins a root of m (made monic) to the top of the tower. m must be
/// irreducible over the top field; with `verify_irreducible` this is checked
/// by factoring over the number field.
FieldTower adjoin_root(const FieldTower& base, const NfPoly& m, const std::string& name,
                       const NumfieldOptions& options = {}, bool verify_irreducible = true);

/// Flattened description of a tower: the primitive element as an integer
/// combination of generators and each generator written in theta.
struct PrimitiveElement {
  FieldPtr field;
  std::vector<long> combination;  // theta = sum combination[i] * g_i
  std::vector<FieldElement> generator_images;
};

PrimitiveElement primitive_element(const FieldTower& tower);

/// Error unless a and b live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace galoiskit
