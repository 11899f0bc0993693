#ifndef FSIG_FUNCTION_SPACE_HPP
#define FSIG_FUNCTION_SPACE_HPP

#include <vector>

#include "fsig/measure.hpp"
#include "fsig/quotient.hpp"
#include "fsig/rational.hpp"

namespace fsig {

enum class SpaceTag { L0, L2 };

/// An element f• of L⁰(μ) or L²(μ) over a finite measure space.
///
/// Values are stored on every point, with every point of a null block set to
/// zero, so two classes are equal exactly when their value vectors are.
class FnClass {
 public:
  /// Canonicalizes `raw`; throws NotMeasurable if raw is not constant on the
  /// blocks of Σ, NotSquareIntegrable for an L² tag with infinite norm.
  static FnClass canonical(SpaceRef space, std::vector<Rational> raw, SpaceTag tag = SpaceTag::L0);
  static FnClass zero(SpaceRef space, SpaceTag tag = SpaceTag::L0);
  /// The class of the constant function 1.
  static FnClass one(SpaceRef space, SpaceTag tag = SpaceTag::L0);
  /// χF for measurable F.
  static FnClass indicator(SpaceRef space, const Subset& set, SpaceTag tag = SpaceTag::L0);

  const SpaceRef& space() const noexcept { return space_; }
  SpaceTag tag() const noexcept { return tag_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t point) const { return values_.at(point); }
  std::size_t size() const noexcept { return values_.size(); }
  /// Same class viewed in the other space (L² → L⁰ always; L⁰ → L² checks integrability).
  FnClass with_tag(SpaceTag tag) const;

  friend bool operator==(const FnClass& a, const FnClass& b);

 private:
  FnClass(SpaceRef space, std::vector<Rational> values, SpaceTag tag);

  SpaceRef space_;
  std::vector<Rational> values_;
  SpaceTag tag_ = SpaceTag::L0;
};

FnClass canonical_class(SpaceRef space, std::vector<Rational> raw, SpaceTag tag = SpaceTag::L0);

/// T_φ g• = (g∘φ)•. Requires a non-singular φ for L⁰ (NotNonsingular) and an
/// inverse-measure-preserving φ for L² (NotIMP).
FnClass pullback(const MeasurableMap& phi, const FnClass& g);

/// h̄ f• = (h∘f)• for the linear amplitude map h(x) = c·x.
FnClass amplitude_op(const Rational& c, const FnClass& f);

// Pointwise Riesz-space and ring operations; operands must share a space and tag.
FnClass add(const FnClass& f, const FnClass& g);
FnClass sub(const FnClass& f, const FnClass& g);
FnClass neg(const FnClass& f);
FnClass scale(const Rational& c, const FnClass& f);
FnClass mul(const FnClass& f, const FnClass& g);
FnClass sup(const FnClass& f, const FnClass& g);
FnClass inf(const FnClass& f, const FnClass& g);
FnClass abs(const FnClass& f);
/// f• ≤ g• (a.e. order).
bool leq(const FnClass& f, const FnClass& g);

/// ∫|f|² dμ, exact (infinite when a point of infinite weight carries a nonzero value).
ExtRational norm2_squared(const FnClass& f);
/// √∫|f|², evaluated in floating point for reporting only.
double norm2(const FnClass& f);
/// ∫ f g dμ; throws NotSquareIntegrable if an infinite-weight point contributes.
Rational inner(const FnClass& f, const FnClass& g);

/// Element of L⁰(𝔅) for a finite measure algebra, stored as one value per atom.
/// The threshold family a ↦ ⟦u > a⟧ is the union of atoms with value > a.
class DualElement {
 public:
  DualElement(MeasureAlgebra algebra, std::vector<Rational> atom_values);

  const MeasureAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& atom_values() const noexcept { return values_; }
  /// ⟦u > a⟧.
  Element threshold(const Rational& a) const;
  /// Distinct atom values, ascending; the family changes only at these points.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const DualElement&, const DualElement&) = default;

 private:
  MeasureAlgebra algebra_;
  std::vector<Rational> values_;
};

/// T_π u, the unique element with ⟦T_π u > a⟧ = π⟦u > a⟧. Throws NotHom unless π
/// is a sequentially order-continuous Boolean homomorphism.
DualElement covariant_op(const BooleanHom& pi, const DualElement& u);

/// L⁰(μ) ≅ L⁰(𝔅): each quotient atom takes the common value of f on its block.
DualElement duality_bridge(const FnClass& f);
/// Inverse of duality_bridge for the given space.
FnClass duality_bridge_inverse(const SpaceRef& space, const DualElement& u, SpaceTag tag = SpaceTag::L0);

/// f ↦ ⟨f∘φ_i⟩ for the canonical injections of a direct sum; throws NotADirectSum
/// when f does not live on `sum.space`.
std::vector<FnClass> split_direct_sum(const DirectSum& sum, const FnClass& f);
FnClass join_direct_sum(const DirectSum& sum, const std::vector<FnClass>& parts);

}  // namespace fsig

#endif  // FSIG_FUNCTION_SPACE_HPP
