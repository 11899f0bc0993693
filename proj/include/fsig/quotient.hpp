#ifndef FSIG_QUOTIENT_HPP
#define FSIG_QUOTIENT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsig/measure.hpp"
#include "fsig/rational.hpp"
#include "fsig/subset.hpp"

namespace fsig {

/// An element of a finite Boolean algebra, stored as the set of atoms below it.
using Element = Subset;

/// Finite (hence atomic and Dedekind complete) Boolean algebra with `atom_count`
/// atoms. Ring operations are △ (addition) and ∩ (multiplication).
class BooleanAlgebra {
 public:
  explicit BooleanAlgebra(std::size_t atom_count = 0) : atoms_(atom_count) {}

  std::size_t atom_count() const noexcept { return atoms_; }
  Element zero() const { return Element(atoms_); }
  Element unit() const { return full_subset(atoms_); }
  Element atom(std::size_t i) const { return make_subset(atoms_, {i}); }
  bool owns(const Element& a) const noexcept { return a.size() == atoms_; }

  static Element sym_diff(const Element& a, const Element& b) { return a ^ b; }
  static Element meet(const Element& a, const Element& b) { return a & b; }
  static Element join(const Element& a, const Element& b) { return a | b; }
  Element complement(const Element& a) const { return ~a; }
  static bool leq(const Element& a, const Element& b) { return a.is_subset_of(b); }

  /// Least upper bound of a family (zero for the empty family).
  Element sup(const std::vector<Element>& family) const;
  /// Greatest lower bound of a family (unit for the empty family).
  Element inf(const std::vector<Element>& family) const;

  /// All 2^n elements by mask; throws TooLarge above 24 atoms.
  std::vector<Element> elements() const;

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

 private:
  std::size_t atoms_;
};

/// (𝔅, μ̄) for a finite 𝔅: μ̄ is determined by its (strictly positive) atom values.
class MeasureAlgebra {
 public:
  /// Throws DegenerateMeasure if there are no atoms or an atom has measure 0.
  explicit MeasureAlgebra(std::vector<ExtRational> atom_measures);

  const BooleanAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t atom_count() const noexcept { return algebra_.atom_count(); }
  const std::vector<ExtRational>& atom_measures() const noexcept { return atom_mu_; }

  ExtRational mu_bar(const Element& a) const;
  /// Membership in the ideal 𝔅^f = {b : μ̄b < ∞}.
  bool is_finite(const Element& a) const { return !mu_bar(a).is_infinite(); }

  friend bool operator==(const MeasureAlgebra&, const MeasureAlgebra&) = default;

 private:
  BooleanAlgebra algebra_;
  std::vector<ExtRational> atom_mu_;
};

/// Σ_X / (Σ_X ∩ 𝒩) together with the projection E ↦ E•.
///
/// The quotient's atoms are the non-null blocks of Σ_X; a class is stored as the
/// set of non-null blocks contained in any of its members.
class QuotientAlgebra {
 public:
  QuotientAlgebra(SpaceRef space, MeasureAlgebra algebra, std::vector<std::size_t> atom_blocks);

  const SpaceRef& space() const noexcept { return space_; }
  const MeasureAlgebra& measure_algebra() const noexcept { return algebra_; }
  const BooleanAlgebra& algebra() const noexcept { return algebra_.algebra(); }
  /// Σ-block index of each quotient atom.
  const std::vector<std::size_t>& atom_blocks() const noexcept { return atom_blocks_; }

  /// E•; throws NotMeasurable when E ∉ Σ_X.
  Element project(const Subset& set) const;
  /// Canonical member of the class: the union of its non-null blocks.
  Subset representative(const Element& a) const;

 private:
  SpaceRef space_;
  MeasureAlgebra algebra_;
  std::vector<std::size_t> atom_blocks_;
  std::vector<std::optional<std::size_t>> block_to_atom_;
};

/// Throws DegenerateMeasure when every point of the space is negligible.
QuotientAlgebra quotient_measure_algebra(const SpaceRef& space);

struct HomFlags {
  bool is_hom = false;
  bool is_soc = false;
  std::optional<bool> is_measure_preserving;  // empty unless both sides carry μ̄
};

/// A map between finite Boolean algebras, optionally carrying measures on
/// either side. Flags are computed when the map is built.
class BooleanHom {
 public:
  using Action = std::function<Element(const Element&)>;

  /// π(a) = ⋁_{i ∈ a} images[i]. A hom iff the images are disjoint and join to 1.
  static BooleanHom from_atom_images(BooleanAlgebra source, BooleanAlgebra target, std::vector<Element> images);
  static BooleanHom from_atom_images(const MeasureAlgebra& source, const MeasureAlgebra& target,
                                     std::vector<Element> images);
  /// Arbitrary map; flags come from an exhaustive law check (source limited to 12 atoms).
  static BooleanHom from_function(BooleanAlgebra source, BooleanAlgebra target, Action action);
  static BooleanHom from_function(const MeasureAlgebra& source, const MeasureAlgebra& target, Action action);
  static BooleanHom identity(const MeasureAlgebra& algebra);

  const BooleanAlgebra& source() const noexcept { return source_; }
  const BooleanAlgebra& target() const noexcept { return target_; }
  const std::optional<MeasureAlgebra>& source_measure() const noexcept { return source_mu_; }
  const std::optional<MeasureAlgebra>& target_measure() const noexcept { return target_mu_; }
  const HomFlags& flags() const noexcept { return flags_; }
  bool is_hom() const noexcept { return flags_.is_hom; }
  bool is_soc() const noexcept { return flags_.is_soc; }
  bool has_atom_form() const noexcept { return atom_images_.has_value(); }

  Element operator()(const Element& a) const;

 private:
  BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::optional<MeasureAlgebra> source_mu,
             std::optional<MeasureAlgebra> target_mu);
  void finish_atom_form(std::vector<Element> images);
  void finish_function_form(Action action);

  BooleanAlgebra source_;
  BooleanAlgebra target_;
  std::optional<MeasureAlgebra> source_mu_;
  std::optional<MeasureAlgebra> target_mu_;
  std::optional<std::vector<Element>> atom_images_;
  Action action_;
  HomFlags flags_;

  friend BooleanHom compose(const BooleanHom& theta, const BooleanHom& pi);
};

/// θ∘π. Throws SpaceMismatch unless π.target is θ.source.
BooleanHom compose(const BooleanHom& theta, const BooleanHom& pi);

/// Same source, target and action on every element.
bool same_action(const BooleanHom& a, const BooleanHom& b);

/// π_φ : 𝔄_target → 𝔅_source, F• ↦ φ⁻¹[F]•. Throws NotNonsingular unless φ is non-singular.
BooleanHom induced_hom(const MeasurableMap& phi);

struct HomReport {
  bool preserves_sym_diff = true;
  bool preserves_meet = true;
  bool preserves_unit = true;
  bool preserves_finite_sups = true;
  bool preserves_finite_infs = true;
  bool preserves_chain_sups = true;  // sequential order-continuity, finite case
  bool kernel_is_ideal = true;
  bool injective = true;
  bool surjective = true;
  std::optional<bool> measure_preserving;
  std::vector<std::string> failures;

  bool is_hom() const { return preserves_sym_diff && preserves_meet && preserves_unit; }
  bool is_soc() const { return is_hom() && preserves_chain_sups; }
  bool is_isomorphism() const { return is_hom() && injective && surjective; }
  bool all_passed() const { return failures.empty(); }
};

/// Exhaustive law check; throws TooLarge above 12 source atoms.
HomReport check_hom_laws(const BooleanHom& pi);

}  // namespace fsig

#endif  // FSIG_QUOTIENT_HPP
