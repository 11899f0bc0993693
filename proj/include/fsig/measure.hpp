#ifndef FSIG_MEASURE_HPP
#define FSIG_MEASURE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fsig/rational.hpp"
#include "fsig/subset.hpp"

namespace fsig {

using Label = std::int64_t;

/// Finite set of integer-labelled points, labels strictly increasing.
class FiniteCarrier {
 public:
  FiniteCarrier() = default;
  explicit FiniteCarrier(std::vector<Label> points);
  /// Points first, first+1, ..., first+count-1.
  static FiniteCarrier range(Label first, std::size_t count);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Label>& points() const noexcept { return points_; }
  Label label(std::size_t index) const { return points_.at(index); }
  std::optional<std::size_t> index_of(Label label) const;

  friend bool operator==(const FiniteCarrier&, const FiniteCarrier&) = default;

 private:
  std::vector<Label> points_;
};

/// A σ-algebra on a finite carrier.
///
/// Every finite σ-algebra is the set of unions of the cells of a partition of
/// the carrier; the partition ("blocks") is stored and members are enumerated
/// from it on demand. Blocks are ordered by their smallest point.
class SigmaAlgebra {
 public:
  SigmaAlgebra() = default;

  /// P(X).
  static SigmaAlgebra discrete(const FiniteCarrier& carrier);
  /// {∅, X}.
  static SigmaAlgebra trivial(const FiniteCarrier& carrier);
  /// Validates an explicit family; throws NotASigmaAlgebra if it is not one.
  static SigmaAlgebra from_members(const FiniteCarrier& carrier, const std::vector<Subset>& members);
  /// Builds from an explicit partition (cells must be disjoint, nonempty, covering).
  static SigmaAlgebra from_partition(const FiniteCarrier& carrier, std::vector<Subset> blocks);

  const FiniteCarrier& carrier() const noexcept { return carrier_; }
  const std::vector<Subset>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t point) const { return block_index_.at(point); }

  bool contains(const Subset& set) const;
  bool is_discrete() const noexcept { return blocks_.size() == carrier_.size(); }
  /// Union of the blocks selected by `block_mask` (a subset of block indices).
  Subset union_of_blocks(const Subset& block_mask) const;
  /// 2^(block count); throws TooLarge above 2^62.
  std::uint64_t member_count() const;
  /// All members in increasing block-mask order; throws TooLarge above 2^24 members.
  std::vector<Subset> members() const;

  friend bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) {
    return a.carrier_ == b.carrier_ && a.blocks_ == b.blocks_;
  }

 private:
  SigmaAlgebra(FiniteCarrier carrier, std::vector<Subset> blocks);

  FiniteCarrier carrier_;
  std::vector<Subset> blocks_;
  std::vector<std::size_t> block_index_;
};

/// Smallest σ-algebra containing the generators.
SigmaAlgebra generate_sigma_algebra(const FiniteCarrier& carrier, const std::vector<Subset>& generators);

/// (X, Σ, μ) with μ point-supported: μE = Σ_{x∈E} w(x).
class FiniteMeasureSpace {
 public:
  FiniteMeasureSpace(SigmaAlgebra sigma, std::vector<ExtRational> weights);

  static FiniteMeasureSpace counting(const FiniteCarrier& carrier);
  /// Σ = P(X) with the given point weights.
  static FiniteMeasureSpace point_supported(const FiniteCarrier& carrier, std::vector<ExtRational> weights);

  const FiniteCarrier& carrier() const noexcept { return sigma_.carrier(); }
  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<ExtRational>& weights() const noexcept { return weights_; }
  const ExtRational& weight(std::size_t point) const { return weights_.at(point); }

  /// μE for measurable E; throws NotMeasurable otherwise.
  ExtRational measure(const Subset& set) const;
  const ExtRational& block_measure(std::size_t block) const { return block_measure_.at(block); }
  bool is_null_block(std::size_t block) const { return block_measure_.at(block).is_zero(); }

  /// Largest measurable null set (the union of null blocks).
  const Subset& null_set() const noexcept { return null_set_; }
  /// N is negligible iff it lies inside a measurable null set.
  bool is_negligible(const Subset& set) const { return set.is_subset_of(null_set_); }
  /// True for the counting measure on P(X).
  bool is_counting() const;
  /// True iff `values` (one per point) is constant on every block.
  bool is_measurable_function(std::span<const Rational> values) const;

  friend bool operator==(const FiniteMeasureSpace&, const FiniteMeasureSpace&);

 private:
  SigmaAlgebra sigma_;
  std::vector<ExtRational> weights_;
  std::vector<ExtRational> block_measure_;
  Subset null_set_;
};

using SpaceRef = std::shared_ptr<const FiniteMeasureSpace>;

template <typename... Args>
SpaceRef make_space(Args&&... args) {
  return std::make_shared<const FiniteMeasureSpace>(std::forward<Args>(args)...);
}
SpaceRef share(FiniteMeasureSpace space);

/// Pointer equality first, then structural equality.
bool same_space(const SpaceRef& a, const SpaceRef& b);

/// All negligible subsets, ordered by mask; throws TooLarge if the null set has more than 24 points.
std::vector<Subset> null_ideal(const FiniteMeasureSpace& space);

/// All atoms: measurable A with μA > 0 such that every measurable E ⊆ A has E or A∖E negligible.
std::vector<Subset> atoms(const FiniteMeasureSpace& space);

struct MapFlags {
  bool measurable = false;
  bool nonsingular = false;
  bool imp = false;  // inverse-measure-preserving

  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

/// Total function between the points of two finite measure spaces, with its
/// structural flags computed once at construction.
class MeasurableMap {
 public:
  /// `image[i]` is the target index of source point i.
  MeasurableMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> image);
  /// Throws MapNotTotal if a source label is missing, UnknownPoint for a label outside either carrier.
  static MeasurableMap from_labels(SpaceRef source, SpaceRef target, const std::map<Label, Label>& mapping);
  static MeasurableMap identity(SpaceRef space);

  const SpaceRef& source() const noexcept { return source_; }
  const SpaceRef& target() const noexcept { return target_; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  std::size_t operator()(std::size_t source_point) const { return image_.at(source_point); }

  const MapFlags& flags() const noexcept { return flags_; }
  bool is_measurable() const noexcept { return flags_.measurable; }
  bool is_nonsingular() const noexcept { return flags_.nonsingular; }
  bool is_imp() const noexcept { return flags_.imp; }

  /// φ⁻¹[F] for F a subset of the target carrier.
  Subset preimage(const Subset& target_set) const;

 private:
  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> image_;
  MapFlags flags_;
};

MapFlags classify_map(const MeasurableMap& map);

/// ψ∘φ. Throws SpaceMismatch unless φ.target is ψ.source.
MeasurableMap compose(const MeasurableMap& psi, const MeasurableMap& phi);

/// Tagged disjoint union of a family of spaces. Points are relabelled
/// 0..N-1 component by component; `tags[p]` recovers (component, original label).
struct DirectSum {
  SpaceRef space;
  std::vector<SpaceRef> components;
  std::vector<MeasurableMap> injections;
  std::vector<std::size_t> offsets;
  std::vector<std::pair<std::size_t, Label>> tags;

  /// E_i = {x : (x,i) ∈ E} as a subset of component i.
  Subset slice(const Subset& set, std::size_t component) const;
};

DirectSum direct_sum(const std::vector<SpaceRef>& spaces);

}  // namespace fsig

#endif  // FSIG_MEASURE_HPP
