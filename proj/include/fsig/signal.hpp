#ifndef FSIG_SIGNAL_HPP
#define FSIG_SIGNAL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsig/measure.hpp"
#include "fsig/rational.hpp"

namespace fsig {

/// i ↦ S·i + T with integer S ≠ 0.
struct IndexMap {
  std::int64_t scale = 1;
  std::int64_t offset = 0;

  std::int64_t operator()(std::int64_t i) const { return scale * i + offset; }
  /// φ⁻¹(j) when it is an integer.
  std::optional<std::int64_t> preimage(std::int64_t j) const;
  bool is_identity() const noexcept { return scale == 1 && offset == 0; }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

/// b∘a.
IndexMap compose(const IndexMap& b, const IndexMap& a);

/// The sample positions start, start + stride, ..., count of them.
struct Grid {
  std::int64_t start = 0;
  std::int64_t stride = 1;
  std::size_t count = 0;

  std::int64_t position(std::size_t k) const { return start + stride * static_cast<std::int64_t>(k); }
  std::int64_t last() const { return position(count - 1); }
  /// One past the last sample, so a stride-1 grid covers [start, end).
  std::int64_t end() const { return last() + stride; }
  std::optional<std::size_t> index_of(std::int64_t pos) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// φ applied to every position, listed in ascending order. Throws IntervalMismatch for S = 0.
Grid image(const IndexMap& phi, const Grid& grid);

/// The samples of a signal on a (nonempty) grid. Plain segments have stride 1
/// and cover the half-open interval [start, end); larger strides arise as
/// targets of affine arrows with |S| > 1.
class Segment {
 public:
  Segment() = default;
  Segment(std::int64_t start, std::vector<Rational> samples);
  /// Throws IntervalMismatch if the sample count differs from grid.count or the grid is empty.
  Segment(Grid grid, std::vector<Rational> samples);

  const Grid& grid() const noexcept { return grid_; }
  std::int64_t start() const noexcept { return grid_.start; }
  std::int64_t end() const { return grid_.end(); }
  std::int64_t stride() const noexcept { return grid_.stride; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::vector<Rational>& samples() const noexcept { return samples_; }
  const Rational& operator[](std::size_t k) const { return samples_.at(k); }
  /// Sample at an absolute position; throws IntervalMismatch off the grid.
  const Rational& at(std::int64_t pos) const;

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Grid grid_;
  std::vector<Rational> samples_;
};

/// Counting-style measure space of a grid: every position has weight equal to
/// the stride, Σ = P(grid).
SpaceRef grid_space(const Grid& grid, const Rational& weight_scale = Rational(1));

enum class ArrowKind : std::uint8_t { Translation = 0, Affine = 1, AmpAffine = 2 };

std::string to_string(ArrowKind kind);

/// Kind implied by the data: Translation for S = 1 and c = 1, Affine for c = 1.
ArrowKind classify_arrow(const IndexMap& phi, const Rational& c);

/// A concrete (h, φ) arrow between segments together with its residual Δ.
///
/// The target carries the weight ν_J = target_weight · μ_J with target_weight
/// = 1/|S|, which keeps φ inverse-measure-preserving between the grid spaces.
struct SegmentArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  ArrowKind kind = ArrowKind::Translation;
  Grid source_grid;
  IndexMap phi;
  Rational scale{1};
  std::vector<Rational> residual;
  Rational target_weight{1};

  Grid target_grid() const { return image(phi, source_grid); }
  bool is_exact() const;
  Rational residual_norm_squared() const;
  double residual_norm() const;

  /// The point map source grid → target grid with the measures described above.
  MeasurableMap point_map() const;
};

/// Same φ, c, Δ and grids; ids and labels are ignored.
bool same_data(const SegmentArrow& a, const SegmentArrow& b);

/// Arrow with Δ = 0 whose target grid is φ(source_grid).
SegmentArrow make_arrow(std::size_t source, std::size_t target, const Grid& source_grid, IndexMap phi,
                        Rational c = Rational(1));

SegmentArrow identity_arrow(std::size_t object, const Grid& grid);

/// c · f(φ⁻¹(j)) for j on the target grid, ignoring the residual. Throws
/// IntervalMismatch unless f lives on arrow.source_grid.
Segment transfer(const SegmentArrow& arrow, const Segment& f);

/// Pointwise observed − predicted; throws IntervalMismatch unless the grids agree.
std::vector<Rational> delta(const Segment& observed, const Segment& predicted);

/// predicted + Δ.
Segment reconstruct(const Segment& predicted, std::span<const Rational> residual);

/// b∘a: φ_b∘φ_a, c_b·c_a and Δ = Δ_b + c_b·(Δ_a∘φ_b⁻¹). Throws IntervalMismatch
/// unless a's target grid is b's source grid.
SegmentArrow compose(const SegmentArrow& b, const SegmentArrow& a);

/// The inverse of an arrow with |S| = 1 and c ≠ 0 (NotInvertible otherwise).
SegmentArrow inverse_arrow(const SegmentArrow& a);

bool is_identity(const SegmentArrow& a);

/// ℓ² bound on Δ used to accept an arrow; may be +∞.
struct Tolerance {
  double value = 0;

  static Tolerance infinite() { return {std::numeric_limits<double>::infinity()}; }
  bool accepts(const Rational& norm_squared) const;
};

/// φ(i) = i + T with T fixed by the endpoints. None unless the grids have equal
/// size and stride or when ∥Δ∥₂ > tol.
std::optional<SegmentArrow> detect_translation(const Segment& f, const Segment& g, Tolerance tol);

/// Best φ(i) = S·i + T over the given strides by residual norm, ties broken by
/// smaller |S|, smaller |T|, then positive S and T. None if the best is rejected.
std::optional<SegmentArrow> detect_affine(const Segment& f, const Segment& g, std::span<const std::int64_t> strides,
                                          Tolerance tol);

/// As detect_affine with h(x) = c·x fitted exactly: c = ⟨p, g⟩/∥p∥² for the
/// transported p = f∘φ⁻¹. Candidates with c = 0 are skipped.
std::optional<SegmentArrow> detect_amp_affine(const Segment& f, const Segment& g,
                                              std::span<const std::int64_t> strides, Tolerance tol);

/// A sampled signal whose first sample sits at index `origin`.
struct Signal {
  std::int64_t origin = 0;
  std::vector<Rational> samples;

  friend bool operator==(const Signal&, const Signal&) = default;
};

/// Splits at the breakpoints, which must lie strictly inside the signal's extent
/// and increase strictly (BadBreakpoints otherwise).
std::vector<Segment> segment_signal(const Signal& signal, std::span<const std::int64_t> breakpoints);

/// Breakpoints for consecutive pieces of the given length.
std::vector<std::int64_t> uniform_breakpoints(const Signal& signal, std::size_t piece_length);

/// Concatenation of contiguous stride-1 segments (IntervalMismatch otherwise).
Signal rejoin(std::span<const Segment> segments);

/// Objects are segments, arrows are concrete (h, φ) transfers between them.
class FunctorGraph {
 public:
  struct Object {
    Segment segment;
    std::string label;
  };
  struct Arrow {
    SegmentArrow data;
    std::string label;
  };

  std::size_t add_object(Segment segment, std::string label = {});
  /// Ids in `arrow` must name objects and its source grid must be the source object's grid.
  std::size_t add_arrow(SegmentArrow arrow, std::string label = {});

  const std::vector<Object>& objects() const noexcept { return objects_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

 private:
  std::vector<Object> objects_;
  std::vector<Arrow> arrows_;
};

struct FunctorLawReport {
  std::size_t identity_checks = 0;
  std::size_t composition_checks = 0;
  std::size_t associativity_checks = 0;
  bool identity_ok = true;
  bool associativity_ok = true;
  bool reconstruction_ok = true;
  bool functoriality_ok = true;
  bool groupoid_ok = true;
  std::vector<std::string> failures;
  /// Arrows with no inverse among the graph's arrows.
  std::vector<std::size_t> without_inverse;
  /// Distinct arrows carrying identical (φ, c, Δ) data.
  std::vector<std::pair<std::size_t, std::size_t>> faithfulness_collisions;

  bool category_ok() const { return identity_ok && associativity_ok && reconstruction_ok && functoriality_ok; }
  bool is_groupoid() const { return category_ok() && groupoid_ok; }
};

FunctorLawReport verify_functor_laws(const FunctorGraph& graph);

enum class Detector { Translation, Affine, AmpAffine };

struct DetectorConfig {
  bool translation = true;
  bool affine = false;
  bool amp_affine = false;
  std::vector<std::int64_t> strides{1, -1};
  Tolerance tol = Tolerance::infinite();
};

struct RedundancyEntry {
  std::size_t segment = 0;
  std::optional<SegmentArrow> best;  // empty when no detector produced a candidate
  std::optional<Detector> detector;
  bool redundant = false;
};

/// Every reported arrow is an observed isomorphism between concrete segments.
struct RedundancyReport {
  std::vector<Segment> segments;
  std::vector<RedundancyEntry> entries;  // one per segment after the first
  std::size_t redundant_count = 0;

  double redundant_fraction() const;
};

RedundancyReport redundancy_report(std::vector<Segment> segments, const DetectorConfig& config);
RedundancyReport redundancy_report(const Signal& signal, std::span<const std::int64_t> breakpoints,
                                   const DetectorConfig& config);

/// Unit-segment decomposition with predecessor translations: seed, first-level
/// Δ stream, second-level deltas Δ_{k+1} − transfer(Δ_k), and the functor graph
/// of segments with the predecessor arrows and their inverses.
struct PrototypeDecomposition {
  std::vector<Segment> segments;
  Rational seed;
  std::vector<SegmentArrow> arrows;
  std::vector<Rational> deltas;
  std::vector<Rational> second_deltas;
  FunctorGraph graph;
};

PrototypeDecomposition prototype_decomposition(const Signal& signal);

}  // namespace fsig

#endif  // FSIG_SIGNAL_HPP
