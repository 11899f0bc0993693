#ifndef FSIG_RANDOM_HPP
#define FSIG_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "fsig/codec.hpp"
#include "fsig/function_space.hpp"
#include "fsig/measure.hpp"
#include "fsig/partial.hpp"
#include "fsig/quotient.hpp"

namespace fsig {

using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
bool coin(Rng& rng, double p = 0.5);

/// n/d with |n| ≤ max_num and 1 ≤ d ≤ max_den.
Rational random_rational(Rng& rng, std::int64_t max_num = 9, std::int64_t max_den = 4);

struct SpaceShape {
  std::size_t min_points = 1;
  std::size_t max_points = 6;
  double zero_weight = 0.25;
  double infinite_weight = 0.0;
  bool discrete = false;
  /// Guarantees at least one block of positive measure.
  bool nondegenerate = false;
};

FiniteCarrier random_carrier(Rng& rng, std::size_t size);
SigmaAlgebra random_sigma(Rng& rng, const FiniteCarrier& carrier);
SpaceRef random_space(Rng& rng, const SpaceShape& shape = {});

enum class MapStrength { Measurable, Nonsingular, Imp };

/// Builds a fresh source space together with a map of the requested strength
/// into `target`. The source σ-algebra refines the preimage of Σ_target, and
/// source weights are chosen so the flag holds (Imp splits each target
/// weight among its preimage points).
MeasurableMap random_map_into(Rng& rng, const SpaceRef& target, MapStrength strength, std::size_t max_points = 6);

/// Arbitrary total function between the carriers (flags as they fall).
MeasurableMap random_function(Rng& rng, const SpaceRef& source, const SpaceRef& target);

/// Random class constant on blocks; L² classes vanish on infinite-weight blocks.
FnClass random_class(Rng& rng, const SpaceRef& space, SpaceTag tag = SpaceTag::L0, std::int64_t max_num = 6,
                     std::int64_t max_den = 3);

/// A random measure algebra with 1..max_atoms atoms of positive finite measure.
MeasureAlgebra random_measure_algebra(Rng& rng, std::size_t max_atoms = 5);

/// π from target atoms: each target atom is sent below exactly one source atom,
/// so the images are disjoint and cover 1.
BooleanHom random_hom(Rng& rng, const MeasureAlgebra& source, const MeasureAlgebra& target);

DualElement random_dual(Rng& rng, const MeasureAlgebra& algebra);

PartialInjection random_partial_injection(Rng& rng, const FiniteCarrier& source, const FiniteCarrier& target);

IntSignal random_int_signal(Rng& rng, std::size_t length, std::int64_t lo, std::int64_t hi);
Image random_image(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t maxval);

}  // namespace fsig

#endif  // FSIG_RANDOM_HPP
