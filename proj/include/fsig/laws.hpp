#ifndef FSIG_LAWS_HPP
#define FSIG_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsig/random.hpp"

namespace fsig {

struct LawResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

/// Counts checks and failures per named law over randomized instances.
class LawSuite {
 public:
  explicit LawSuite(std::string name) : name_(std::move(name)) {}

  /// Context attached to the next failures ("instance 12", ...).
  void at(std::string context) { context_ = std::move(context); }
  void check(const std::string& law, bool ok);
  /// Records an unexpected exception against `law`.
  void error(const std::string& law, const std::string& what);

  const std::string& name() const noexcept { return name_; }
  std::vector<LawResult> laws() const;
  std::size_t checked() const;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

 private:
  std::string name_;
  std::string context_;
  std::map<std::string, LawResult> laws_;
  std::vector<std::string> order_;
};

/// σ-algebra generation and closure, null ideals, atoms, map flags, direct sums.
LawSuite measure_laws(Rng& rng, std::size_t instances);
/// Measure-algebra clauses, Boolean axioms, completeness, and the projection E ↦ E•.
LawSuite quotient_laws(Rng& rng, std::size_t instances);
/// Contravariant functoriality of φ ↦ π_φ and its measure-preservation flag.
LawSuite induced_hom_laws(Rng& rng, std::size_t pairs);
/// Pullback operators: linear, multiplicative, lattice and functor laws on
/// `triples` instances, exact norm preservation on `imp_maps` instances.
LawSuite pullback_laws(Rng& rng, std::size_t triples, std::size_t imp_maps);
/// Bridge naturality on `instances` maps and T_{θπ} = T_θ T_π on `hom_pairs` pairs.
LawSuite duality_laws(Rng& rng, std::size_t instances, std::size_t hom_pairs);
/// Linear-space, order, lattice and multiplicative identities of L⁰.
LawSuite riesz_laws(Rng& rng, std::size_t triples);
/// Restriction-category axioms, dagger laws and the partial l² pullback.
LawSuite partial_laws(Rng& rng, std::size_t instances);
/// Segment arrows, transfer, detection and functor-graph laws.
LawSuite signal_laws(Rng& rng, std::size_t instances);
/// Codec round trips, container stability and detected-policy dominance.
LawSuite codec_laws(Rng& rng, std::size_t instances);

std::vector<LawSuite> run_all_laws(std::uint64_t seed, std::size_t instances);

}  // namespace fsig

#endif  // FSIG_LAWS_HPP
