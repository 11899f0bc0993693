#ifndef FSIG_PARTIAL_HPP
#define FSIG_PARTIAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fsig/function_space.hpp"
#include "fsig/measure.hpp"

namespace fsig {

/// Injective partial function between finite carriers (an arrow of PInj).
class PartialInjection {
 public:
  /// Throws UnknownPoint for a label outside either carrier and NotInjective
  /// when two source points share an image.
  PartialInjection(FiniteCarrier source, FiniteCarrier target, std::map<Label, Label> pairs);

  static PartialInjection identity(const FiniteCarrier& carrier);
  static PartialInjection empty(const FiniteCarrier& source, const FiniteCarrier& target);

  const FiniteCarrier& source() const noexcept { return source_; }
  const FiniteCarrier& target() const noexcept { return target_; }
  const std::map<Label, Label>& pairs() const noexcept { return pairs_; }
  std::optional<Label> operator()(Label x) const;

  std::vector<Label> domain() const;
  std::vector<Label> image() const;
  bool is_total() const noexcept { return pairs_.size() == source_.size(); }

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;

 private:
  FiniteCarrier source_;
  FiniteCarrier target_;
  std::map<Label, Label> pairs_;
};

/// g∘f, defined on {x ∈ dom f : f(x) ∈ dom g}. Throws SpaceMismatch unless f.target is g.source.
PartialInjection compose(const PartialInjection& g, const PartialInjection& f);

/// f̄: the partial identity on dom f.
PartialInjection restriction(const PartialInjection& f);

/// f†: the converse relation.
PartialInjection dagger(const PartialInjection& f);

/// l²(f)g: x ↦ g(f(x)) on dom f and 0 elsewhere, over the counting space on f.source.
/// Throws SpaceMismatch unless g lives on the counting space of f.target.
FnClass l2_partial(const PartialInjection& f, const FnClass& g);

}  // namespace fsig

#endif  // FSIG_PARTIAL_HPP
