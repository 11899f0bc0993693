#include "fsig/partial.hpp"

#include <algorithm>
#include <set>

#include "fsig/error.hpp"

namespace fsig {

PartialInjection::PartialInjection(FiniteCarrier source, FiniteCarrier target, std::map<Label, Label> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
  std::set<Label> seen;
  for (const auto& [x, y] : pairs_) {
    if (!source_.index_of(x)) throw Error(ErrorCode::UnknownPoint, "source point " + std::to_string(x));
    if (!target_.index_of(y)) throw Error(ErrorCode::UnknownPoint, "target point " + std::to_string(y));
    if (!seen.insert(y).second) throw Error(ErrorCode::NotInjective, "target point " + std::to_string(y) + " hit twice");
  }
}

PartialInjection PartialInjection::identity(const FiniteCarrier& carrier) {
  std::map<Label, Label> pairs;
  for (auto x : carrier.points()) pairs.emplace(x, x);
  return PartialInjection(carrier, carrier, std::move(pairs));
}

PartialInjection PartialInjection::empty(const FiniteCarrier& source, const FiniteCarrier& target) {
  return PartialInjection(source, target, {});
}

std::optional<Label> PartialInjection::operator()(Label x) const {
  auto it = pairs_.find(x);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

std::vector<Label> PartialInjection::domain() const {
  std::vector<Label> out;
  for (const auto& [x, y] : pairs_) out.push_back(x);
  return out;
}

std::vector<Label> PartialInjection::image() const {
  std::vector<Label> out;
  for (const auto& [x, y] : pairs_) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

PartialInjection compose(const PartialInjection& g, const PartialInjection& f) {
  if (!(f.target() == g.source())) throw Error(ErrorCode::SpaceMismatch, "partial injections are not composable");
  std::map<Label, Label> pairs;
  for (const auto& [x, y] : f.pairs())
    if (auto z = g(y)) pairs.emplace(x, *z);
  return PartialInjection(f.source(), g.target(), std::move(pairs));
}

PartialInjection restriction(const PartialInjection& f) {
  std::map<Label, Label> pairs;
  for (const auto& [x, y] : f.pairs()) pairs.emplace(x, x);
  return PartialInjection(f.source(), f.source(), std::move(pairs));
}

PartialInjection dagger(const PartialInjection& f) {
  std::map<Label, Label> pairs;
  for (const auto& [x, y] : f.pairs()) pairs.emplace(y, x);
  return PartialInjection(f.target(), f.source(), std::move(pairs));
}

FnClass l2_partial(const PartialInjection& f, const FnClass& g) {
  const auto& space = *g.space();
  if (!space.is_counting() || !(space.carrier() == f.target()))
    throw Error(ErrorCode::SpaceMismatch, "g must live on the counting space of the target carrier");
  auto source_space = share(FiniteMeasureSpace::counting(f.source()));
  std::vector<Rational> v(f.source().size());
  for (const auto& [x, y] : f.pairs()) v[*f.source().index_of(x)] = g[*f.target().index_of(y)];
  return FnClass::canonical(std::move(source_space), std::move(v), g.tag());
}

}  // namespace fsig
