#include "fsig/function_space.hpp"

#include <algorithm>
#include <cmath>

#include "fsig/error.hpp"

namespace fsig {

namespace {

void require_same(const FnClass& f, const FnClass& g) {
  if (!same_space(f.space(), g.space())) throw Error(ErrorCode::SpaceMismatch, "operands live on different spaces");
  if (f.tag() != g.tag()) throw Error(ErrorCode::SpaceMismatch, "operands live in different function spaces");
}

template <typename Op>
FnClass pointwise(const FnClass& f, const FnClass& g, Op op) {
  require_same(f, g);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[i], g[i]);
  return FnClass::canonical(f.space(), std::move(out), f.tag());
}

template <typename Op>
FnClass pointwise(const FnClass& f, Op op) {
  std::vector<Rational> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[i]);
  return FnClass::canonical(f.space(), std::move(out), f.tag());
}

}  // namespace

// ---------------------------------------------------------------------------
// FnClass

FnClass::FnClass(SpaceRef space, std::vector<Rational> values, SpaceTag tag)
    : space_(std::move(space)), values_(std::move(values)), tag_(tag) {}

FnClass FnClass::canonical(SpaceRef space, std::vector<Rational> raw, SpaceTag tag) {
  if (!space) throw std::invalid_argument("null space");
  if (raw.size() != space->size()) throw Error(ErrorCode::SpaceMismatch, "one value per carrier point required");
  if (!space->is_measurable_function(raw))
    throw Error(ErrorCode::NotMeasurable, "function is not constant on the blocks of the sigma-algebra");
  const auto& null_set = space->null_set();
  for (auto p = null_set.find_first(); p != Subset::npos; p = null_set.find_next(p)) raw[p] = 0;
  FnClass f(std::move(space), std::move(raw), tag);
  if (tag == SpaceTag::L2 && norm2_squared(f).is_infinite())
    throw Error(ErrorCode::NotSquareIntegrable, "function is not square integrable");
  return f;
}

FnClass FnClass::zero(SpaceRef space, SpaceTag tag) {
  const auto n = space->size();
  return canonical(std::move(space), std::vector<Rational>(n), tag);
}

FnClass FnClass::one(SpaceRef space, SpaceTag tag) {
  const auto n = space->size();
  return canonical(std::move(space), std::vector<Rational>(n, Rational(1)), tag);
}

FnClass FnClass::indicator(SpaceRef space, const Subset& set, SpaceTag tag) {
  if (!space->sigma().contains(set)) throw Error(ErrorCode::NotMeasurable, "indicator of non-measurable set");
  std::vector<Rational> v(space->size());
  for (auto p : members_of(set)) v[p] = 1;
  return canonical(std::move(space), std::move(v), tag);
}

FnClass FnClass::with_tag(SpaceTag tag) const { return canonical(space_, values_, tag); }

bool operator==(const FnClass& a, const FnClass& b) {
  return a.tag_ == b.tag_ && same_space(a.space_, b.space_) && a.values_ == b.values_;
}

FnClass canonical_class(SpaceRef space, std::vector<Rational> raw, SpaceTag tag) {
  return FnClass::canonical(std::move(space), std::move(raw), tag);
}

// ---------------------------------------------------------------------------
// Operators

FnClass pullback(const MeasurableMap& phi, const FnClass& g) {
  if (!same_space(phi.target(), g.space())) throw Error(ErrorCode::SpaceMismatch, "g does not live on the map's target");
  if (g.tag() == SpaceTag::L0 && !phi.is_nonsingular())
    throw Error(ErrorCode::NotNonsingular, "L0 pullback requires a non-singular map");
  if (g.tag() == SpaceTag::L2 && !phi.is_imp())
    throw Error(ErrorCode::NotIMP, "L2 pullback requires an inverse-measure-preserving map");
  std::vector<Rational> v(phi.source()->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g[phi(i)];
  return FnClass::canonical(phi.source(), std::move(v), g.tag());
}

FnClass amplitude_op(const Rational& c, const FnClass& f) {
  return pointwise(f, [&](const Rational& x) { return Rational(c * x); });
}

FnClass add(const FnClass& f, const FnClass& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

FnClass sub(const FnClass& f, const FnClass& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return Rational(a - b); });
}

FnClass neg(const FnClass& f) {
  return pointwise(f, [](const Rational& x) { return Rational(-x); });
}

FnClass scale(const Rational& c, const FnClass& f) { return amplitude_op(c, f); }

FnClass mul(const FnClass& f, const FnClass& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return Rational(a * b); });
}

FnClass sup(const FnClass& f, const FnClass& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return a < b ? b : a; });
}

FnClass inf(const FnClass& f, const FnClass& g) {
  return pointwise(f, g, [](const Rational& a, const Rational& b) { return b < a ? b : a; });
}

FnClass abs(const FnClass& f) {
  return pointwise(f, [](const Rational& x) { return Rational(sgn(x) < 0 ? Rational(-x) : x); });
}

bool leq(const FnClass& f, const FnClass& g) {
  require_same(f, g);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g[i] < f[i]) return false;
  return true;
}

ExtRational norm2_squared(const FnClass& f) {
  ExtRational total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) == 0) continue;
    total += f.space()->weight(i).scaled(Rational(f[i] * f[i]));
  }
  return total;
}

double norm2(const FnClass& f) { return std::sqrt(norm2_squared(f).to_double()); }

Rational inner(const FnClass& f, const FnClass& g) {
  require_same(f, g);
  Rational total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational prod = f[i] * g[i];
    if (sgn(prod) == 0) continue;
    const auto& w = f.space()->weight(i);
    if (w.is_infinite()) throw Error(ErrorCode::NotSquareIntegrable, "inner product diverges");
    total += w.value() * prod;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Covariant side

DualElement::DualElement(MeasureAlgebra algebra, std::vector<Rational> atom_values)
    : algebra_(std::move(algebra)), values_(std::move(atom_values)) {
  if (values_.size() != algebra_.atom_count()) throw Error(ErrorCode::SpaceMismatch, "one value per atom required");
}

Element DualElement::threshold(const Rational& a) const {
  Element out = algebra_.algebra().zero();
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > a) out.set(i);
  return out;
}

std::vector<Rational> DualElement::breakpoints() const {
  std::vector<Rational> v = values_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

DualElement covariant_op(const BooleanHom& pi, const DualElement& u) {
  if (!pi.is_hom() || !pi.is_soc())
    throw Error(ErrorCode::NotHom, "covariant operator needs a sequentially order-continuous Boolean homomorphism");
  if (!(pi.source() == u.algebra().algebra()) || (pi.source_measure() && !(*pi.source_measure() == u.algebra())))
    throw Error(ErrorCode::SpaceMismatch, "u does not live on the source of the homomorphism");
  if (!pi.target_measure()) throw Error(ErrorCode::SpaceMismatch, "target algebra carries no measure");

  // {u ≥ v_k} for ascending breakpoints v_k, pushed through π. A target atom
  // takes the largest v_k whose pushed set still contains it.
  const auto levels = u.breakpoints();
  const auto& target = *pi.target_measure();
  std::vector<Rational> out(target.atom_count());
  std::vector<bool> assigned(target.atom_count(), false);
  for (std::size_t k = levels.size(); k-- > 0;) {
    Element at_least = u.algebra().algebra().zero();
    for (std::size_t i = 0; i < u.atom_values().size(); ++i)
      if (u.atom_values()[i] >= levels[k]) at_least.set(i);
    const auto pushed = pi(at_least);
    for (auto t : members_of(pushed)) {
      if (assigned[t]) continue;
      out[t] = levels[k];
      assigned[t] = true;
    }
  }
  return DualElement(target, std::move(out));
}

DualElement duality_bridge(const FnClass& f) {
  const auto q = quotient_measure_algebra(f.space());
  const auto& blocks = f.space()->sigma().blocks();
  std::vector<Rational> values;
  values.reserve(q.atom_blocks().size());
  for (auto b : q.atom_blocks()) {
    const auto pts = members_of(blocks[b]);
    for (auto p : pts)
      if (f[p] != f[pts.front()]) throw Error(ErrorCode::NonConstantOnAtom, "class is not constant on an atom");
    values.push_back(f[pts.front()]);
  }
  return DualElement(q.measure_algebra(), std::move(values));
}

FnClass duality_bridge_inverse(const SpaceRef& space, const DualElement& u, SpaceTag tag) {
  const auto q = quotient_measure_algebra(space);
  if (!(q.measure_algebra() == u.algebra())) throw Error(ErrorCode::SpaceMismatch, "u does not live on this space's algebra");
  std::vector<Rational> v(space->size());
  const auto& blocks = space->sigma().blocks();
  for (std::size_t k = 0; k < q.atom_blocks().size(); ++k)
    for (auto p : members_of(blocks[q.atom_blocks()[k]])) v[p] = u.atom_values()[k];
  return FnClass::canonical(space, std::move(v), tag);
}

// ---------------------------------------------------------------------------
// Direct sums

std::vector<FnClass> split_direct_sum(const DirectSum& sum, const FnClass& f) {
  if (!same_space(sum.space, f.space())) throw Error(ErrorCode::NotADirectSum, "f does not live on this direct sum");
  std::vector<FnClass> parts;
  parts.reserve(sum.components.size());
  for (std::size_t c = 0; c < sum.components.size(); ++c) {
    const auto n = sum.components[c]->size();
    std::vector<Rational> v(f.values().begin() + static_cast<std::ptrdiff_t>(sum.offsets[c]),
                            f.values().begin() + static_cast<std::ptrdiff_t>(sum.offsets[c] + n));
    parts.push_back(FnClass::canonical(sum.components[c], std::move(v), f.tag()));
  }
  return parts;
}

FnClass join_direct_sum(const DirectSum& sum, const std::vector<FnClass>& parts) {
  if (parts.size() != sum.components.size()) throw Error(ErrorCode::NotADirectSum, "one part per summand required");
  std::vector<Rational> v;
  v.reserve(sum.space->size());
  const SpaceTag tag = parts.empty() ? SpaceTag::L0 : parts.front().tag();
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (!same_space(parts[c].space(), sum.components[c]) || parts[c].tag() != tag)
      throw Error(ErrorCode::NotADirectSum, "part does not live on its summand");
    v.insert(v.end(), parts[c].values().begin(), parts[c].values().end());
  }
  return FnClass::canonical(sum.space, std::move(v), tag);
}

}  // namespace fsig
