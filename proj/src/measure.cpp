#include "fsig/measure.hpp"

#include <algorithm>
#include <set>

#include "fsig/error.hpp"

namespace fsig {

namespace {

constexpr std::size_t kMaxEnumeratedBlocks = 24;

void require_universe(const Subset& s, std::size_t n, const char* what) {
  if (s.size() != n) throw Error(ErrorCode::SpaceMismatch, std::string(what) + ": subset universe does not match carrier");
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteCarrier

FiniteCarrier::FiniteCarrier(std::vector<Label> points) : points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (points_[i - 1] >= points_[i]) throw std::invalid_argument("carrier labels must be strictly increasing");
}

FiniteCarrier FiniteCarrier::range(Label first, std::size_t count) {
  std::vector<Label> pts(count);
  for (std::size_t i = 0; i < count; ++i) pts[i] = first + static_cast<Label>(i);
  return FiniteCarrier(std::move(pts));
}

std::optional<std::size_t> FiniteCarrier::index_of(Label label) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), label);
  if (it == points_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

// ---------------------------------------------------------------------------
// SigmaAlgebra

SigmaAlgebra::SigmaAlgebra(FiniteCarrier carrier, std::vector<Subset> blocks)
    : carrier_(std::move(carrier)), blocks_(std::move(blocks)), block_index_(carrier_.size()) {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (auto p : members_of(blocks_[b])) block_index_[p] = b;
}

SigmaAlgebra SigmaAlgebra::discrete(const FiniteCarrier& carrier) {
  std::vector<Subset> blocks;
  blocks.reserve(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) blocks.push_back(make_subset(carrier.size(), {i}));
  return SigmaAlgebra(carrier, std::move(blocks));
}

SigmaAlgebra SigmaAlgebra::trivial(const FiniteCarrier& carrier) {
  std::vector<Subset> blocks;
  if (!carrier.empty()) blocks.push_back(full_subset(carrier.size()));
  return SigmaAlgebra(carrier, std::move(blocks));
}

SigmaAlgebra SigmaAlgebra::from_partition(const FiniteCarrier& carrier, std::vector<Subset> blocks) {
  Subset covered(carrier.size());
  for (const auto& b : blocks) {
    require_universe(b, carrier.size(), "partition");
    if (b.none()) throw Error(ErrorCode::NotASigmaAlgebra, "empty partition cell");
    if (covered.intersects(b)) throw Error(ErrorCode::NotASigmaAlgebra, "overlapping partition cells");
    covered |= b;
  }
  if (covered.count() != carrier.size()) throw Error(ErrorCode::NotASigmaAlgebra, "partition does not cover carrier");
  std::sort(blocks.begin(), blocks.end(),
            [](const Subset& a, const Subset& b) { return a.find_first() < b.find_first(); });
  return SigmaAlgebra(carrier, std::move(blocks));
}

SigmaAlgebra SigmaAlgebra::from_members(const FiniteCarrier& carrier, const std::vector<Subset>& members) {
  const std::size_t n = carrier.size();
  std::set<Subset> family;
  for (const auto& m : members) {
    require_universe(m, n, "sigma-algebra member");
    family.insert(m);
  }
  if (!family.contains(Subset(n)) || !family.contains(full_subset(n)))
    throw Error(ErrorCode::NotASigmaAlgebra, "family must contain the empty set and the carrier");
  for (const auto& a : family) {
    if (!family.contains(~a)) throw Error(ErrorCode::NotASigmaAlgebra, "not closed under complement: " + format_subset(a));
    for (const auto& b : family)
      if (!family.contains(a | b))
        throw Error(ErrorCode::NotASigmaAlgebra, "not closed under union: " + format_subset(a) + " " + format_subset(b));
  }
  return generate_sigma_algebra(carrier, members);
}

bool SigmaAlgebra::contains(const Subset& set) const {
  require_universe(set, carrier_.size(), "contains");
  for (const auto& b : blocks_) {
    if (b.intersects(set) && !b.is_subset_of(set)) return false;
  }
  return true;
}

Subset SigmaAlgebra::union_of_blocks(const Subset& block_mask) const {
  if (block_mask.size() != blocks_.size()) throw Error(ErrorCode::SpaceMismatch, "block mask size");
  Subset out(carrier_.size());
  for (auto b : members_of(block_mask)) out |= blocks_[b];
  return out;
}

std::uint64_t SigmaAlgebra::member_count() const {
  if (blocks_.size() > 62) throw Error(ErrorCode::TooLarge, "sigma-algebra has more than 2^62 members");
  return std::uint64_t{1} << blocks_.size();
}

std::vector<Subset> SigmaAlgebra::members() const {
  if (blocks_.size() > kMaxEnumeratedBlocks) throw Error(ErrorCode::TooLarge, "too many members to enumerate");
  std::vector<Subset> out;
  out.reserve(member_count());
  for (std::uint64_t mask = 0; mask < member_count(); ++mask)
    out.push_back(union_of_blocks(subset_from_mask(blocks_.size(), mask)));
  return out;
}

SigmaAlgebra generate_sigma_algebra(const FiniteCarrier& carrier, const std::vector<Subset>& generators) {
  const std::size_t n = carrier.size();
  for (const auto& g : generators) require_universe(g, n, "generator");

  // Points with the same membership pattern across all generators cannot be
  // separated by any set in the generated algebra; those classes are the atoms.
  std::map<Subset, std::size_t> signature_to_block;
  std::vector<Subset> blocks;
  for (std::size_t p = 0; p < n; ++p) {
    Subset signature(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (generators[g].test(p)) signature.set(g);
    auto [it, inserted] = signature_to_block.try_emplace(signature, blocks.size());
    if (inserted) blocks.emplace_back(n);
    blocks[it->second].set(p);
  }
  return SigmaAlgebra::from_partition(carrier, std::move(blocks));
}

// ---------------------------------------------------------------------------
// FiniteMeasureSpace

FiniteMeasureSpace::FiniteMeasureSpace(SigmaAlgebra sigma, std::vector<ExtRational> weights)
    : sigma_(std::move(sigma)), weights_(std::move(weights)), null_set_(sigma_.carrier().size()) {
  if (weights_.size() != sigma_.carrier().size())
    throw Error(ErrorCode::SpaceMismatch, "one weight per carrier point required");
  block_measure_.reserve(sigma_.blocks().size());
  for (const auto& block : sigma_.blocks()) {
    ExtRational m;
    for (auto p : members_of(block)) m += weights_[p];
    if (m.is_zero()) null_set_ |= block;
    block_measure_.push_back(m);
  }
}

FiniteMeasureSpace FiniteMeasureSpace::counting(const FiniteCarrier& carrier) {
  return FiniteMeasureSpace(SigmaAlgebra::discrete(carrier), std::vector<ExtRational>(carrier.size(), ExtRational(1)));
}

FiniteMeasureSpace FiniteMeasureSpace::point_supported(const FiniteCarrier& carrier, std::vector<ExtRational> weights) {
  return FiniteMeasureSpace(SigmaAlgebra::discrete(carrier), std::move(weights));
}

ExtRational FiniteMeasureSpace::measure(const Subset& set) const {
  if (!sigma_.contains(set)) throw Error(ErrorCode::NotMeasurable, "measure of non-measurable set " + format_subset(set));
  ExtRational m;
  for (auto p : members_of(set)) m += weights_[p];
  return m;
}

bool FiniteMeasureSpace::is_counting() const {
  return sigma_.is_discrete() &&
         std::all_of(weights_.begin(), weights_.end(), [](const ExtRational& w) { return w == ExtRational(1); });
}

bool FiniteMeasureSpace::is_measurable_function(std::span<const Rational> values) const {
  if (values.size() != size()) return false;
  for (const auto& block : sigma_.blocks()) {
    const auto first = block.find_first();
    for (auto p = block.find_next(first); p != Subset::npos; p = block.find_next(p))
      if (values[p] != values[first]) return false;
  }
  return true;
}

bool operator==(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b) {
  return a.sigma_ == b.sigma_ && a.weights_ == b.weights_;
}

SpaceRef share(FiniteMeasureSpace space) { return std::make_shared<const FiniteMeasureSpace>(std::move(space)); }

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::vector<Subset> null_ideal(const FiniteMeasureSpace& space) {
  const auto null_points = members_of(space.null_set());
  if (null_points.size() > kMaxEnumeratedBlocks) throw Error(ErrorCode::TooLarge, "null ideal too large to enumerate");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << null_points.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << null_points.size()); ++mask) {
    Subset s(space.size());
    for (std::size_t k = 0; k < null_points.size(); ++k)
      if ((mask >> k) & 1U) s.set(null_points[k]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subset> atoms(const FiniteMeasureSpace& space) {
  // An atom is one non-null block together with any measurable null set.
  const auto& blocks = space.sigma().blocks();
  std::vector<std::size_t> null_blocks;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (space.is_null_block(b)) null_blocks.push_back(b);
  if (null_blocks.size() > kMaxEnumeratedBlocks) throw Error(ErrorCode::TooLarge, "too many null blocks");

  std::vector<Subset> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (space.is_null_block(b)) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << null_blocks.size()); ++mask) {
      Subset a = blocks[b];
      for (std::size_t k = 0; k < null_blocks.size(); ++k)
        if ((mask >> k) & 1U) a |= blocks[null_blocks[k]];
      out.push_back(std::move(a));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MeasurableMap

MeasurableMap::MeasurableMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw std::invalid_argument("null space");
  if (image_.size() != source_->size()) throw Error(ErrorCode::MapNotTotal, "image size differs from source size");
  for (auto t : image_)
    if (t >= target_->size()) throw Error(ErrorCode::UnknownPoint, "image index outside target");

  // Every target-measurable set is a union of target blocks and preimages
  // commute with unions, so checking blocks is exhaustive.
  const auto& tblocks = target_->sigma().blocks();
  flags_.measurable = std::all_of(tblocks.begin(), tblocks.end(),
                                  [&](const Subset& b) { return source_->sigma().contains(preimage(b)); });
  if (flags_.measurable) {
    flags_.nonsingular = true;
    flags_.imp = true;
    for (std::size_t b = 0; b < tblocks.size(); ++b) {
      const auto pre = source_->measure(preimage(tblocks[b]));
      if (target_->is_null_block(b) && !pre.is_zero()) flags_.nonsingular = false;
      if (!(pre == target_->block_measure(b))) flags_.imp = false;
    }
    flags_.imp = flags_.imp && flags_.nonsingular;
  }
}

MeasurableMap MeasurableMap::from_labels(SpaceRef source, SpaceRef target, const std::map<Label, Label>& mapping) {
  std::vector<std::size_t> image;
  image.reserve(source->size());
  for (auto label : source->carrier().points()) {
    auto it = mapping.find(label);
    if (it == mapping.end()) throw Error(ErrorCode::MapNotTotal, "no image for source point " + std::to_string(label));
    auto t = target->carrier().index_of(it->second);
    if (!t) throw Error(ErrorCode::UnknownPoint, "target point " + std::to_string(it->second) + " not in target carrier");
    image.push_back(*t);
  }
  for (const auto& [from, to] : mapping)
    if (!source->carrier().index_of(from))
      throw Error(ErrorCode::UnknownPoint, "source point " + std::to_string(from) + " not in source carrier");
  return MeasurableMap(std::move(source), std::move(target), std::move(image));
}

MeasurableMap MeasurableMap::identity(SpaceRef space) {
  std::vector<std::size_t> image(space->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return MeasurableMap(space, space, std::move(image));
}

Subset MeasurableMap::preimage(const Subset& target_set) const {
  if (target_set.size() != target_->size()) throw Error(ErrorCode::SpaceMismatch, "preimage of foreign subset");
  Subset out(source_->size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (target_set.test(image_[i])) out.set(i);
  return out;
}

MapFlags classify_map(const MeasurableMap& map) { return map.flags(); }

MeasurableMap compose(const MeasurableMap& psi, const MeasurableMap& phi) {
  if (!same_space(phi.target(), psi.source())) throw Error(ErrorCode::SpaceMismatch, "maps are not composable");
  std::vector<std::size_t> image(phi.image().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = psi.image()[phi.image()[i]];
  return MeasurableMap(phi.source(), psi.target(), std::move(image));
}

// ---------------------------------------------------------------------------
// DirectSum

Subset DirectSum::slice(const Subset& set, std::size_t component) const {
  const auto& comp = components.at(component);
  if (set.size() != space->size()) throw Error(ErrorCode::SpaceMismatch, "slice of foreign subset");
  Subset out(comp->size());
  for (std::size_t i = 0; i < comp->size(); ++i)
    if (set.test(offsets[component] + i)) out.set(i);
  return out;
}

DirectSum direct_sum(const std::vector<SpaceRef>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("direct sum of an empty family");
  DirectSum sum;
  sum.components = spaces;
  std::size_t total = 0;
  for (const auto& s : spaces) {
    sum.offsets.push_back(total);
    total += s->size();
  }
  const auto carrier = FiniteCarrier::range(0, total);
  std::vector<Subset> blocks;
  std::vector<ExtRational> weights;
  weights.reserve(total);
  for (std::size_t c = 0; c < spaces.size(); ++c) {
    const auto& s = *spaces[c];
    for (const auto& b : s.sigma().blocks()) {
      Subset shifted(total);
      for (auto p : members_of(b)) shifted.set(sum.offsets[c] + p);
      blocks.push_back(std::move(shifted));
    }
    for (std::size_t p = 0; p < s.size(); ++p) {
      weights.push_back(s.weight(p));
      sum.tags.emplace_back(c, s.carrier().label(p));
    }
  }
  sum.space = share(FiniteMeasureSpace(SigmaAlgebra::from_partition(carrier, std::move(blocks)), std::move(weights)));
  for (std::size_t c = 0; c < spaces.size(); ++c) {
    std::vector<std::size_t> image(spaces[c]->size());
    for (std::size_t p = 0; p < image.size(); ++p) image[p] = sum.offsets[c] + p;
    sum.injections.emplace_back(spaces[c], sum.space, std::move(image));
  }
  return sum;
}

}  // namespace fsig
