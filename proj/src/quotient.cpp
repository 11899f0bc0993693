#include "fsig/quotient.hpp"

#include <set>

#include "fsig/error.hpp"

namespace fsig {

namespace {

constexpr std::size_t kMaxCheckedAtoms = 12;
constexpr std::size_t kMaxReportedFailures = 8;

void note(HomReport& r, bool& flag, const std::string& what) {
  flag = false;
  if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// BooleanAlgebra / MeasureAlgebra

Element BooleanAlgebra::sup(const std::vector<Element>& family) const {
  Element out = zero();
  for (const auto& a : family) out |= a;
  return out;
}

Element BooleanAlgebra::inf(const std::vector<Element>& family) const {
  Element out = unit();
  for (const auto& a : family) out &= a;
  return out;
}

std::vector<Element> BooleanAlgebra::elements() const {
  if (atoms_ > 24) throw Error(ErrorCode::TooLarge, "too many algebra elements to enumerate");
  std::vector<Element> out;
  out.reserve(std::size_t{1} << atoms_);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms_); ++mask) out.push_back(subset_from_mask(atoms_, mask));
  return out;
}

MeasureAlgebra::MeasureAlgebra(std::vector<ExtRational> atom_measures)
    : algebra_(atom_measures.size()), atom_mu_(std::move(atom_measures)) {
  if (atom_mu_.empty()) throw Error(ErrorCode::DegenerateMeasure, "measure algebra needs at least one atom");
  for (const auto& m : atom_mu_)
    if (m.is_zero()) throw Error(ErrorCode::DegenerateMeasure, "nonzero element with zero measure");
}

ExtRational MeasureAlgebra::mu_bar(const Element& a) const {
  if (!algebra_.owns(a)) throw Error(ErrorCode::SpaceMismatch, "element of another algebra");
  ExtRational m;
  for (auto i : members_of(a)) m += atom_mu_[i];
  return m;
}

// ---------------------------------------------------------------------------
// QuotientAlgebra

QuotientAlgebra::QuotientAlgebra(SpaceRef space, MeasureAlgebra algebra, std::vector<std::size_t> atom_blocks)
    : space_(std::move(space)),
      algebra_(std::move(algebra)),
      atom_blocks_(std::move(atom_blocks)),
      block_to_atom_(space_->sigma().blocks().size()) {
  for (std::size_t k = 0; k < atom_blocks_.size(); ++k) block_to_atom_.at(atom_blocks_[k]) = k;
}

Element QuotientAlgebra::project(const Subset& set) const {
  if (!space_->sigma().contains(set)) throw Error(ErrorCode::NotMeasurable, "projection of non-measurable set");
  Element out = algebra().zero();
  const auto& blocks = space_->sigma().blocks();
  for (std::size_t k = 0; k < atom_blocks_.size(); ++k)
    if (blocks[atom_blocks_[k]].is_subset_of(set)) out.set(k);
  return out;
}

Subset QuotientAlgebra::representative(const Element& a) const {
  if (!algebra().owns(a)) throw Error(ErrorCode::SpaceMismatch, "element of another algebra");
  Subset out(space_->size());
  for (auto k : members_of(a)) out |= space_->sigma().blocks()[atom_blocks_[k]];
  return out;
}

QuotientAlgebra quotient_measure_algebra(const SpaceRef& space) {
  std::vector<ExtRational> mu;
  std::vector<std::size_t> atom_blocks;
  for (std::size_t b = 0; b < space->sigma().blocks().size(); ++b) {
    if (space->is_null_block(b)) continue;
    atom_blocks.push_back(b);
    mu.push_back(space->block_measure(b));
  }
  if (atom_blocks.empty())
    throw Error(ErrorCode::DegenerateMeasure, "every measurable set is null; the quotient has 0 = 1");
  return QuotientAlgebra(space, MeasureAlgebra(std::move(mu)), std::move(atom_blocks));
}

// ---------------------------------------------------------------------------
// BooleanHom

BooleanHom::BooleanHom(BooleanAlgebra source, BooleanAlgebra target, std::optional<MeasureAlgebra> source_mu,
                       std::optional<MeasureAlgebra> target_mu)
    : source_(source), target_(target), source_mu_(std::move(source_mu)), target_mu_(std::move(target_mu)) {}

void BooleanHom::finish_atom_form(std::vector<Element> images) {
  if (images.size() != source_.atom_count()) throw Error(ErrorCode::SpaceMismatch, "one image per source atom required");
  Element covered = target_.zero();
  bool disjoint = true;
  for (const auto& img : images) {
    if (!target_.owns(img)) throw Error(ErrorCode::SpaceMismatch, "atom image outside target algebra");
    if (covered.intersects(img)) disjoint = false;
    covered |= img;
  }
  atom_images_ = std::move(images);
  flags_.is_hom = disjoint && covered == target_.unit();
  if (flags_.is_hom) {
    flags_.is_soc = true;
    if (source_mu_ && target_mu_) {
      bool mp = true;
      for (std::size_t i = 0; i < source_.atom_count(); ++i)
        if (!(target_mu_->mu_bar((*atom_images_)[i]) == source_mu_->atom_measures()[i])) mp = false;
      flags_.is_measure_preserving = mp;
    }
  } else if (source_.atom_count() <= kMaxCheckedAtoms) {
    const auto report = check_hom_laws(*this);
    flags_.is_soc = report.is_soc();
    flags_.is_measure_preserving = report.measure_preserving;
  } else if (source_mu_ && target_mu_) {
    flags_.is_measure_preserving = false;
  }
}

void BooleanHom::finish_function_form(Action action) {
  if (source_.atom_count() > kMaxCheckedAtoms)
    throw Error(ErrorCode::TooLarge, "function-form homs are limited to 12 source atoms");
  action_ = std::move(action);
  const auto report = check_hom_laws(*this);
  flags_.is_hom = report.is_hom();
  flags_.is_soc = report.is_soc();
  flags_.is_measure_preserving = report.measure_preserving;
}

BooleanHom BooleanHom::from_atom_images(BooleanAlgebra source, BooleanAlgebra target, std::vector<Element> images) {
  BooleanHom h(source, target, std::nullopt, std::nullopt);
  h.finish_atom_form(std::move(images));
  return h;
}

BooleanHom BooleanHom::from_atom_images(const MeasureAlgebra& source, const MeasureAlgebra& target,
                                        std::vector<Element> images) {
  BooleanHom h(source.algebra(), target.algebra(), source, target);
  h.finish_atom_form(std::move(images));
  return h;
}

BooleanHom BooleanHom::from_function(BooleanAlgebra source, BooleanAlgebra target, Action action) {
  BooleanHom h(source, target, std::nullopt, std::nullopt);
  h.finish_function_form(std::move(action));
  return h;
}

BooleanHom BooleanHom::from_function(const MeasureAlgebra& source, const MeasureAlgebra& target, Action action) {
  BooleanHom h(source.algebra(), target.algebra(), source, target);
  h.finish_function_form(std::move(action));
  return h;
}

BooleanHom BooleanHom::identity(const MeasureAlgebra& algebra) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < algebra.atom_count(); ++i) images.push_back(algebra.algebra().atom(i));
  return from_atom_images(algebra, algebra, std::move(images));
}

Element BooleanHom::operator()(const Element& a) const {
  if (!source_.owns(a)) throw Error(ErrorCode::SpaceMismatch, "element of another algebra");
  if (atom_images_) {
    Element out = target_.zero();
    for (auto i : members_of(a)) out |= (*atom_images_)[i];
    return out;
  }
  Element out = action_(a);
  if (!target_.owns(out)) throw Error(ErrorCode::SpaceMismatch, "hom action left its target algebra");
  return out;
}

BooleanHom compose(const BooleanHom& theta, const BooleanHom& pi) {
  if (!(pi.target() == theta.source())) throw Error(ErrorCode::SpaceMismatch, "homs are not composable");
  if (pi.target_measure() && theta.source_measure() && !(*pi.target_measure() == *theta.source_measure()))
    throw Error(ErrorCode::SpaceMismatch, "homs are not composable (different measures)");
  BooleanHom out(pi.source(), theta.target(), pi.source_measure(), theta.target_measure());
  if (pi.atom_images_ && theta.atom_images_) {
    std::vector<Element> images;
    images.reserve(pi.source().atom_count());
    for (const auto& img : *pi.atom_images_) images.push_back(theta(img));
    out.finish_atom_form(std::move(images));
  } else {
    out.finish_function_form([theta, pi](const Element& a) { return theta(pi(a)); });
  }
  return out;
}

bool same_action(const BooleanHom& a, const BooleanHom& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  if (a.has_atom_form() && b.has_atom_form()) {
    for (std::size_t i = 0; i < a.source().atom_count(); ++i) {
      const auto atom = a.source().atom(i);
      if (a(atom) != b(atom)) return false;
    }
    return true;
  }
  for (const auto& e : a.source().elements())
    if (a(e) != b(e)) return false;
  return true;
}

BooleanHom induced_hom(const MeasurableMap& phi) {
  if (!phi.is_nonsingular()) throw Error(ErrorCode::NotNonsingular, "induced hom requires a non-singular map");
  const auto from = quotient_measure_algebra(phi.target());
  const auto to = quotient_measure_algebra(phi.source());
  const auto& blocks = phi.target()->sigma().blocks();
  std::vector<Element> images;
  images.reserve(from.atom_blocks().size());
  for (auto b : from.atom_blocks()) images.push_back(to.project(phi.preimage(blocks[b])));
  return BooleanHom::from_atom_images(from.measure_algebra(), to.measure_algebra(), std::move(images));
}

HomReport check_hom_laws(const BooleanHom& pi) {
  const auto& src = pi.source();
  const auto& tgt = pi.target();
  if (src.atom_count() > kMaxCheckedAtoms) throw Error(ErrorCode::TooLarge, "hom law check limited to 12 source atoms");

  HomReport r;
  const auto elements = src.elements();
  std::vector<Element> image;
  image.reserve(elements.size());
  for (const auto& e : elements) image.push_back(pi(e));
  const auto index = [](const Element& e) { return static_cast<std::size_t>(subset_to_mask(e)); };

  if (image[index(src.unit())] != tgt.unit()) {
    note(r, r.preserves_unit, "pi(1) != 1");
    r.preserves_finite_infs = false;
  }
  if (image[index(src.zero())].any()) note(r, r.preserves_finite_sups, "pi(0) != 0");

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto& a = elements[i];
      const auto& b = elements[j];
      const auto pair = [&] { return format_subset(a) + "," + format_subset(b); };
      if (image[index(a ^ b)] != (image[i] ^ image[j]) && r.preserves_sym_diff)
        note(r, r.preserves_sym_diff, "symmetric difference not preserved at " + pair());
      if (image[index(a & b)] != (image[i] & image[j]) && r.preserves_meet)
        note(r, r.preserves_meet, "intersection not preserved at " + pair());
      if (image[index(a | b)] != (image[i] | image[j]) && r.preserves_finite_sups)
        note(r, r.preserves_finite_sups, "binary supremum not preserved at " + pair());
      if (image[index(a & b)] != (image[i] & image[j]) && r.preserves_finite_infs)
        note(r, r.preserves_finite_infs, "binary infimum not preserved at " + pair());
      // On a finite algebra the supremum of a chain is its top element, so
      // chain suprema are preserved iff a ⊆ b implies π(a) ⊆ π(b).
      if (a.is_subset_of(b) && !image[i].is_subset_of(image[j]) && r.preserves_chain_sups)
        note(r, r.preserves_chain_sups, "chain supremum not preserved at " + pair());
    }
  }

  std::vector<std::size_t> kernel;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (image[i].none()) kernel.push_back(i);
  std::set<std::size_t> kernel_set(kernel.begin(), kernel.end());
  if (!kernel_set.contains(index(src.zero()))) note(r, r.kernel_is_ideal, "kernel does not contain 0");
  for (auto k : kernel) {
    for (std::size_t i = 0; i < elements.size() && r.kernel_is_ideal; ++i)
      if (elements[i].is_subset_of(elements[k]) && !kernel_set.contains(i))
        note(r, r.kernel_is_ideal, "kernel not downward closed");
    for (auto k2 : kernel)
      if (r.kernel_is_ideal && !kernel_set.contains(index(elements[k] | elements[k2])))
        note(r, r.kernel_is_ideal, "kernel not closed under union");
  }

  std::set<Element> distinct(image.begin(), image.end());
  r.injective = distinct.size() == image.size();
  if (tgt.atom_count() <= 24) r.surjective = distinct.size() == (std::size_t{1} << tgt.atom_count());
  else r.surjective = false;

  if (pi.source_measure() && pi.target_measure()) {
    bool mp = true;
    for (std::size_t i = 0; i < elements.size() && mp; ++i)
      if (!(pi.target_measure()->mu_bar(image[i]) == pi.source_measure()->mu_bar(elements[i]))) mp = false;
    r.measure_preserving = mp;
  }
  return r;
}

}  // namespace fsig
