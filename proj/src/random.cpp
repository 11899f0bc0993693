#include "fsig/random.hpp"

#include <algorithm>
#include <numeric>

namespace fsig {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational random_rational(Rng& rng, std::int64_t max_num, std::int64_t max_den) {
  return make_rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

namespace {

Rational random_positive(Rng& rng) { return make_rational(uniform_int(rng, 1, 9), uniform_int(rng, 1, 4)); }

ExtRational random_weight(Rng& rng, double zero, double infinite) {
  if (coin(rng, infinite)) return ExtRational::infinity();
  if (coin(rng, zero)) return ExtRational();
  return ExtRational(random_positive(rng));
}

// Random refinement of a partition: each cell is split in two with probability 1/3.
std::vector<Subset> refine(Rng& rng, std::vector<Subset> cells) {
  std::vector<Subset> out;
  for (auto& cell : cells) {
    const auto pts = members_of(cell);
    if (pts.size() < 2 || !coin(rng, 1.0 / 3)) {
      out.push_back(std::move(cell));
      continue;
    }
    Subset a(cell.size()), b(cell.size());
    a.set(pts.front());
    for (std::size_t k = 1; k < pts.size(); ++k) (coin(rng) ? a : b).set(pts[k]);
    out.push_back(std::move(a));
    if (b.any()) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

FiniteCarrier random_carrier(Rng& rng, std::size_t size) {
  std::vector<Label> pts;
  Label next = uniform_int(rng, -20, 20);
  for (std::size_t i = 0; i < size; ++i) {
    pts.push_back(next);
    next += uniform_int(rng, 1, 3);
  }
  return FiniteCarrier(std::move(pts));
}

SigmaAlgebra random_sigma(Rng& rng, const FiniteCarrier& carrier) {
  const std::size_t n = carrier.size();
  if (n == 0) return SigmaAlgebra::trivial(carrier);
  const auto cells = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(n)));
  std::vector<Subset> blocks(cells, Subset(n));
  for (std::size_t p = 0; p < n; ++p) blocks[p < cells ? p : static_cast<std::size_t>(uniform_int(rng, 0, cells - 1))].set(p);
  std::shuffle(blocks.begin(), blocks.end(), rng);
  // Shuffle membership so the forced assignment of the first points does not bias cell shapes.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Subset> permuted;
  for (const auto& b : blocks) {
    Subset c(n);
    for (auto p : members_of(b)) c.set(perm[p]);
    permuted.push_back(std::move(c));
  }
  return SigmaAlgebra::from_partition(carrier, std::move(permuted));
}

SpaceRef random_space(Rng& rng, const SpaceShape& shape) {
  const auto n = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(shape.min_points), static_cast<std::int64_t>(shape.max_points)));
  auto carrier = random_carrier(rng, n);
  auto sigma = shape.discrete ? SigmaAlgebra::discrete(carrier) : random_sigma(rng, carrier);
  std::vector<ExtRational> w(n);
  for (auto& x : w) x = random_weight(rng, shape.zero_weight, shape.infinite_weight);
  if (shape.nondegenerate && n > 0 && std::all_of(w.begin(), w.end(), [](const ExtRational& x) { return x.is_zero(); }))
    w[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1))] = ExtRational(random_positive(rng));
  return share(FiniteMeasureSpace(std::move(sigma), std::move(w)));
}

MeasurableMap random_map_into(Rng& rng, const SpaceRef& target, MapStrength strength, std::size_t max_points) {
  const std::size_t m = target->size();
  std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(max_points, 1))));
  if (strength == MapStrength::Imp) n = std::max(n, m);
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i)
    image[i] = strength == MapStrength::Imp && i < m ? i : static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1));
  std::shuffle(image.begin(), image.end(), rng);

  auto carrier = random_carrier(rng, n);
  std::vector<Subset> cells;
  for (const auto& block : target->sigma().blocks()) {
    Subset pre(n);
    for (std::size_t i = 0; i < n; ++i)
      if (block.test(image[i])) pre.set(i);
    if (pre.any()) cells.push_back(std::move(pre));
  }
  auto sigma = SigmaAlgebra::from_partition(carrier, refine(rng, std::move(cells)));

  std::vector<ExtRational> w(n);
  switch (strength) {
    case MapStrength::Measurable:
      for (auto& x : w) x = random_weight(rng, 0.25, 0.05);
      break;
    case MapStrength::Nonsingular:
      for (std::size_t i = 0; i < n; ++i) {
        const bool null_target = target->is_null_block(target->sigma().block_of(image[i]));
        w[i] = null_target ? ExtRational() : random_weight(rng, 0.25, 0.05);
      }
      break;
    case MapStrength::Imp:
      for (std::size_t y = 0; y < m; ++y) {
        std::vector<std::size_t> pre;
        for (std::size_t i = 0; i < n; ++i)
          if (image[i] == y) pre.push_back(i);
        const auto& wy = target->weight(y);
        if (wy.is_infinite()) {
          for (auto i : pre) w[i] = coin(rng, 0.5) ? ExtRational::infinity() : random_weight(rng, 0.3, 0);
          w[pre[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(pre.size()) - 1))]] = ExtRational::infinity();
          continue;
        }
        std::vector<Rational> parts(pre.size());
        Rational total = 0;
        for (auto& p : parts) {
          p = coin(rng, 0.2) ? Rational(0) : random_positive(rng);
          total += p;
        }
        if (sgn(total) == 0) {
          parts.front() = 1;
          total = 1;
        }
        for (std::size_t k = 0; k < pre.size(); ++k) w[pre[k]] = ExtRational(Rational(wy.value() * parts[k] / total));
      }
      break;
  }
  auto source = share(FiniteMeasureSpace(std::move(sigma), std::move(w)));
  return MeasurableMap(std::move(source), target, std::move(image));
}

MeasurableMap random_function(Rng& rng, const SpaceRef& source, const SpaceRef& target) {
  std::vector<std::size_t> image(source->size());
  for (auto& y : image) y = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(target->size()) - 1));
  return MeasurableMap(source, target, std::move(image));
}

FnClass random_class(Rng& rng, const SpaceRef& space, SpaceTag tag, std::int64_t max_num, std::int64_t max_den) {
  std::vector<Rational> v(space->size());
  const auto& blocks = space->sigma().blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Rational value = random_rational(rng, max_num, max_den);
    if (tag == SpaceTag::L2 && space->block_measure(b).is_infinite()) value = 0;
    for (auto p : members_of(blocks[b])) v[p] = value;
  }
  return FnClass::canonical(space, std::move(v), tag);
}

MeasureAlgebra random_measure_algebra(Rng& rng, std::size_t max_atoms) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_atoms)));
  std::vector<ExtRational> mu(n);
  for (auto& m : mu) m = ExtRational(random_positive(rng));
  return MeasureAlgebra(std::move(mu));
}

BooleanHom random_hom(Rng& rng, const MeasureAlgebra& source, const MeasureAlgebra& target) {
  std::vector<Element> images(source.atom_count(), target.algebra().zero());
  for (std::size_t t = 0; t < target.atom_count(); ++t)
    images[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(source.atom_count()) - 1))].set(t);
  return BooleanHom::from_atom_images(source, target, std::move(images));
}

DualElement random_dual(Rng& rng, const MeasureAlgebra& algebra) {
  std::vector<Rational> v(algebra.atom_count());
  for (auto& x : v) x = random_rational(rng, 4, 2);
  return DualElement(algebra, std::move(v));
}

PartialInjection random_partial_injection(Rng& rng, const FiniteCarrier& source, const FiniteCarrier& target) {
  std::vector<Label> free = target.points();
  std::shuffle(free.begin(), free.end(), rng);
  std::map<Label, Label> pairs;
  std::size_t next = 0;
  for (auto x : source.points())
    if (next < free.size() && coin(rng, 0.7)) pairs.emplace(x, free[next++]);
  return PartialInjection(source, target, std::move(pairs));
}

IntSignal random_int_signal(Rng& rng, std::size_t length, std::int64_t lo, std::int64_t hi) {
  IntSignal s{uniform_int(rng, -1000, 1000), std::vector<std::int64_t>(length)};
  for (auto& x : s.samples) x = uniform_int(rng, lo, hi);
  return s;
}

Image random_image(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t maxval) {
  Image img{rows, cols, std::vector<std::int64_t>(rows * cols)};
  for (auto& p : img.pixels) p = uniform_int(rng, 0, maxval);
  return img;
}

}  // namespace fsig
