#include "fsig/signal.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "fsig/error.hpp"

namespace fsig {

namespace {

Rational sum_of_squares(std::span<const Rational> v) {
  Rational total = 0;
  for (const auto& x : v) total += x * x;
  return total;
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Affine map sending grid f onto grid g with the given S, if one exists.
std::optional<IndexMap> forced_map(const Grid& f, const Grid& g, std::int64_t s) {
  if (s == 0 || f.count != g.count || f.count == 0) return std::nullopt;
  if (g.stride != abs64(s) * f.stride) return std::nullopt;
  IndexMap phi{s, s > 0 ? g.start - s * f.start : g.start - s * f.last()};
  if (!(image(phi, f) == g)) return std::nullopt;
  return phi;
}

// c = 1 transport of f along φ, listed on the target grid.
std::vector<Rational> transport(const IndexMap& phi, const Segment& f) {
  const Grid target = image(phi, f.grid());
  std::vector<Rational> out(target.count);
  for (std::size_t k = 0; k < target.count; ++k) out[k] = f.at(*phi.preimage(target.position(k)));
  return out;
}

using Key = std::tuple<Rational, std::int64_t, std::int64_t, bool, bool>;

Key arrow_key(const SegmentArrow& a) {
  return {a.residual_norm_squared(), abs64(a.phi.scale), abs64(a.phi.offset), a.phi.scale < 0, a.phi.offset < 0};
}

SegmentArrow build(const Segment& f, const Segment& g, const IndexMap& phi, const Rational& c,
                   std::vector<Rational> predicted) {
  SegmentArrow a = make_arrow(0, 1, f.grid(), phi, c);
  for (std::size_t k = 0; k < predicted.size(); ++k) a.residual[k] = g[k] - predicted[k];
  return a;
}

std::optional<SegmentArrow> keep_best(std::optional<SegmentArrow> best, SegmentArrow candidate) {
  if (!best || arrow_key(candidate) < arrow_key(*best)) return candidate;
  return best;
}

std::optional<SegmentArrow> accept(std::optional<SegmentArrow> best, Tolerance tol) {
  if (best && !tol.accepts(best->residual_norm_squared())) return std::nullopt;
  return best;
}

std::string grid_text(const Grid& g) {
  std::string s = "[" + std::to_string(g.start) + "," + std::to_string(g.end()) + ")";
  if (g.stride != 1) s += "/" + std::to_string(g.stride);
  return s;
}

}  // namespace

std::optional<std::int64_t> IndexMap::preimage(std::int64_t j) const {
  const std::int64_t d = j - offset;
  if (scale == 0 || d % scale != 0) return std::nullopt;
  return d / scale;
}

IndexMap compose(const IndexMap& b, const IndexMap& a) {
  return {b.scale * a.scale, b.scale * a.offset + b.offset};
}

std::optional<std::size_t> Grid::index_of(std::int64_t pos) const {
  if (count == 0 || stride == 0) return std::nullopt;
  const std::int64_t d = pos - start;
  if (d % stride != 0) return std::nullopt;
  const std::int64_t k = d / stride;
  if (k < 0 || static_cast<std::size_t>(k) >= count) return std::nullopt;
  return static_cast<std::size_t>(k);
}

Grid image(const IndexMap& phi, const Grid& grid) {
  if (phi.scale == 0) throw Error(ErrorCode::IntervalMismatch, "index map is not a bijection");
  if (grid.count == 0) return {phi(grid.start), abs64(phi.scale) * grid.stride, 0};
  const std::int64_t a = phi(grid.start);
  const std::int64_t b = phi(grid.last());
  return {std::min(a, b), abs64(phi.scale) * grid.stride, grid.count};
}

// ---------------------------------------------------------------------------
// Segment

Segment::Segment(std::int64_t start, std::vector<Rational> samples)
    : grid_{start, 1, samples.size()}, samples_(std::move(samples)) {
  if (grid_.count == 0) throw Error(ErrorCode::IntervalMismatch, "segment needs a nonempty grid");
}

Segment::Segment(Grid grid, std::vector<Rational> samples) : grid_(grid), samples_(std::move(samples)) {
  if (grid_.count == 0 || grid_.stride <= 0) throw Error(ErrorCode::IntervalMismatch, "segment needs a nonempty grid");
  if (samples_.size() != grid_.count) throw Error(ErrorCode::IntervalMismatch, "sample count differs from grid size");
}

const Rational& Segment::at(std::int64_t pos) const {
  auto k = grid_.index_of(pos);
  if (!k) throw Error(ErrorCode::IntervalMismatch, "position " + std::to_string(pos) + " is off the segment grid");
  return samples_[*k];
}

SpaceRef grid_space(const Grid& grid, const Rational& weight_scale) {
  std::vector<Label> points(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) points[k] = grid.position(k);
  const ExtRational w(Rational(weight_scale * grid.stride));
  return share(FiniteMeasureSpace::point_supported(FiniteCarrier(std::move(points)),
                                                   std::vector<ExtRational>(grid.count, w)));
}

// ---------------------------------------------------------------------------
// Arrows

std::string to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::Translation: return "translation";
    case ArrowKind::Affine: return "affine";
    case ArrowKind::AmpAffine: return "amp-affine";
  }
  return "unknown";
}

ArrowKind classify_arrow(const IndexMap& phi, const Rational& c) {
  if (c != 1) return ArrowKind::AmpAffine;
  return phi.scale == 1 ? ArrowKind::Translation : ArrowKind::Affine;
}

bool SegmentArrow::is_exact() const {
  return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational SegmentArrow::residual_norm_squared() const { return sum_of_squares(residual); }

double SegmentArrow::residual_norm() const { return std::sqrt(residual_norm_squared().get_d()); }

MeasurableMap SegmentArrow::point_map() const {
  const Grid tg = target_grid();
  auto src = grid_space(source_grid);
  auto dst = grid_space(tg, target_weight);
  std::vector<std::size_t> img(source_grid.count);
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = *tg.index_of(phi(source_grid.position(k)));
  return MeasurableMap(std::move(src), std::move(dst), std::move(img));
}

bool same_data(const SegmentArrow& a, const SegmentArrow& b) {
  return a.source_grid == b.source_grid && a.phi == b.phi && a.scale == b.scale && a.residual == b.residual;
}

SegmentArrow make_arrow(std::size_t source, std::size_t target, const Grid& source_grid, IndexMap phi, Rational c) {
  SegmentArrow a;
  a.source = source;
  a.target = target;
  a.source_grid = source_grid;
  a.phi = phi;
  a.kind = classify_arrow(phi, c);
  a.scale = std::move(c);
  a.residual.assign(source_grid.count, Rational(0));
  a.target_weight = Rational(1, static_cast<unsigned long>(abs64(phi.scale)));
  return a;
}

SegmentArrow identity_arrow(std::size_t object, const Grid& grid) { return make_arrow(object, object, grid, {}); }

Segment transfer(const SegmentArrow& arrow, const Segment& f) {
  if (!(f.grid() == arrow.source_grid)) throw Error(ErrorCode::IntervalMismatch, "segment is not on the arrow's source grid");
  auto values = transport(arrow.phi, f);
  for (auto& v : values) v *= arrow.scale;
  return Segment(arrow.target_grid(), std::move(values));
}

std::vector<Rational> delta(const Segment& observed, const Segment& predicted) {
  if (!(observed.grid() == predicted.grid())) throw Error(ErrorCode::IntervalMismatch, "segments live on different grids");
  std::vector<Rational> out(observed.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = observed[k] - predicted[k];
  return out;
}

Segment reconstruct(const Segment& predicted, std::span<const Rational> residual) {
  if (residual.size() != predicted.size()) throw Error(ErrorCode::IntervalMismatch, "residual length differs from segment");
  std::vector<Rational> out(predicted.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = predicted[k] + residual[k];
  return Segment(predicted.grid(), std::move(out));
}

SegmentArrow compose(const SegmentArrow& b, const SegmentArrow& a) {
  const Grid mid = a.target_grid();
  if (!(mid == b.source_grid)) throw Error(ErrorCode::IntervalMismatch, "arrows are not composable");
  SegmentArrow out = make_arrow(a.source, b.target, a.source_grid, compose(b.phi, a.phi), Rational(b.scale * a.scale));
  const Grid tg = out.target_grid();
  for (std::size_t k = 0; k < tg.count; ++k) {
    const auto j = tg.position(k);
    const auto m = *mid.index_of(*b.phi.preimage(j));
    out.residual[k] = b.residual[k] + b.scale * a.residual[m];
  }
  out.target_weight = a.target_weight * b.target_weight;
  return out;
}

SegmentArrow inverse_arrow(const SegmentArrow& a) {
  if (abs64(a.phi.scale) != 1 || sgn(a.scale) == 0)
    throw Error(ErrorCode::NotInvertible, "only arrows with |S| = 1 and c != 0 are invertible");
  const Grid tg = a.target_grid();
  const IndexMap inv{a.phi.scale, -a.phi.scale * a.phi.offset};
  SegmentArrow out = make_arrow(a.target, a.source, tg, inv, Rational(1 / a.scale));
  for (std::size_t k = 0; k < a.source_grid.count; ++k) {
    const auto i = a.source_grid.position(k);
    out.residual[k] = -a.residual[*tg.index_of(a.phi(i))] / a.scale;
  }
  out.target_weight = 1 / a.target_weight;
  return out;
}

bool is_identity(const SegmentArrow& a) {
  return a.phi.is_identity() && a.scale == 1 && a.is_exact();
}

bool Tolerance::accepts(const Rational& norm_squared) const {
  if (std::isinf(value) && value > 0) return true;
  if (!(value >= 0)) return false;
  const Rational t(value);
  return norm_squared <= t * t;
}

// ---------------------------------------------------------------------------
// Detectors

std::optional<SegmentArrow> detect_translation(const Segment& f, const Segment& g, Tolerance tol) {
  if (f.size() != g.size() || f.stride() != g.stride()) return std::nullopt;
  auto phi = forced_map(f.grid(), g.grid(), 1);
  if (!phi) return std::nullopt;
  return accept(build(f, g, *phi, Rational(1), transport(*phi, f)), tol);
}

std::optional<SegmentArrow> detect_affine(const Segment& f, const Segment& g, std::span<const std::int64_t> strides,
                                          Tolerance tol) {
  std::optional<SegmentArrow> best;
  for (auto s : strides) {
    auto phi = forced_map(f.grid(), g.grid(), s);
    if (!phi) continue;
    best = keep_best(std::move(best), build(f, g, *phi, Rational(1), transport(*phi, f)));
  }
  return accept(std::move(best), tol);
}

std::optional<SegmentArrow> detect_amp_affine(const Segment& f, const Segment& g,
                                              std::span<const std::int64_t> strides, Tolerance tol) {
  std::optional<SegmentArrow> best;
  for (auto s : strides) {
    auto phi = forced_map(f.grid(), g.grid(), s);
    if (!phi) continue;
    auto p = transport(*phi, f);
    const Rational pp = sum_of_squares(p);
    Rational c(1);
    if (sgn(pp) == 0) {
      if (sgn(sum_of_squares(g.samples())) != 0) continue;
    } else {
      Rational pg = 0;
      for (std::size_t k = 0; k < p.size(); ++k) pg += p[k] * g[k];
      c = pg / pp;
      if (sgn(c) == 0) continue;
    }
    for (auto& v : p) v *= c;
    best = keep_best(std::move(best), build(f, g, *phi, c, std::move(p)));
  }
  return accept(std::move(best), tol);
}

// ---------------------------------------------------------------------------
// Segmentation

std::vector<Segment> segment_signal(const Signal& signal, std::span<const std::int64_t> breakpoints) {
  if (signal.samples.empty()) throw Error(ErrorCode::EmptySignal, "signal has no samples");
  const std::int64_t lo = signal.origin;
  const std::int64_t hi = signal.origin + static_cast<std::int64_t>(signal.samples.size());
  std::int64_t prev = lo;
  for (auto b : breakpoints) {
    if (b <= prev || b >= hi) throw Error(ErrorCode::BadBreakpoints, "breakpoint " + std::to_string(b) + " out of order or range");
    prev = b;
  }
  std::vector<Segment> out;
  out.reserve(breakpoints.size() + 1);
  std::int64_t start = lo;
  auto cut = [&](std::int64_t end) {
    std::vector<Rational> v(signal.samples.begin() + (start - lo), signal.samples.begin() + (end - lo));
    out.emplace_back(start, std::move(v));
    start = end;
  };
  for (auto b : breakpoints) cut(b);
  cut(hi);
  return out;
}

std::vector<std::int64_t> uniform_breakpoints(const Signal& signal, std::size_t piece_length) {
  if (piece_length == 0) throw Error(ErrorCode::BadBreakpoints, "segment length must be positive");
  std::vector<std::int64_t> out;
  for (std::size_t k = piece_length; k < signal.samples.size(); k += piece_length)
    out.push_back(signal.origin + static_cast<std::int64_t>(k));
  return out;
}

Signal rejoin(std::span<const Segment> segments) {
  if (segments.empty()) throw Error(ErrorCode::EmptySignal, "nothing to rejoin");
  Signal out{segments.front().start(), {}};
  std::int64_t next = out.origin;
  for (const auto& s : segments) {
    if (s.stride() != 1 || s.start() != next) throw Error(ErrorCode::IntervalMismatch, "segments are not contiguous");
    out.samples.insert(out.samples.end(), s.samples().begin(), s.samples().end());
    next = s.end();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functor graph

std::size_t FunctorGraph::add_object(Segment segment, std::string label) {
  objects_.push_back({std::move(segment), std::move(label)});
  return objects_.size() - 1;
}

std::size_t FunctorGraph::add_arrow(SegmentArrow arrow, std::string label) {
  if (arrow.source >= objects_.size() || arrow.target >= objects_.size())
    throw Error(ErrorCode::IntervalMismatch, "arrow endpoints are not objects of the graph");
  if (!(objects_[arrow.source].segment.grid() == arrow.source_grid))
    throw Error(ErrorCode::IntervalMismatch, "arrow source grid differs from its source object");
  arrows_.push_back({std::move(arrow), std::move(label)});
  return arrows_.size() - 1;
}

FunctorLawReport verify_functor_laws(const FunctorGraph& graph) {
  constexpr std::size_t kMaxTriples = 20000;
  FunctorLawReport r;
  const auto& objs = graph.objects();
  const auto& arrows = graph.arrows();
  auto name = [&](std::size_t i) { return arrows[i].label.empty() ? "#" + std::to_string(i) : arrows[i].label; };
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    r.failures.push_back(std::move(msg));
  };
  auto reconstructs = [&](const SegmentArrow& a) {
    const auto& target = objs[a.target].segment;
    if (!(a.target_grid() == target.grid())) return false;
    return reconstruct(transfer(a, objs[a.source].segment), a.residual) == target;
  };

  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto id = identity_arrow(i, objs[i].segment.grid());
    ++r.identity_checks;
    if (!(transfer(id, objs[i].segment) == objs[i].segment)) fail(r.identity_ok, "identity on object " + std::to_string(i));
  }

  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i].data;
    if (!reconstructs(a)) {
      fail(r.reconstruction_ok, "arrow " + name(i) + " does not reconstruct its target");
      continue;
    }
    ++r.identity_checks;
    const auto left = compose(identity_arrow(a.target, a.target_grid()), a);
    const auto right = compose(a, identity_arrow(a.source, a.source_grid));
    if (!same_data(left, a) || !same_data(right, a)) fail(r.identity_ok, "identity law for arrow " + name(i));
  }
  if (!r.reconstruction_ok) return r;

  std::size_t triples = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      const auto& a = arrows[i].data;
      const auto& b = arrows[j].data;
      if (a.target != b.source) continue;
      ++r.composition_checks;
      const auto ba = compose(b, a);
      if (!reconstructs(ba)) fail(r.functoriality_ok, "composite " + name(j) + "∘" + name(i) + " breaks reconstruction");
      if (a.is_exact() && b.is_exact() &&
          !(transfer(ba, objs[a.source].segment) == transfer(b, transfer(a, objs[a.source].segment))))
        fail(r.functoriality_ok, "transfer is not functorial on " + name(j) + "∘" + name(i));
      for (std::size_t k = 0; k < arrows.size() && triples < kMaxTriples; ++k) {
        const auto& c = arrows[k].data;
        if (b.target != c.source) continue;
        ++triples;
        ++r.associativity_checks;
        if (!same_data(compose(c, ba), compose(compose(c, b), a)))
          fail(r.associativity_ok, "associativity on " + name(k) + "," + name(j) + "," + name(i));
      }
    }
  }

  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i].data;
    bool found = false;
    for (std::size_t j = 0; j < arrows.size() && !found; ++j) {
      const auto& b = arrows[j].data;
      if (b.source != a.target || b.target != a.source) continue;
      found = is_identity(compose(b, a)) && is_identity(compose(a, b));
    }
    if (!found) {
      r.groupoid_ok = false;
      r.without_inverse.push_back(i);
    }
  }

  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j) {
      const auto& a = arrows[i].data;
      const auto& b = arrows[j].data;
      if (a.source == b.source && a.target == b.target && same_data(a, b)) r.faithfulness_collisions.emplace_back(i, j);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Redundancy

double RedundancyReport::redundant_fraction() const {
  return entries.empty() ? 0.0 : static_cast<double>(redundant_count) / static_cast<double>(entries.size());
}

RedundancyReport redundancy_report(std::vector<Segment> segments, const DetectorConfig& config) {
  RedundancyReport report;
  report.segments = std::move(segments);
  const auto& segs = report.segments;
  const auto loose = Tolerance::infinite();

  auto run = [&](Detector d, const Segment& f, const Segment& g) -> std::optional<SegmentArrow> {
    switch (d) {
      case Detector::Translation: return detect_translation(f, g, loose);
      case Detector::Affine: return detect_affine(f, g, config.strides, loose);
      case Detector::AmpAffine: return detect_amp_affine(f, g, config.strides, loose);
    }
    return std::nullopt;
  };

  std::vector<Detector> order;
  if (config.translation) order.push_back(Detector::Translation);
  if (config.affine) order.push_back(Detector::Affine);
  if (config.amp_affine) order.push_back(Detector::AmpAffine);

  for (std::size_t t = 1; t < segs.size(); ++t) {
    RedundancyEntry entry;
    entry.segment = t;
    std::optional<Rational> overall;
    for (auto d : order) {
      std::optional<SegmentArrow> best;
      std::optional<Key> best_key;
      for (std::size_t s = 0; s < t; ++s) {
        auto cand = run(d, segs[s], segs[t]);
        if (!cand) continue;
        auto key = arrow_key(*cand);
        if (!best_key || key < *best_key) {
          cand->source = s;
          cand->target = t;
          best = std::move(cand);
          best_key = std::move(key);
        }
      }
      if (!best) continue;
      if (config.tol.accepts(best->residual_norm_squared())) {
        entry.best = std::move(best);
        entry.detector = d;
        entry.redundant = true;
        break;
      }
      if (!overall || std::get<0>(*best_key) < *overall) {
        overall = std::get<0>(*best_key);
        entry.best = std::move(best);
        entry.detector = d;
      }
    }
    if (entry.redundant) ++report.redundant_count;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

RedundancyReport redundancy_report(const Signal& signal, std::span<const std::int64_t> breakpoints,
                                   const DetectorConfig& config) {
  return redundancy_report(segment_signal(signal, breakpoints), config);
}

// ---------------------------------------------------------------------------
// Prototype

PrototypeDecomposition prototype_decomposition(const Signal& signal) {
  PrototypeDecomposition out;
  out.segments = segment_signal(signal, uniform_breakpoints(signal, 1));
  out.seed = out.segments.front()[0];
  for (const auto& s : out.segments) out.graph.add_object(s, "f|" + grid_text(s.grid()));
  for (std::size_t k = 0; k + 1 < out.segments.size(); ++k) {
    auto a = make_arrow(k, k + 1, out.segments[k].grid(), IndexMap{1, 1});
    a.residual = delta(out.segments[k + 1], transfer(a, out.segments[k]));
    out.deltas.push_back(a.residual.front());
    out.arrows.push_back(a);
  }
  for (std::size_t k = 0; k < out.arrows.size(); ++k) {
    out.graph.add_arrow(out.arrows[k], "a" + std::to_string(k + 1));
    out.graph.add_arrow(inverse_arrow(out.arrows[k]), "a" + std::to_string(k + 1) + "^-1");
  }
  for (std::size_t k = 0; k + 1 < out.arrows.size(); ++k) {
    const Segment dk(out.segments[k + 1].grid(), out.arrows[k].residual);
    const Segment dk1(out.segments[k + 2].grid(), out.arrows[k + 1].residual);
    out.second_deltas.push_back(delta(dk1, transfer(out.arrows[k + 1], dk)).front());
  }
  return out;
}

}  // namespace fsig
