#include <doctest.h>

#include "fsig/error.hpp"
#include "fsig/random.hpp"
#include "fsig/signal.hpp"

using namespace fsig;

namespace {

std::vector<Rational> q(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

Signal ints(std::int64_t origin, std::initializer_list<std::int64_t> v) { return {origin, q(v)}; }

}  // namespace

TEST_CASE("segmentation") {
  const auto f = ints(1, {1, 2, 3, 4, 5});
  const std::vector<std::int64_t> cuts{2, 3, 4, 5};
  const auto pieces = segment_signal(f, cuts);
  REQUIRE(pieces.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(pieces[k].start() == static_cast<std::int64_t>(k + 1));
    CHECK(pieces[k].samples() == q({static_cast<std::int64_t>(k + 1)}));
  }
  CHECK(segment_signal(f, {}).size() == 1);
  CHECK(rejoin(pieces) == f);
  CHECK(uniform_breakpoints(f, 2) == std::vector<std::int64_t>{3, 5});

  const std::vector<std::int64_t> outside{1}, unordered{4, 3};
  CHECK_THROWS_AS(segment_signal(f, outside), Error);
  CHECK_THROWS_AS(segment_signal(f, unordered), Error);
  CHECK_THROWS_AS(segment_signal(Signal{0, {}}, {}), Error);
}

TEST_CASE("transfer") {
  const Segment f(0, q({5, 7, 5}));
  const auto shift = transfer(make_arrow(0, 1, f.grid(), IndexMap{1, 10}), f);
  CHECK(shift.start() == 10);
  CHECK(shift.samples() == q({5, 7, 5}));
  CHECK(transfer(make_arrow(0, 1, f.grid(), IndexMap{1, 10}, Rational(2)), f).samples() == q({10, 14, 10}));

  const Segment g(0, q({1, 2, 3}));
  const auto rev = transfer(make_arrow(0, 1, g.grid(), IndexMap{-1, 0}), g);
  CHECK(rev.start() == -2);
  CHECK(rev.end() == 1);
  CHECK(rev.samples() == q({3, 2, 1}));

  const auto spread = make_arrow(0, 1, g.grid(), IndexMap{2, 1});
  CHECK(spread.target_grid() == Grid{1, 2, 3});
  CHECK(spread.target_weight == Rational(1, 2));
  CHECK(spread.point_map().is_imp());
  CHECK(transfer(spread, g).at(5) == 3);
  CHECK_THROWS_AS(inverse_arrow(spread), Error);
  CHECK_THROWS_AS(transfer(spread, Segment(5, q({1, 2, 3}))), Error);
}

TEST_CASE("deltas") {
  const Segment one(1, q({1})), two(2, q({2}));
  const auto a = make_arrow(0, 1, one.grid(), IndexMap{1, 1});
  CHECK(delta(two, transfer(a, one)) == q({1}));
  CHECK(delta(two, two) == q({0}));
  const Segment x(0, q({4, -1})), y(0, q({2, 6}));
  auto back = delta(y, x);
  for (auto& v : back) v = -v;
  CHECK(delta(x, y) == back);
  CHECK_THROWS_AS(delta(one, two), Error);
}

TEST_CASE("composition carries residuals") {
  const Segment f(0, q({1, 2, 3}));
  auto a = make_arrow(0, 1, f.grid(), IndexMap{-1, 10}, Rational(2));
  const Segment g(a.target_grid(), q({7, 4, 1}));
  a.residual = delta(g, transfer(a, f));
  auto b = make_arrow(1, 2, g.grid(), IndexMap{2, -3}, Rational(-1, 3));
  const Segment h(b.target_grid(), q({0, 5, -2}));
  b.residual = delta(h, transfer(b, g));
  const auto ba = compose(b, a);
  CHECK(ba.phi == IndexMap{-2, 17});
  CHECK(ba.scale == Rational(-2, 3));
  CHECK(reconstruct(transfer(ba, f), ba.residual) == h);
  CHECK(is_identity(compose(inverse_arrow(a), a)));
}

TEST_CASE("translation detector") {
  const Segment f(0, q({5, 7, 5}));
  const auto exact = detect_translation(f, Segment(10, q({5, 7, 5})), Tolerance{0});
  REQUIRE(exact);
  CHECK(exact->phi == IndexMap{1, 10});
  CHECK(exact->is_exact());

  const Segment g(10, q({5, 8, 5}));
  CHECK_FALSE(detect_translation(f, g, Tolerance{0}));
  const auto near = detect_translation(f, g, Tolerance{1});
  REQUIRE(near);
  CHECK(near->residual == q({0, 1, 0}));
  CHECK_FALSE(detect_translation(f, Segment(10, q({5, 7})), Tolerance::infinite()));
}

TEST_CASE("affine detector") {
  const Segment f(0, q({1, 2, 3}));
  const std::int64_t strides[] = {1, -1};
  const auto rev = detect_affine(f, Segment(4, q({3, 2, 1})), strides, Tolerance{0});
  REQUIRE(rev);
  CHECK(rev->phi == IndexMap{-1, 6});
  CHECK(rev->is_exact());

  const Segment copy(4, q({1, 2, 3}));
  const auto plain = detect_affine(f, copy, strides, Tolerance{0});
  REQUIRE(plain);
  CHECK(same_data(*plain, *detect_translation(f, copy, Tolerance{0})));
  CHECK_FALSE(detect_affine(f, Segment(4, q({9, -9, 40})), strides, Tolerance{1}));
}

TEST_CASE("amplitude detector") {
  const Segment f(0, q({1, 2, 3}));
  const std::int64_t strides[] = {1, -1};
  const auto tripled = detect_amp_affine(f, Segment(5, q({3, 6, 9})), strides, Tolerance{0});
  REQUIRE(tripled);
  CHECK(tripled->scale == 3);
  CHECK(tripled->kind == ArrowKind::AmpAffine);
  CHECK(tripled->is_exact());

  CHECK_FALSE(detect_amp_affine(Segment(0, q({0, 0, 0})), Segment(5, q({1, 0, 0})), strides, Tolerance::infinite()));

  // Least squares by hand: c = <p,g>/<p,p> = 31/14 for p = (1,2,3), g = (2,4,7).
  const Segment noisy(5, q({2, 4, 7}));
  const auto fit = detect_amp_affine(f, noisy, strides, Tolerance{1});
  REQUIRE(fit);
  CHECK(fit->phi == IndexMap{1, 5});
  CHECK(fit->scale == Rational(31, 14));
  CHECK(fit->residual == std::vector<Rational>{Rational(-3, 14), make_rational(-3, 7), Rational(5, 14)});
  CHECK(fit->residual_norm_squared() == Rational(5, 14));
}

TEST_CASE("functor graph laws") {
  const auto proto = prototype_decomposition(ints(1, {1, 2, 3, 4, 5}));
  CHECK(proto.seed == 1);
  CHECK(proto.deltas == q({1, 1, 1, 1}));
  CHECK(proto.second_deltas == q({0, 0, 0}));
  const auto report = verify_functor_laws(proto.graph);
  CHECK(report.is_groupoid());
  CHECK(report.faithfulness_collisions.empty());

  FunctorGraph oneway;
  const Segment f(0, q({1, 2})), g(2, q({1, 2}));
  oneway.add_object(f);
  oneway.add_object(g);
  oneway.add_arrow(make_arrow(0, 1, f.grid(), IndexMap{1, 2}));
  const auto ow = verify_functor_laws(oneway);
  CHECK(ow.category_ok());
  CHECK_FALSE(ow.is_groupoid());
  CHECK(ow.without_inverse == std::vector<std::size_t>{0});

  oneway.add_arrow(make_arrow(0, 1, f.grid(), IndexMap{1, 2}));
  CHECK(verify_functor_laws(oneway).faithfulness_collisions.size() == 1);
}

TEST_CASE("redundancy reports") {
  const auto f = ints(1, {1, 2, 3, 4, 5});
  const auto report = redundancy_report(f, uniform_breakpoints(f, 1), DetectorConfig{});
  REQUIRE(report.entries.size() == 4);
  for (const auto& e : report.entries) {
    REQUIRE(e.best);
    CHECK(e.best->residual == q({1}));
    CHECK(e.best->source + 1 == e.segment);
  }

  const auto flat = ints(0, {4, 4, 4, 4, 4, 4});
  const auto fr = redundancy_report(flat, uniform_breakpoints(flat, 2), DetectorConfig{});
  for (const auto& e : fr.entries) CHECK(e.best->is_exact());
  CHECK(fr.redundant_count == 2);

  Rng rng(4);
  Signal noise{0, {}};
  for (int k = 0; k < 64; ++k) noise.samples.push_back(uniform_int(rng, -1000000, 1000000));
  DetectorConfig strict;
  strict.affine = strict.amp_affine = true;
  strict.tol = Tolerance{0};
  const auto nr = redundancy_report(noise, uniform_breakpoints(noise, 4), strict);
  CHECK(nr.redundant_count == 0);
  CHECK(nr.redundant_fraction() == 0.0);
}

TEST_CASE("grid spaces and point maps") {
  const Grid g{3, 2, 4};
  const auto s = grid_space(g);
  CHECK(s->size() == 4);
  CHECK(s->weight(0) == ExtRational(2));
  CHECK(g.index_of(7) == std::optional<std::size_t>(2));
  CHECK_FALSE(g.index_of(8));
  CHECK(image(IndexMap{-2, 0}, g) == Grid{-18, 4, 4});
}
