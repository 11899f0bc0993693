#include <doctest.h>

#include "fsig/error.hpp"
#include "fsig/function_space.hpp"
#include "fsig/random.hpp"
#include "oracles.hpp"

using namespace fsig;

namespace {

std::vector<Rational> q(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("canonical classes") {
  CHECK(FnClass::canonical(oracle::weighted({1, 0, 2}), q({5, 9, 7})).values() == q({5, 0, 7}));
  CHECK(FnClass::canonical(oracle::counting(0, 3), q({5, 9, 7})).values() == q({5, 9, 7}));
  const auto c = oracle::counting(0, 3);
  CHECK(FnClass::canonical(c, q({0, 0, 0})) == FnClass::zero(c));

  const auto X = FiniteCarrier::range(0, 2);
  const auto lump = share(FiniteMeasureSpace(SigmaAlgebra::trivial(X), oracle::ext({1, 1})));
  CHECK_THROWS_AS(FnClass::canonical(lump, q({1, 2})), Error);
  const auto inf = share(FiniteMeasureSpace::point_supported(X, {ExtRational::infinity(), 1}));
  CHECK_THROWS_AS(FnClass::canonical(inf, q({1, 2}), SpaceTag::L2), Error);
  CHECK(FnClass::canonical(inf, q({0, 2}), SpaceTag::L2).tag() == SpaceTag::L2);
}

TEST_CASE("pullback along a translation") {
  const auto J = oracle::counting(0, 3);
  const auto I = oracle::counting(10, 3);
  const auto phi = MeasurableMap::from_labels(I, J, {{10, 0}, {11, 1}, {12, 2}});
  const auto g = FnClass::canonical(J, q({3, 4, 0}), SpaceTag::L2);
  const auto tg = pullback(phi, g);
  CHECK(tg.values() == q({3, 4, 0}));
  CHECK(norm2_squared(tg) == ExtRational(25));
  CHECK(norm2(g) == doctest::Approx(5.0));
  CHECK(pullback(MeasurableMap::identity(J), g) == g);

  const auto v = FnClass::canonical(J, q({1, 2, 0})), w = FnClass::canonical(J, q({2, 2, 2}));
  CHECK(pullback(phi, mul(v, w)) == mul(pullback(phi, v), pullback(phi, w)));
}

TEST_CASE("pullback preconditions") {
  const auto c2 = oracle::counting(0, 2);
  const auto squash = MeasurableMap::from_labels(c2, c2, {{0, 0}, {1, 0}});
  const auto g = FnClass::canonical(c2, q({1, 1}), SpaceTag::L2);
  CHECK_THROWS_AS(pullback(squash, g), Error);
  CHECK(pullback(squash, g.with_tag(SpaceTag::L0)).values() == q({1, 1}));
  const auto bad = MeasurableMap::from_labels(c2, oracle::weighted({0, 1}), {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(pullback(bad, FnClass::one(bad.target())), Error);
}

TEST_CASE("amplitude operator") {
  const auto c = oracle::counting(0, 2);
  const auto f = FnClass::canonical(c, q({1, -2}));
  CHECK(amplitude_op(2, f).values() == q({2, -4}));
  CHECK(amplitude_op(0, f) == FnClass::zero(c));
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto s = random_space(rng);
    const auto a = random_class(rng, s), b = random_class(rng, s);
    const auto h = random_rational(rng);
    CHECK(amplitude_op(h, add(a, b)) == add(amplitude_op(h, a), amplitude_op(h, b)));
  }
}

TEST_CASE("covariant operator") {
  const MeasureAlgebra ab({ExtRational(1), ExtRational(1)});
  const DualElement u(ab, q({1, 3}));
  const auto swap = BooleanHom::from_atom_images(ab, ab, {ab.algebra().atom(1), ab.algebra().atom(0)});
  const auto tu = covariant_op(swap, u);
  CHECK(tu.atom_values() == q({3, 1}));
  for (const Rational t : {Rational(1, 2), Rational(2), Rational(4)}) CHECK(tu.threshold(t) == swap(u.threshold(t)));
  CHECK(covariant_op(BooleanHom::identity(ab), u) == u);

  const BooleanAlgebra b(2);
  const auto not_hom = BooleanHom::from_function(ab, ab, [&](const Element&) { return b.unit(); });
  CHECK_THROWS_AS(covariant_op(not_hom, u), Error);
}

TEST_CASE("duality bridge") {
  const auto c = oracle::counting(0, 2);
  CHECK(duality_bridge(FnClass::canonical(c, q({2, 5}))).atom_values() == q({2, 5}));
  const auto half = oracle::weighted({1, 0});
  const auto u = duality_bridge(FnClass::canonical(half, q({4, 0})));
  CHECK(u.atom_values() == q({4}));
  CHECK(u.algebra().atom_count() == 1);

  const auto J = oracle::counting(0, 3);
  const auto phi = MeasurableMap::from_labels(oracle::counting(10, 3), J, {{10, 2}, {11, 0}, {12, 1}});
  const auto g = FnClass::canonical(J, q({7, -1, 3}));
  CHECK(duality_bridge(pullback(phi, g)) == covariant_op(induced_hom(phi), duality_bridge(g)));
  CHECK(duality_bridge_inverse(J, duality_bridge(g)) == g);
}

TEST_CASE("norms and lattice identities") {
  const auto c = oracle::counting(0, 2);
  CHECK(norm2_squared(FnClass::canonical(c, q({3, 4}))) == ExtRational(25));
  const auto f = FnClass::canonical(c, q({1, -2}));
  CHECK(sup(f, neg(f)).values() == q({1, 2}));
  CHECK(abs(f) == sup(f, neg(f)));
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto s = random_space(rng);
    const auto x = random_class(rng, s), y = random_class(rng, s);
    CHECK(abs(mul(x, y)) == mul(abs(x), abs(y)));
  }
  const auto inf = share(FiniteMeasureSpace::point_supported(FiniteCarrier::range(0, 2), {ExtRational::infinity(), 1}));
  CHECK(norm2_squared(FnClass::canonical(inf, q({1, 0}))).is_infinite());
}

TEST_CASE("direct sum split and join") {
  const auto sum = direct_sum({oracle::counting(0, 2), oracle::counting(0, 2)});
  const auto f = FnClass::canonical(sum.space, q({3, 4, 0, 5}), SpaceTag::L2);
  const auto parts = split_direct_sum(sum, f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].values() == q({3, 4}));
  CHECK(parts[1].values() == q({0, 5}));
  CHECK(norm2_squared(f) == ExtRational(50));
  CHECK(norm2_squared(f) == norm2_squared(parts[0]) + norm2_squared(parts[1]));
  CHECK(join_direct_sum(sum, parts) == f);

  const auto single = direct_sum({oracle::counting(0, 3)});
  const auto g = FnClass::canonical(single.space, q({1, 2, 3}));
  CHECK(split_direct_sum(single, g).size() == 1);
  CHECK(split_direct_sum(single, g)[0].values() == q({1, 2, 3}));
  CHECK_THROWS_AS(split_direct_sum(sum, g), Error);
}
