#include <doctest.h>

#include "fsig/error.hpp"
#include "fsig/measure.hpp"
#include "fsig/random.hpp"
#include "oracles.hpp"

using namespace fsig;
using oracle::set;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::TooLarge;
}

}  // namespace

TEST_CASE("generated sigma algebras") {
  const auto X3 = FiniteCarrier::range(0, 3);
  CHECK(oracle::masks(generate_sigma_algebra(X3, {}).members()) == std::set<oracle::Mask>{0, 7});
  CHECK(oracle::masks(generate_sigma_algebra(X3, {set(3, {0})}).members()) ==
        std::set<oracle::Mask>{0, 1, 6, 7});
  const auto X2 = FiniteCarrier::range(0, 2);
  const auto both = generate_sigma_algebra(X2, {set(2, {0}), set(2, {1})});
  CHECK(both.members().size() == 4);
  CHECK(both == SigmaAlgebra::discrete(X2));
}

TEST_CASE("explicit families are validated") {
  const auto X = FiniteCarrier::range(0, 3);
  const auto ok = SigmaAlgebra::from_members(X, {Subset(3), set(3, {0}), set(3, {1, 2}), full_subset(3)});
  CHECK(ok.blocks().size() == 2);
  CHECK(ok.contains(set(3, {1, 2})));
  CHECK_FALSE(ok.contains(set(3, {1})));
  CHECK(code_of([&] { SigmaAlgebra::from_members(X, {Subset(3), set(3, {0}), full_subset(3)}); }) ==
        ErrorCode::NotASigmaAlgebra);
  CHECK(code_of([&] { SigmaAlgebra::from_members(X, {set(3, {0}), set(3, {1, 2})}); }) == ErrorCode::NotASigmaAlgebra);
}

TEST_CASE("null ideal") {
  const auto s = oracle::weighted({1, 0, 2});
  CHECK(oracle::masks(null_ideal(*s)) == std::set<oracle::Mask>{0, 2});
  CHECK(oracle::masks(null_ideal(*oracle::counting(0, 4))) == std::set<oracle::Mask>{0});
  CHECK(null_ideal(*oracle::weighted({0, 0, 0})).size() == 8);

  // A null set inside a coarse block: Σ = {∅, {0}, {1,2}, X}, weights (1, 0, 0).
  const auto X = FiniteCarrier::range(0, 3);
  const FiniteMeasureSpace coarse(SigmaAlgebra::from_partition(X, {set(3, {0}), set(3, {1, 2})}), oracle::ext({1, 0, 0}));
  CHECK(oracle::masks(null_ideal(coarse)) == std::set<oracle::Mask>{0, 2, 4, 6});
  CHECK(coarse.is_negligible(set(3, {1})));
}

TEST_CASE("measures and errors") {
  const auto s = oracle::weighted({1, 0, 2});
  CHECK(s->measure(set(3, {0, 2})) == ExtRational(3));
  const auto X = FiniteCarrier::range(0, 2);
  const FiniteMeasureSpace coarse(SigmaAlgebra::trivial(X), {ExtRational::infinity(), 1});
  CHECK(coarse.measure(full_subset(2)).is_infinite());
  CHECK(code_of([&] { (void)coarse.measure(set(2, {0})); }) == ErrorCode::NotMeasurable);
}

TEST_CASE("map flags") {
  const auto c3 = oracle::counting(0, 3);
  const auto id = MeasurableMap::identity(c3);
  CHECK(id.flags() == MapFlags{true, true, true});

  const auto shifted = oracle::counting(10, 3);
  const auto phi = MeasurableMap::from_labels(shifted, c3, {{10, 0}, {11, 1}, {12, 2}});
  CHECK(phi.is_imp());
  CHECK(phi.flags() == oracle::flags(phi));

  const auto c2 = oracle::counting(0, 2);
  const auto constant = MeasurableMap::from_labels(c2, c2, {{0, 0}, {1, 0}});
  CHECK(constant.is_measurable());
  CHECK_FALSE(constant.is_imp());
  CHECK(constant.flags() == oracle::flags(constant));

  CHECK(code_of([&] { MeasurableMap::from_labels(c2, c2, {{0, 0}}); }) == ErrorCode::MapNotTotal);
  CHECK(code_of([&] { MeasurableMap::from_labels(c2, c2, {{0, 0}, {1, 5}}); }) == ErrorCode::UnknownPoint);
  CHECK(code_of([&] { compose(constant, phi); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("map flags agree with enumeration on random maps") {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    SpaceShape shape;
    shape.infinite_weight = 0.1;
    const auto a = random_space(rng, shape), b = random_space(rng, shape);
    const auto phi = random_function(rng, a, b);
    REQUIRE(phi.flags() == oracle::flags(phi));
  }
}

TEST_CASE("direct sums") {
  const auto sum = direct_sum({oracle::counting(0, 2), oracle::counting(0, 1)});
  CHECK(sum.space->size() == 3);
  CHECK(sum.space->measure(full_subset(3)) == ExtRational(3));
  CHECK(sum.tags[2] == std::pair<std::size_t, Label>{1, 0});
  CHECK(sum.injections[1].is_nonsingular());
  CHECK_FALSE(sum.injections[1].is_imp());

  const auto halves = direct_sum({oracle::weighted({1, 0}), oracle::weighted({1, 0})});
  CHECK(null_ideal(*halves.space).size() == 4);

  const auto single = direct_sum({oracle::weighted({1, 0, 2})});
  CHECK(single.space->weights() == oracle::weighted({1, 0, 2})->weights());
  CHECK(single.space->sigma().blocks().size() == 3);
}

TEST_CASE("atoms") {
  CHECK(oracle::masks(atoms(*oracle::counting(0, 3))) == std::set<oracle::Mask>{1, 2, 4});
  // {0} and {0,1} are both atoms; they name the same class.
  CHECK(oracle::masks(atoms(*oracle::weighted({1, 0, 2}))) == std::set<oracle::Mask>{1, 3, 4, 6});
  const auto X = FiniteCarrier::range(0, 3);
  const FiniteMeasureSpace lump(SigmaAlgebra::trivial(X), oracle::ext({1, 1, 0}));
  CHECK(oracle::masks(atoms(lump)) == std::set<oracle::Mask>{7});
}
