#include <doctest.h>

#include <map>

#include "fsig/error.hpp"
#include "fsig/quotient.hpp"
#include "fsig/random.hpp"
#include "oracles.hpp"

using namespace fsig;
using oracle::set;

TEST_CASE("quotient of weights (1,0,2)") {
  const auto s = oracle::weighted({1, 0, 2});
  const auto q = quotient_measure_algebra(s);
  CHECK(q.algebra().atom_count() == 2);

  // Group all eight subsets by class, independently of project(): E ~ F iff μ(E△F) = 0.
  std::map<oracle::Mask, std::vector<oracle::Mask>> classes;
  for (auto e : oracle::all_masks(3)) {
    bool placed = false;
    for (auto& [rep, members] : classes)
      if (oracle::weight_sum(*s, rep ^ e).is_zero()) {
        members.push_back(e);
        placed = true;
      }
    if (!placed) classes[e] = {e};
  }
  REQUIRE(classes.size() == 4);
  std::vector<ExtRational> measures;
  for (const auto& [rep, members] : classes) {
    const auto cls = q.project(subset_from_mask(3, rep));
    for (auto m : members) CHECK(q.project(subset_from_mask(3, m)) == cls);
    measures.push_back(q.measure_algebra().mu_bar(cls));
  }
  std::sort(measures.begin(), measures.end(), [](const auto& a, const auto& b) { return a < b; });
  CHECK(measures == std::vector<ExtRational>{0, 1, 2, 3});
}

TEST_CASE("counting measure gives back the power set") {
  const auto q = quotient_measure_algebra(oracle::counting(0, 3));
  CHECK(q.algebra().atom_count() == 3);
  for (auto m : oracle::all_masks(3)) CHECK(q.representative(q.project(subset_from_mask(3, m))) == subset_from_mask(3, m));
}

TEST_CASE("degenerate spaces are rejected") {
  CHECK_THROWS_AS(quotient_measure_algebra(oracle::weighted({0, 0, 0})), Error);
  CHECK_THROWS_AS(MeasureAlgebra({ExtRational(1), ExtRational(0)}), Error);
}

TEST_CASE("projection is a sequentially order-continuous hom") {
  const auto s = oracle::weighted({1, 0, 2, 0});
  const auto q = quotient_measure_algebra(s);
  const BooleanAlgebra blocks(s->sigma().blocks().size());
  const auto pi = BooleanHom::from_function(blocks, q.algebra(), [&](const Element& a) {
    return q.project(s->sigma().union_of_blocks(a));
  });
  const auto report = check_hom_laws(pi);
  CHECK(report.is_soc());
  CHECK(report.all_passed());
  CHECK(report.surjective);
  CHECK_FALSE(report.injective);
}

TEST_CASE("constant map to 1 is not a hom") {
  const BooleanAlgebra b(2);
  const auto one = BooleanHom::from_function(b, b, [&](const Element&) { return b.unit(); });
  CHECK_FALSE(one.is_hom());
  CHECK_FALSE(check_hom_laws(one).preserves_sym_diff);
}

TEST_CASE("atom swap is an automorphism") {
  const BooleanAlgebra b(2);
  const auto swap = BooleanHom::from_atom_images(b, b, {b.atom(1), b.atom(0)});
  const auto report = check_hom_laws(swap);
  CHECK(report.is_isomorphism());
  CHECK(report.all_passed());
  CHECK(same_action(compose(swap, swap), BooleanHom::from_atom_images(b, b, {b.atom(0), b.atom(1)})));
}

TEST_CASE("induced homs") {
  const auto c3 = oracle::counting(0, 3);
  const auto id = MeasurableMap::identity(c3);
  const auto q = quotient_measure_algebra(c3);
  CHECK(same_action(induced_hom(id), BooleanHom::identity(q.measure_algebra())));

  const auto phi = MeasurableMap::from_labels(oracle::counting(10, 3), c3, {{10, 0}, {11, 1}, {12, 2}});
  const auto pi = induced_hom(phi);
  CHECK(pi.flags().is_measure_preserving == std::optional<bool>(true));
  CHECK(check_hom_laws(pi).is_isomorphism());

  // Not non-singular: a positive point is sent onto a null one.
  const auto target = oracle::weighted({0, 1});
  const auto bad = MeasurableMap::from_labels(oracle::counting(0, 2), target, {{0, 0}, {1, 1}});
  CHECK_FALSE(bad.is_nonsingular());
  CHECK_THROWS_AS(induced_hom(bad), Error);
}

TEST_CASE("induced homs compose contravariantly") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    SpaceShape shape;
    shape.nondegenerate = true;
    const auto z = random_space(rng, shape);
    const auto psi = random_map_into(rng, z, MapStrength::Nonsingular);
    const auto phi = random_map_into(rng, psi.source(), MapStrength::Imp);
    auto degenerate = [](const SpaceRef& s) {
      for (const auto& w : s->weights())
        if (!w.is_zero()) return false;
      return true;
    };
    if (degenerate(psi.source()) || degenerate(phi.source())) continue;
    const auto lhs = induced_hom(compose(psi, phi));
    const auto rhs = compose(induced_hom(phi), induced_hom(psi));
    REQUIRE(same_action(lhs, rhs));
  }
}
