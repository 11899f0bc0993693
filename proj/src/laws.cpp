#include "fsig/laws.hpp"

#include <algorithm>
#include <set>

#include "fsig/error.hpp"
#include "fsig/signal.hpp"

namespace fsig {

// ---------------------------------------------------------------------------
// LawSuite

void LawSuite::check(const std::string& law, bool ok) {
  auto [it, inserted] = laws_.try_emplace(law);
  if (inserted) {
    it->second.name = law;
    order_.push_back(law);
  }
  ++it->second.checked;
  if (!ok && it->second.failed++ == 0) it->second.first_failure = context_.empty() ? "failed" : context_;
}

void LawSuite::error(const std::string& law, const std::string& what) {
  check(law, false);
  auto& r = laws_[law];
  if (r.failed == 1) r.first_failure += ": " + what;
}

std::vector<LawResult> LawSuite::laws() const {
  std::vector<LawResult> out;
  for (const auto& name : order_) out.push_back(laws_.at(name));
  return out;
}

std::size_t LawSuite::checked() const {
  std::size_t n = 0;
  for (const auto& [k, r] : laws_) n += r.checked;
  return n;
}

std::size_t LawSuite::failures() const {
  std::size_t n = 0;
  for (const auto& [k, r] : laws_) n += r.failed;
  return n;
}

namespace {

using Mask = std::uint64_t;

template <typename Body>
void each_instance(LawSuite& suite, std::size_t count, Body body) {
  for (std::size_t k = 0; k < count; ++k) {
    suite.at("instance " + std::to_string(k));
    try {
      body(k);
    } catch (const std::exception& e) {
      suite.error("no-unexpected-error", e.what());
    }
  }
}

std::set<Mask> masks_of(const std::vector<Subset>& family) {
  std::set<Mask> out;
  for (const auto& s : family) out.insert(subset_to_mask(s));
  return out;
}

// Sum of point weights, without consulting Σ.
ExtRational weight_sum(const FiniteMeasureSpace& space, Mask m) {
  ExtRational total;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (m >> i & 1U) total += space.weight(i);
  return total;
}

std::set<Mask> closure_oracle(std::size_t n, const std::vector<Subset>& generators) {
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::set<Mask> fam{0, full};
  for (const auto& g : generators) fam.insert(subset_to_mask(g));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> cur(fam.begin(), fam.end());
    for (auto a : cur) {
      grew |= fam.insert(full & ~a).second;
      for (auto b : cur) grew |= fam.insert(a | b).second;
    }
  }
  return fam;
}

std::set<Mask> null_ideal_oracle(const FiniteMeasureSpace& space, const std::set<Mask>& members) {
  std::set<Mask> out;
  const Mask total = Mask{1} << space.size();
  for (auto e : members) {
    if (!weight_sum(space, e).is_zero()) continue;
    for (Mask n = 0; n < total; ++n)
      if ((n & ~e) == 0) out.insert(n);
  }
  return out;
}

std::set<Mask> atoms_oracle(const FiniteMeasureSpace& space, const std::set<Mask>& members,
                            const std::set<Mask>& negligible) {
  std::set<Mask> out;
  for (auto a : members) {
    if (weight_sum(space, a).is_zero()) continue;
    bool atom = true;
    for (auto e : members)
      if ((e & ~a) == 0 && !negligible.contains(e) && !negligible.contains(a & ~e)) atom = false;
    if (atom) out.insert(a);
  }
  return out;
}

SpaceRef nondegenerate_space(Rng& rng, double infinite = 0.05) {
  SpaceShape shape;
  shape.nondegenerate = true;
  shape.infinite_weight = infinite;
  return random_space(rng, shape);
}

bool degenerate(const SpaceRef& s) {
  for (std::size_t b = 0; b < s->sigma().blocks().size(); ++b)
    if (!s->is_null_block(b)) return false;
  return true;
}

// Map into `target` whose source space is not entirely negligible.
MeasurableMap nondegenerate_map_into(Rng& rng, const SpaceRef& target, MapStrength strength) {
  for (;;) {
    auto m = random_map_into(rng, target, strength);
    if (!degenerate(m.source())) return m;
  }
}

MapStrength random_strength(Rng& rng) { return coin(rng) ? MapStrength::Imp : MapStrength::Nonsingular; }

}  // namespace

// ---------------------------------------------------------------------------
// measure-core

LawSuite measure_laws(Rng& rng, std::size_t instances) {
  LawSuite suite("measure");
  each_instance(suite, instances, [&](std::size_t) {
    SpaceShape shape;
    shape.infinite_weight = 0.05;
    const auto space = random_space(rng, shape);
    const std::size_t n = space->size();
    const Mask full = (Mask{1} << n) - 1;

    std::vector<Subset> gens;
    const auto gen_count = uniform_int(rng, 0, 3);
    for (std::int64_t g = 0; g < gen_count; ++g) gens.push_back(subset_from_mask(n, static_cast<Mask>(uniform_int(rng, 0, static_cast<std::int64_t>(full)))));
    const auto generated = generate_sigma_algebra(space->carrier(), gens);
    const auto gen_members = masks_of(generated.members());
    suite.check("sigma-generation-minimal", gen_members == closure_oracle(n, gens));
    bool closed = gen_members.contains(0) && gen_members.contains(full);
    for (auto a : gen_members) {
      closed = closed && gen_members.contains(full & ~a);
      for (auto b : gen_members) closed = closed && gen_members.contains(a | b);
    }
    suite.check("sigma-closure", closed);
    suite.check("sigma-generation-idempotent", generate_sigma_algebra(space->carrier(), generated.members()) == generated);

    const auto members = masks_of(space->sigma().members());
    const auto negligible = masks_of(null_ideal(*space));
    suite.check("null-ideal", negligible == null_ideal_oracle(*space, members));
    bool ideal = negligible.contains(0);
    for (auto a : negligible) {
      for (Mask b = 0; b <= full; ++b)
        if ((b & ~a) == 0) ideal = ideal && negligible.contains(b);
      for (auto b : negligible) ideal = ideal && negligible.contains(a | b);
    }
    suite.check("null-ideal-clauses", ideal);
    suite.check("atoms", masks_of(atoms(*space)) == atoms_oracle(*space, members, negligible));

    bool additive = true;
    for (auto a : members)
      for (auto b : members)
        if ((a & b) == 0)
          additive = additive && space->measure(subset_from_mask(n, a | b)) ==
                                     space->measure(subset_from_mask(n, a)) + space->measure(subset_from_mask(n, b));
    suite.check("measure-additivity", additive);

    // Flags of an arbitrary function against a direct evaluation over Σ_target.
    const auto target = random_space(rng, shape);
    const auto phi = random_function(rng, space, target);
    bool meas = true, ns = true, imp = true;
    for (const auto& f : target->sigma().members()) {
      const Mask pre = subset_to_mask(phi.preimage(f));
      if (!members.contains(pre)) {
        meas = false;
        continue;
      }
      const auto mu = weight_sum(*space, pre);
      const auto nu = weight_sum(*target, subset_to_mask(f));
      if (nu.is_zero() && !mu.is_zero()) ns = false;
      if (!(mu == nu)) imp = false;
    }
    ns = ns && meas;
    imp = imp && ns;
    suite.check("map-flags", phi.flags() == MapFlags{meas, ns, imp});
    for (auto strength : {MapStrength::Measurable, MapStrength::Nonsingular, MapStrength::Imp}) {
      const auto m = random_map_into(rng, target, strength);
      const auto& fl = m.flags();
      suite.check("map-flag-implications", (!fl.imp || fl.nonsingular) && (!fl.nonsingular || fl.measurable));
      const bool expected = strength == MapStrength::Measurable ? fl.measurable
                            : strength == MapStrength::Nonsingular ? fl.nonsingular
                                                                   : fl.imp;
      suite.check("map-generator-strength", expected);
    }

    // Direct sums on at most 8 points in total.
    std::vector<SpaceRef> parts;
    std::size_t total = 0;
    const auto count = uniform_int(rng, 1, 3);
    for (std::int64_t k = 0; k < count; ++k) {
      SpaceShape small;
      small.max_points = std::min<std::size_t>(3, 8 - total);
      if (small.max_points == 0) break;
      parts.push_back(random_space(rng, small));
      total += parts.back()->size();
    }
    const auto sum = direct_sum(parts);
    std::vector<Rational> f(sum.space->size());
    for (auto& v : f) v = uniform_int(rng, 0, 1);
    bool all_parts = true;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      std::vector<Rational> fc(f.begin() + static_cast<std::ptrdiff_t>(sum.offsets[c]),
                               f.begin() + static_cast<std::ptrdiff_t>(sum.offsets[c] + parts[c]->size()));
      all_parts = all_parts && parts[c]->is_measurable_function(fc);
    }
    suite.check("direct-sum-measurable-functions", sum.space->is_measurable_function(f) == all_parts);
    bool sum_measure = true;
    for (const auto& e : sum.space->sigma().members()) {
      ExtRational expected;
      for (std::size_t c = 0; c < parts.size(); ++c) expected += parts[c]->measure(sum.slice(e, c));
      sum_measure = sum_measure && sum.space->measure(e) == expected;
    }
    suite.check("direct-sum-measure", sum_measure);
    bool slices_measurable = true;
    for (Mask m = 0; m < (Mask{1} << sum.space->size()); ++m) {
      const auto e = subset_from_mask(sum.space->size(), m);
      bool each = true;
      for (std::size_t c = 0; c < parts.size(); ++c) each = each && parts[c]->sigma().contains(sum.slice(e, c));
      slices_measurable = slices_measurable && sum.space->sigma().contains(e) == each;
    }
    suite.check("direct-sum-sigma", slices_measurable);
  });
  return suite;
}

// ---------------------------------------------------------------------------
// quotient-algebra

LawSuite quotient_laws(Rng& rng, std::size_t instances) {
  LawSuite suite("quotient");
  each_instance(suite, instances, [&](std::size_t) {
    const auto space = nondegenerate_space(rng);
    const std::size_t n = space->size();
    const auto q = quotient_measure_algebra(space);
    const auto& alg = q.algebra();
    const auto& ma = q.measure_algebra();
    const auto members = space->sigma().members();

    bool classes = true, well_defined = true, order = true;
    bool hom_sym = true, hom_meet = true;
    for (const auto& e : members) {
      const auto pe = q.project(e);
      well_defined = well_defined && ma.mu_bar(pe) == weight_sum(*space, subset_to_mask(e));
      for (const auto& f : members) {
        const auto pf = q.project(f);
        classes = classes && ((pe == pf) == weight_sum(*space, subset_to_mask(e ^ f)).is_zero());
        order = order && (BooleanAlgebra::leq(pe, pf) == weight_sum(*space, subset_to_mask(e - f)).is_zero());
        hom_sym = hom_sym && q.project(e ^ f) == (pe ^ pf);
        hom_meet = hom_meet && q.project(e & f) == (pe & pf);
      }
    }
    suite.check("class-equivalence", classes);
    suite.check("mu-bar-well-defined", well_defined);
    suite.check("class-order", order);
    suite.check("projection-sym-diff", hom_sym);
    suite.check("projection-meet", hom_meet);
    suite.check("projection-unit", q.project(full_subset(n)) == alg.unit() && q.project(Subset(n)).none());

    const auto elements = alg.elements();
    suite.check("meas-alg-zero", ma.mu_bar(alg.zero()).is_zero());
    bool additive = true, positive = true;
    for (const auto& a : elements) {
      positive = positive && (a.none() || ExtRational() < ma.mu_bar(a));
      for (const auto& b : elements)
        if ((a & b).none()) additive = additive && ma.mu_bar(a | b) == ma.mu_bar(a) + ma.mu_bar(b);
    }
    suite.check("meas-alg-additive", additive);
    suite.check("meas-alg-positive", positive);

    auto pick = [&] { return elements[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(elements.size()) - 1))]; };
    for (int t = 0; t < 16; ++t) {
      const auto a = pick(), b = pick(), c = pick();
      const bool ring = ((a ^ b) ^ c) == (a ^ (b ^ c)) && (a ^ alg.zero()) == a && (a ^ a).none() &&
                        (a ^ b) == (b ^ a) && (a & b) == (b & a) && ((a & b) & c) == (a & (b & c)) &&
                        (a & (b ^ c)) == ((a & b) ^ (a & c)) && (a & a) == a && (a & alg.unit()) == a;
      suite.check("boolean-axioms", ring);
    }

    for (int t = 0; t < 4; ++t) {
      std::vector<Element> family;
      const auto size = uniform_int(rng, 0, 4);
      for (std::int64_t k = 0; k < size; ++k) family.push_back(pick());
      const auto s = alg.sup(family);
      const auto i = alg.inf(family);
      bool complete = true;
      for (const auto& u : elements) {
        bool upper = true, lower = true;
        for (const auto& f : family) {
          upper = upper && f.is_subset_of(u);
          lower = lower && u.is_subset_of(f);
        }
        if (upper) complete = complete && s.is_subset_of(u);
        if (lower) complete = complete && u.is_subset_of(i);
      }
      for (const auto& f : family) complete = complete && f.is_subset_of(s) && i.is_subset_of(f);
      suite.check("dedekind-complete", complete);
    }

    // Increasing chains in Σ: the projection of the union is the supremum of the projections.
    for (int t = 0; t < 4; ++t) {
      std::vector<Subset> chain{Subset(n)};
      for (auto b : space->sigma().blocks())
        if (coin(rng)) chain.push_back(chain.back() | b);
      std::vector<Element> projected;
      for (const auto& e : chain) projected.push_back(q.project(e));
      suite.check("projection-chain-sup", q.project(chain.back()) == alg.sup(projected));
    }

    // The projection as a hom from the block algebra of Σ.
    const BooleanAlgebra sigma_alg(space->sigma().blocks().size());
    std::vector<Element> images(sigma_alg.atom_count(), alg.zero());
    for (std::size_t k = 0; k < q.atom_blocks().size(); ++k) images[q.atom_blocks()[k]].set(k);
    const auto proj = BooleanHom::from_atom_images(sigma_alg, alg, images);
    const auto report = check_hom_laws(proj);
    suite.check("projection-soc-hom", report.is_soc() && report.kernel_is_ideal && proj.is_soc() && report.surjective);
  });
  return suite;
}

// ---------------------------------------------------------------------------
// induced homs

LawSuite induced_hom_laws(Rng& rng, std::size_t pairs) {
  LawSuite suite("induced-hom");
  each_instance(suite, pairs, [&](std::size_t) {
    const auto z = nondegenerate_space(rng);
    const auto psi = nondegenerate_map_into(rng, z, random_strength(rng));
    const auto phi = nondegenerate_map_into(rng, psi.source(), random_strength(rng));
    const auto psiphi = compose(psi, phi);
    const auto pi_phi = induced_hom(phi);
    const auto pi_psi = induced_hom(psi);
    const auto pi_psiphi = induced_hom(psiphi);

    suite.check("functoriality", same_action(pi_psiphi, compose(pi_phi, pi_psi)));
    const auto qx = quotient_measure_algebra(phi.source());
    suite.check("identity", same_action(induced_hom(MeasurableMap::identity(phi.source())),
                                        BooleanHom::identity(qx.measure_algebra())));
    suite.check("soc", pi_phi.is_soc() && pi_psi.is_soc() && pi_psiphi.is_soc());
    suite.check("hom-report", check_hom_laws(pi_psiphi).is_soc());
    auto mp = [](const BooleanHom& h) { return h.flags().is_measure_preserving.value_or(false); };
    suite.check("measure-preserving-iff-imp",
                mp(pi_phi) == phi.is_imp() && mp(pi_psi) == psi.is_imp() && mp(pi_psiphi) == psiphi.is_imp());
    suite.check("imp-composition", !(phi.is_imp() && psi.is_imp()) || (mp(pi_psiphi) && psiphi.is_imp()));
    suite.check("measure-preserving-report",
                check_hom_laws(pi_psiphi).measure_preserving.value_or(false) == mp(pi_psiphi));
  });
  return suite;
}

// ---------------------------------------------------------------------------
// pullbacks

LawSuite pullback_laws(Rng& rng, std::size_t triples, std::size_t imp_maps) {
  LawSuite suite("pullback");
  each_instance(suite, triples, [&](std::size_t) {
    SpaceShape shape;
    shape.infinite_weight = 0.05;
    const auto z = random_space(rng, shape);
    const auto psi = random_map_into(rng, z, MapStrength::Nonsingular);
    const auto phi = random_map_into(rng, psi.source(), MapStrength::Nonsingular);
    const auto f = random_class(rng, z), g = random_class(rng, z), h = random_class(rng, z);
    const auto a = random_rational(rng), b = random_rational(rng);
    auto T = [&](const FnClass& x) { return pullback(psi, x); };

    suite.check("linearity", T(add(scale(a, f), scale(b, g))) == add(scale(a, T(f)), scale(b, T(g))));
    suite.check("multiplicativity", T(mul(f, g)) == mul(T(f), T(g)));
    suite.check("lattice-sup", T(sup(f, g)) == sup(T(f), T(g)));
    suite.check("lattice-inf", T(inf(f, h)) == inf(T(f), T(h)));
    suite.check("absolute-value", T(abs(f)) == abs(T(f)));
    suite.check("order", !leq(f, g) || leq(T(f), T(g)));
    suite.check("unit", T(FnClass::one(z)) == FnClass::one(psi.source()));
    suite.check("amplitude-commutes", amplitude_op(a, T(f)) == T(amplitude_op(a, f)) &&
                                          amplitude_op(a, add(f, g)) == add(amplitude_op(a, f), amplitude_op(a, g)));
    suite.check("functor-identity", pullback(MeasurableMap::identity(z), f) == f);
    suite.check("functor-composition", pullback(compose(psi, phi), f) == pullback(phi, pullback(psi, f)));
  });
  each_instance(suite, imp_maps, [&](std::size_t) {
    SpaceShape shape;
    shape.infinite_weight = 0.1;
    const auto y = random_space(rng, shape);
    const auto phi = random_map_into(rng, y, MapStrength::Imp);
    const auto g = random_class(rng, y, SpaceTag::L2);
    const auto h = random_class(rng, y, SpaceTag::L2);
    const auto tg = pullback(phi, g);
    suite.check("norm-preservation", norm2_squared(tg) == norm2_squared(g));
    suite.check("l2-tag", tg.tag() == SpaceTag::L2);
    suite.check("inner-product", inner(tg, pullback(phi, h)) == inner(g, h));
    // Simple function Σ b_i χF_i over random measurable F_i.
    FnClass simple = FnClass::zero(y);
    for (int k = 0; k < 3; ++k) {
      Subset mask(y->sigma().blocks().size());
      for (std::size_t blk = 0; blk < mask.size(); ++blk)
        if (coin(rng)) mask.set(blk);
      simple = add(simple, scale(random_rational(rng), FnClass::indicator(y, y->sigma().union_of_blocks(mask))));
    }
    suite.check("simple-integral", norm2_squared(pullback(phi, simple)) == norm2_squared(simple));
  });
  return suite;
}

// ---------------------------------------------------------------------------
// duality

LawSuite duality_laws(Rng& rng, std::size_t instances, std::size_t hom_pairs) {
  LawSuite suite("duality");
  each_instance(suite, instances, [&](std::size_t) {
    const auto y = nondegenerate_space(rng);
    const auto phi = nondegenerate_map_into(rng, y, MapStrength::Nonsingular);
    const auto g = random_class(rng, y);
    const auto u = duality_bridge(g);
    suite.check("naturality", duality_bridge(pullback(phi, g)) == covariant_op(induced_hom(phi), u));
    suite.check("bridge-round-trip", duality_bridge_inverse(y, u) == g);
    const auto levels = u.breakpoints();
    bool thresholds = u.threshold(levels.back()).none() && u.threshold(levels.front() - 1) == u.algebra().algebra().unit();
    for (std::size_t k = 0; k + 1 < levels.size(); ++k)
      thresholds = thresholds && u.threshold(levels[k + 1]).is_subset_of(u.threshold(levels[k]));
    suite.check("threshold-family", thresholds);
  });
  each_instance(suite, hom_pairs, [&](std::size_t) {
    const auto a = random_measure_algebra(rng), b = random_measure_algebra(rng), c = random_measure_algebra(rng);
    const auto pi = random_hom(rng, a, b);
    const auto theta = random_hom(rng, b, c);
    const auto u = random_dual(rng, a);
    const auto tpu = covariant_op(pi, u);
    suite.check("covariant-composition", covariant_op(compose(theta, pi), u) == covariant_op(theta, tpu));
    suite.check("covariant-identity", covariant_op(BooleanHom::identity(a), u) == u);
    // ⟦T_π u > t⟧ = π⟦u > t⟧ at, between, below and above the values of u.
    std::vector<Rational> probes;
    const auto levels = u.breakpoints();
    probes.push_back(levels.front() - 1);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      probes.push_back(levels[k]);
      probes.push_back(k + 1 < levels.size() ? Rational((levels[k] + levels[k + 1]) / 2) : Rational(levels[k] + 1));
    }
    bool defining = true;
    for (const auto& t : probes) defining = defining && tpu.threshold(t) == pi(u.threshold(t));
    suite.check("covariant-threshold", defining);
  });
  return suite;
}

// ---------------------------------------------------------------------------
// Riesz space

LawSuite riesz_laws(Rng& rng, std::size_t triples) {
  LawSuite suite("riesz");
  each_instance(suite, triples, [&](std::size_t) {
    SpaceShape shape;
    shape.infinite_weight = 0.05;
    const auto s = random_space(rng, shape);
    const auto x = random_class(rng, s, SpaceTag::L0, 3, 2);
    const auto y = random_class(rng, s, SpaceTag::L0, 3, 2);
    const auto z = random_class(rng, s, SpaceTag::L0, 3, 2);
    const auto a = random_rational(rng, 4, 3), b = random_rational(rng, 4, 3);
    const auto zero = FnClass::zero(s), one = FnClass::one(s);

    suite.check("add-associative", add(x, add(y, z)) == add(add(x, y), z));
    suite.check("add-zero", add(x, zero) == x && add(zero, x) == x);
    suite.check("add-inverse", add(x, neg(x)) == zero);
    suite.check("add-commutative", add(x, y) == add(y, x));
    suite.check("scalar-distributes-vectors", scale(a, add(x, y)) == add(scale(a, x), scale(a, y)));
    suite.check("scalar-distributes-scalars", scale(Rational(a + b), x) == add(scale(a, x), scale(b, x)));
    suite.check("scalar-associative", scale(Rational(a * b), x) == scale(a, scale(b, x)));
    suite.check("scalar-unit", scale(Rational(1), x) == x);

    suite.check("order-reflexive", leq(x, x));
    suite.check("order-antisymmetric", !(leq(x, y) && leq(y, x)) || x == y);
    suite.check("order-transitive", !(leq(x, y) && leq(y, z)) || leq(x, z));
    suite.check("order-translation", !leq(x, y) || leq(add(x, z), add(y, z)));
    const Rational c = abs(a);
    suite.check("order-positive-cone", !leq(zero, x) || leq(zero, scale(c, x)));
    const auto xy_sup = sup(x, y), xy_inf = inf(x, y);
    suite.check("sup-upper-bound", leq(x, xy_sup) && leq(y, xy_sup));
    suite.check("inf-lower-bound", leq(xy_inf, x) && leq(xy_inf, y));
    suite.check("sup-least", !(leq(x, z) && leq(y, z)) || leq(xy_sup, z));
    suite.check("inf-greatest", !(leq(z, x) && leq(z, y)) || leq(z, xy_inf));
    suite.check("sup-inf-sum", add(xy_sup, xy_inf) == add(x, y));
    suite.check("abs-as-sup", abs(x) == sup(x, neg(x)));
    suite.check("translation-invariant-sup", add(x, sup(y, z)) == sup(add(x, y), add(x, z)));
    suite.check("lattice-distributive", inf(x, sup(y, z)) == sup(inf(x, y), inf(x, z)));
    suite.check("triangle-inequality", leq(abs(add(x, y)), add(abs(x), abs(y))));
    suite.check("positive-negative-parts", x == sub(sup(x, zero), sup(neg(x), zero)));

    suite.check("mul-associative", mul(x, mul(y, z)) == mul(mul(x, y), z));
    suite.check("mul-unit", mul(x, one) == x && mul(one, x) == x);
    suite.check("mul-scalar", scale(a, mul(x, y)) == mul(scale(a, x), y) && scale(a, mul(x, y)) == mul(x, scale(a, y)));
    suite.check("mul-left-distributive", mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    suite.check("mul-right-distributive", mul(add(x, y), z) == add(mul(x, z), mul(y, z)));
    suite.check("mul-commutative", mul(x, y) == mul(y, x));
    suite.check("mul-abs", abs(mul(x, y)) == mul(abs(x), abs(y)));
    suite.check("mul-zero-iff-disjoint", (mul(x, y) == zero) == (inf(abs(x), abs(y)) == zero));
    // |x| ≤ |y| iff x = y×w for some w with |w| ≤ 1; the only candidate off y's zeros is x/y.
    std::vector<Rational> w(s->size());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (sgn(y[i]) != 0) w[i] = x[i] / y[i];
    const auto witness = FnClass::canonical(s, std::move(w));
    const bool factorises = leq(abs(witness), one) && x == mul(y, witness);
    suite.check("mul-order-factorisation", leq(abs(x), abs(y)) == factorises);
    const auto bounded = inf(sup(z, neg(one)), one);
    suite.check("mul-contraction", leq(abs(mul(y, bounded)), abs(y)));
  });
  return suite;
}

// ---------------------------------------------------------------------------
// partial injections

LawSuite partial_laws(Rng& rng, std::size_t instances) {
  LawSuite suite("partial");
  each_instance(suite, instances, [&](std::size_t) {
    auto carrier = [&] { return random_carrier(rng, static_cast<std::size_t>(uniform_int(rng, 1, 5))); };
    const auto A = carrier(), B = carrier(), C = carrier(), D = carrier();
    const auto f = random_partial_injection(rng, A, B);
    const auto k = random_partial_injection(rng, A, C);
    const auto g = random_partial_injection(rng, B, C);
    const auto h = random_partial_injection(rng, C, D);

    suite.check("restriction-1", compose(f, restriction(f)) == f);
    suite.check("restriction-2", compose(restriction(f), restriction(k)) == compose(restriction(k), restriction(f)));
    suite.check("restriction-3", restriction(compose(k, restriction(f))) == compose(restriction(k), restriction(f)));
    suite.check("restriction-4", compose(restriction(g), f) == compose(f, restriction(compose(g, f))));
    suite.check("compose-associative", compose(h, compose(g, f)) == compose(compose(h, g), f));
    suite.check("compose-identity", compose(PartialInjection::identity(B), f) == f &&
                                        compose(f, PartialInjection::identity(A)) == f);
    suite.check("dagger-involution", dagger(dagger(f)) == f);
    suite.check("dagger-contravariant", dagger(compose(g, f)) == compose(dagger(f), dagger(g)));
    suite.check("dagger-identity", dagger(PartialInjection::identity(A)) == PartialInjection::identity(A));
    suite.check("dagger-inverse", compose(dagger(f), f) == restriction(f) && compose(f, dagger(f)) == restriction(dagger(f)));
    suite.check("inverse-category", compose(f, compose(dagger(f), f)) == f);

    const auto cb = share(FiniteMeasureSpace::counting(B));
    const auto cc = share(FiniteMeasureSpace::counting(C));
    std::vector<Rational> gv(B.size());
    for (auto& v : gv) v = coin(rng, 0.3) ? Rational(0) : random_rational(rng);
    const auto gb = FnClass::canonical(cb, gv, SpaceTag::L2);
    const auto pulled = l2_partial(f, gb);
    const auto img = f.image();
    bool covered = true;
    for (std::size_t i = 0; i < B.size(); ++i)
      if (sgn(gv[i]) != 0 && !std::binary_search(img.begin(), img.end(), B.label(i))) covered = false;
    const auto lhs = norm2_squared(pulled), rhs = norm2_squared(gb);
    suite.check("l2-contraction", lhs <= rhs && ((lhs == rhs) == covered));
    const auto hc = random_class(rng, cc, SpaceTag::L2);
    suite.check("l2-functor", l2_partial(compose(g, f), hc) == l2_partial(f, l2_partial(g, hc)));
    suite.check("l2-identity", l2_partial(PartialInjection::identity(B), gb) == gb);
  });
  return suite;
}

// ---------------------------------------------------------------------------
// signals

namespace {

Segment random_segment(Rng& rng, std::int64_t start, std::size_t length, std::int64_t stride = 1) {
  std::vector<Rational> v(length);
  for (auto& x : v) x = coin(rng, 0.8) ? make_rational(uniform_int(rng, -9, 9)) : random_rational(rng);
  return Segment(Grid{start, stride, length}, std::move(v));
}

Rational random_nonzero(Rng& rng) {
  for (;;) {
    auto c = random_rational(rng, 5, 3);
    if (sgn(c) != 0) return c;
  }
}

std::int64_t random_scale(Rng& rng) {
  static constexpr std::int64_t kScales[] = {1, -1, 2, -2};
  return kScales[uniform_int(rng, 0, 3)];
}

}  // namespace

LawSuite signal_laws(Rng& rng, std::size_t instances) {
  LawSuite suite("signal");
  each_instance(suite, instances, [&](std::size_t) {
    const auto len = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    const auto f = random_segment(rng, uniform_int(rng, -50, 50), len);

    Signal sig{uniform_int(rng, -20, 20), {}};
    for (int k = 0, n = static_cast<int>(uniform_int(rng, 1, 20)); k < n; ++k) sig.samples.push_back(random_rational(rng));
    std::vector<std::int64_t> cuts;
    for (std::int64_t p = sig.origin + 1; p < sig.origin + static_cast<std::int64_t>(sig.samples.size()); ++p)
      if (coin(rng, 0.3)) cuts.push_back(p);
    const auto pieces = segment_signal(sig, cuts);
    suite.check("segment-rejoin", rejoin(pieces) == sig && pieces.size() == cuts.size() + 1);

    const IndexMap phi{random_scale(rng), uniform_int(rng, -40, 40)};
    const auto c = random_nonzero(rng);
    auto a = make_arrow(0, 1, f.grid(), phi, c);
    const auto pred = transfer(a, f);
    bool square = true;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto i = f.grid().position(k);
      square = square && pred.at(phi(i)) == c * f[k];
    }
    suite.check("commuting-square", square);
    suite.check("identity-arrow", transfer(identity_arrow(0, f.grid()), f) == f);

    const auto g = random_segment(rng, pred.start(), pred.size(), pred.stride());
    a.residual = delta(g, pred);
    suite.check("reconstruction", reconstruct(transfer(a, f), a.residual) == g);
    suite.check("delta-antisymmetry", [&] {
      auto d1 = delta(g, pred), d2 = delta(pred, g);
      for (auto& v : d2) v = -v;
      return d1 == d2;
    }());

    // Composites: functorial on exact arrows, reconstructing with residuals.
    const IndexMap phi_b{random_scale(rng), uniform_int(rng, -40, 40)};
    const auto c_b = random_nonzero(rng);
    auto b = make_arrow(1, 2, g.grid(), phi_b, c_b);
    const auto exact_a = make_arrow(0, 1, f.grid(), phi, c);
    suite.check("transfer-functorial", transfer(compose(b, exact_a), f) == transfer(b, transfer(exact_a, f)));
    const auto hseg = random_segment(rng, b.target_grid().start, g.size(), b.target_grid().stride);
    b.residual = delta(hseg, transfer(b, g));
    const auto ba = compose(b, a);
    suite.check("composite-reconstruction", reconstruct(transfer(ba, f), ba.residual) == hseg);
    const IndexMap phi_c{random_scale(rng), uniform_int(rng, -40, 40)};
    const auto cc = make_arrow(2, 3, hseg.grid(), phi_c, random_nonzero(rng));
    suite.check("composition-associative", same_data(compose(cc, compose(b, a)), compose(compose(cc, b), a)));

    suite.check("point-map-imp", a.point_map().is_imp() && ba.point_map().is_imp());

    // transfer agrees with c · (pullback of f along φ⁻¹) on the grid spaces.
    const auto tg = a.target_grid();
    std::vector<std::size_t> back(tg.count);
    for (std::size_t k = 0; k < tg.count; ++k) back[k] = *f.grid().index_of(*phi.preimage(tg.position(k)));
    const MeasurableMap inv(grid_space(tg, a.target_weight), grid_space(f.grid()), std::move(back));
    const auto fc = FnClass::canonical(inv.target(), f.samples(), SpaceTag::L2);
    const auto pulled = amplitude_op(c, pullback(inv, fc));
    suite.check("transfer-is-pullback", pulled.values() == pred.samples());

    if (phi.scale == 1 || phi.scale == -1) {
      const auto inv_a = inverse_arrow(a);
      suite.check("inverse-arrow", is_identity(compose(inv_a, a)) && is_identity(compose(a, inv_a)));
    }

    // Translation: exact copies are always found; norms agree with counting weights.
    const auto shift = make_arrow(0, 1, f.grid(), IndexMap{1, uniform_int(rng, -30, 30)});
    const auto copy = transfer(shift, f);
    const auto found = detect_translation(f, copy, Tolerance{0});
    suite.check("translation-exact-complete", found && found->is_exact() && found->phi == shift.phi);
    const auto sf = grid_space(f.grid()), sc = grid_space(copy.grid());
    suite.check("translation-norm", norm2_squared(FnClass::canonical(sf, f.samples(), SpaceTag::L2)) ==
                                        norm2_squared(FnClass::canonical(sc, copy.samples(), SpaceTag::L2)));

    // Scaling f and g by the same factor leaves the selected (S, T) unchanged.
    const std::int64_t strides[] = {1, -1};
    const auto g2 = random_segment(rng, uniform_int(rng, -50, 50), len);
    const auto k = random_nonzero(rng);
    auto scaled = [&](const Segment& s) {
      auto v = s.samples();
      for (auto& x : v) x *= k;
      return Segment(s.grid(), std::move(v));
    };
    const auto best = detect_affine(f, g2, strides, Tolerance::infinite());
    const auto best_scaled = detect_affine(scaled(f), scaled(g2), strides, Tolerance::infinite());
    suite.check("argmax-invariance", best && best_scaled && best->phi == best_scaled->phi);
  });
  return suite;
}

// ---------------------------------------------------------------------------
// codec

LawSuite codec_laws(Rng& rng, std::size_t instances) {
  LawSuite suite("codec");
  auto dominated = [](const EncodedSignal& detected, const EncodedSignal& predecessor) {
    const auto base = delta_stream(predecessor);
    std::size_t pos = 0;  // index into the Δ stream, i.e. sample position - 1
    for (const auto& rec : detected.records) {
      __int128 mine = 0, theirs = 0;
      for (std::size_t k = 0; k < rec.delta.size(); ++k) {
        mine += static_cast<__int128>(rec.delta[k]) * rec.delta[k];
        theirs += static_cast<__int128>(base[pos + k]) * base[pos + k];
      }
      if (mine > theirs) return false;
      pos += rec.delta.size();
    }
    return true;
  };
  each_instance(suite, instances, [&](std::size_t) {
    const auto length = static_cast<std::size_t>(uniform_int(rng, 1, 200));
    const auto range = uniform_int(rng, 0, 300);
    const auto x = random_int_signal(rng, length, -range, range);
    const auto pred = encode(x, Policy::Predecessor);
    const auto det = encode(x, Policy::Detected);
    suite.check("round-trip-1d", decode_1d(pred) == x && decode_1d(det) == x);
    const auto bytes = write_container(det);
    const auto back = read_container(bytes);
    suite.check("container-stable", back == det && write_container(back) == bytes);
    suite.check("detected-dominates-1d", dominated(det, pred));
    suite.check("record-count", pred.records.size() + 1 == length);

    const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 12));
    const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 12));
    const auto img = random_image(rng, rows, cols, uniform_int(rng, 1, 65535));
    const auto ip = encode(img, Policy::Predecessor);
    const auto id = encode(img, Policy::Detected);
    suite.check("round-trip-2d", decode_2d(ip) == img && decode_2d(id) == img);
    suite.check("detected-dominates-2d", dominated(id, ip));
    const auto m = metrics(img.pixels, ip);
    suite.check("metrics-range", m.raw_entropy >= 0 && m.delta_entropy >= 0 && m.nonzero_delta_fraction >= 0 &&
                                     m.nonzero_delta_fraction <= 1);
  });
  return suite;
}

std::vector<LawSuite> run_all_laws(std::uint64_t seed, std::size_t instances) {
  Rng rng(seed);
  std::vector<LawSuite> out;
  out.push_back(measure_laws(rng, instances));
  out.push_back(quotient_laws(rng, instances));
  out.push_back(induced_hom_laws(rng, instances));
  out.push_back(pullback_laws(rng, instances, instances));
  out.push_back(duality_laws(rng, instances, instances));
  out.push_back(riesz_laws(rng, instances));
  out.push_back(partial_laws(rng, instances));
  out.push_back(signal_laws(rng, instances));
  out.push_back(codec_laws(rng, instances));
  return out;
}

}  // namespace fsig
