#ifndef FSIG_TESTS_ORACLES_HPP
#define FSIG_TESTS_ORACLES_HPP

// Brute-force reference computations used to check the library's answers.

#include <cstdint>
#include <set>
#include <vector>

#include "fsig/measure.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<fsig::ExtRational> ext(std::initializer_list<std::int64_t> w) {
  return {w.begin(), w.end()};
}

inline fsig::SpaceRef weighted(std::initializer_list<std::int64_t> w) {
  return fsig::share(fsig::FiniteMeasureSpace::point_supported(fsig::FiniteCarrier::range(0, w.size()), ext(w)));
}

inline fsig::SpaceRef counting(fsig::Label first, std::size_t n) {
  return fsig::share(fsig::FiniteMeasureSpace::counting(fsig::FiniteCarrier::range(first, n)));
}

inline std::set<Mask> masks(const std::vector<fsig::Subset>& family) {
  std::set<Mask> out;
  for (const auto& s : family) out.insert(fsig::subset_to_mask(s));
  return out;
}

inline fsig::Subset set(std::size_t n, std::initializer_list<std::size_t> members) {
  return fsig::make_subset(n, members);
}

// Σ_{x∈E} w(x), read straight off the weights.
inline fsig::ExtRational weight_sum(const fsig::FiniteMeasureSpace& s, Mask m) {
  fsig::ExtRational total;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (m >> i & 1U) total += s.weight(i);
  return total;
}

// Every subset of X, by mask.
inline std::vector<Mask> all_masks(std::size_t n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.push_back(m);
  return out;
}

// Flags decided by enumerating Σ_target.
inline fsig::MapFlags flags(const fsig::MeasurableMap& phi) {
  const auto members = masks(phi.source()->sigma().members());
  bool meas = true, ns = true, imp = true;
  for (const auto& f : phi.target()->sigma().members()) {
    const Mask pre = fsig::subset_to_mask(phi.preimage(f));
    if (!members.contains(pre)) {
      meas = false;
      continue;
    }
    const auto mu = weight_sum(*phi.source(), pre);
    const auto nu = weight_sum(*phi.target(), fsig::subset_to_mask(f));
    if (nu.is_zero() && !mu.is_zero()) ns = false;
    if (!(mu == nu)) imp = false;
  }
  return {meas, meas && ns, meas && ns && imp};
}

}  // namespace oracle

#endif  // FSIG_TESTS_ORACLES_HPP
