#include "fsig/subset.hpp"

#include <stdexcept>

namespace fsig {

Subset make_subset(std::size_t universe, std::initializer_list<std::size_t> members) {
  return make_subset(universe, std::vector<std::size_t>(members));
}

Subset make_subset(std::size_t universe, const std::vector<std::size_t>& members) {
  Subset s(universe);
  for (auto m : members) {
    if (m >= universe) throw std::out_of_range("subset member outside universe");
    s.set(m);
  }
  return s;
}

Subset full_subset(std::size_t universe) {
  Subset s(universe);
  s.set();
  return s;
}

Subset subset_from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::out_of_range("mask universe above 64");
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if ((mask >> i) & 1U) s.set(i);
  return s;
}

std::uint64_t subset_to_mask(const Subset& s) {
  if (s.size() > 64) throw std::out_of_range("mask universe above 64");
  std::uint64_t mask = 0;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) mask |= std::uint64_t{1} << i;
  return mask;
}

std::vector<std::size_t> members_of(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

std::string format_subset(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : members_of(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace fsig
