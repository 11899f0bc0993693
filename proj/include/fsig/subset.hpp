#ifndef FSIG_SUBSET_HPP
#define FSIG_SUBSET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace fsig {

/// A subset of an indexed finite set, one bit per element.
using Subset = boost::dynamic_bitset<std::uint64_t>;

Subset make_subset(std::size_t universe, std::initializer_list<std::size_t> members);
Subset make_subset(std::size_t universe, const std::vector<std::size_t>& members);
Subset full_subset(std::size_t universe);
/// Low `universe` bits of `mask`; universe must be <= 64.
Subset subset_from_mask(std::size_t universe, std::uint64_t mask);
std::uint64_t subset_to_mask(const Subset& s);
std::vector<std::size_t> members_of(const Subset& s);
/// Renders as "{0,2,5}" using element indices.
std::string format_subset(const Subset& s);

}  // namespace fsig

#endif  // FSIG_SUBSET_HPP
