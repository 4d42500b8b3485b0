#pragma once

#include <bit>
#include <cstdint>

namespace finconv {

/// One bit per carrier point; bit i is point i.
using mask_t = std::uint32_t;

inline constexpr unsigned max_carrier_size = 16;

constexpr mask_t full_mask(unsigned n) { return n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1; }
constexpr mask_t point_mask(unsigned i) { return mask_t{1} << i; }
constexpr bool has_point(mask_t m, unsigned i) { return (m >> i) & 1u; }
constexpr bool subset_of(mask_t a, mask_t b) { return (a & ~b) == 0; }
constexpr bool meets(mask_t a, mask_t b) { return (a & b) != 0; }
constexpr unsigned cardinality(mask_t m) { return static_cast<unsigned>(std::popcount(m)); }
constexpr unsigned lowest_point(mask_t m) { return static_cast<unsigned>(std::countr_zero(m)); }

/// Calls f(i) for every point i in m, ascending.
template <class F>
constexpr void for_each_point(mask_t m, F&& f) {
  while (m) {
    f(lowest_point(m));
    m &= m - 1;
  }
}

/// Calls f(s) for every nonempty s ⊆ m, in descending numeric order.
template <class F>
constexpr void for_each_nonempty_subset(mask_t m, F&& f) {
  for (mask_t s = m; s; s = (s - 1) & m) f(s);
}

}  // namespace finconv
