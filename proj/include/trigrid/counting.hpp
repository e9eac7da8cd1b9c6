// counting.hpp - exact counting formulas
#pragma once

#include <cstdint>

#include "trigrid/lattice.hpp"

namespace trigrid {

// Exact nonnegative count; all paths are overflow-checked.
using Count = std::uint64_t;

// C(n, k), exact; 0 when k > n.  Throws std::overflow_error if the value
// does not fit in 64 bits, std::invalid_argument on negative input.
Count binomial(std::int64_t n, std::int64_t k);

// C(n + 2, 4): the number of equilateral triangles in the grid.
Count count_closed_form(const GridSpec& g);

// Sum over circumscriber side s of (tilts per side) * (positions):
//     sum_{s=1..N} s * (N-s+1)(N-s+2)/2
// Equals count_closed_form for every n.
Count count_decomposition(const GridSpec& g);

}  // namespace trigrid
