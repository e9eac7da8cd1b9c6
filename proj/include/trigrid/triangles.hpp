// triangles.hpp - canonical equilateral triangles and the brute-force enumerator
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "trigrid/errors.hpp"
#include "trigrid/lattice.hpp"

namespace trigrid {

// An equilateral triangle with vertices in a grid, stored in canonical order:
// ascending (y, x).  Construct via canonicalize() so the invariants hold.
struct Triangle {
    std::array<LatticePoint, 3> v;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// True iff p, q, r are three distinct points forming an equilateral triangle,
// i.e. r - p is the +60 or -60 degree rotation of q - p.
bool is_equilateral(LatticePoint p, LatticePoint q, LatticePoint r);

// Same predicate via the three-equal-norms route; kept separate so the two
// forms can be checked against each other.
bool is_equilateral_by_norms(LatticePoint p, LatticePoint q, LatticePoint r);

// Sort the vertices into canonical (y, x) order.  Throws not_equilateral_error
// or out_of_grid_error on bad input.  Idempotent over vertex permutations.
Triangle canonicalize(LatticePoint p, LatticePoint q, LatticePoint r, const GridSpec& g);

// Enumeration oracle: test every 3-subset of grid_points(g).  Returns the
// canonical triangles sorted ascending, no duplicates.  Refuses n above
// max_n (the triple loop is cubic in the point count).
inline constexpr std::int64_t kBruteForceMaxN = 25;

std::vector<Triangle> enumerate_brute_force(const GridSpec& g,
                                            std::int64_t max_n = kBruteForceMaxN);

}  // namespace trigrid
