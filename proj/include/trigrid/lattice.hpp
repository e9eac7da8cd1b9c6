// lattice.hpp - exact integer coordinates for the triangular grid
//
// A lattice point (x, y) sits at the Cartesian position
//     x * (1, 0) + y * (1/2, sqrt(3)/2),
// i.e. the basis vectors are one lattice edge apart at 60 degrees.  The grid
// with n vertices per side is anchored with one corner at the origin and its
// bottom edge along +x, so membership is
//     x >= 0, y >= 0, x + y <= N      with N = n - 1 (side length in edges).
//
// All arithmetic is exact: signed 64-bit values, overflow detected and
// reported via std::overflow_error (128-bit intermediates where convenient).
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "trigrid/checked.hpp"

namespace trigrid {

// Grid parameter: n vertices per side, n >= 1.
class GridSpec {
public:
    explicit GridSpec(std::int64_t n);

    std::int64_t n() const { return n_; }

    // Side length in edges.
    std::int64_t side() const { return n_ - 1; }

    // n(n+1)/2 lattice points in the grid.
    std::int64_t vertex_count() const;

private:
    std::int64_t n_;
};

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Difference of two lattice points.
struct Delta {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend auto operator<=>(const Delta&, const Delta&) = default;
};

inline Delta operator-(LatticePoint a, LatticePoint b) {
    return Delta{checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

inline LatticePoint operator+(LatticePoint p, Delta d) {
    return LatticePoint{checked_add(p.x, d.dx), checked_add(p.y, d.dy)};
}

// Rotation by +60 degrees: (dx, dy) -> (-dy, dx + dy).  Preserves norm_sq.
inline Delta rotate60(Delta d) {
    return Delta{checked_neg(d.dy), checked_add(d.dx, d.dy)};
}

// Rotation by -60 degrees, the inverse of rotate60: (dx, dy) -> (dx + dy, -dx).
inline Delta rotate_minus60(Delta d) {
    return Delta{checked_add(d.dx, d.dy), checked_neg(d.dx)};
}

// Squared Euclidean length of d under the Cartesian embedding:
// dx^2 + dx*dy + dy^2.  Zero iff d is zero.
inline std::int64_t norm_sq(Delta d) {
    const __int128 x = d.dx;
    const __int128 y = d.dy;
    return narrow_i128(x * x + x * y + y * y);
}

// Sign of the cross product d1 x d2; +1 iff d2 is counterclockwise of d1.
// Computed by comparing the two 128-bit products, so no overflow is possible.
inline int cross_sign(Delta d1, Delta d2) {
    const __int128 lhs = static_cast<__int128>(d1.dx) * d2.dy;
    const __int128 rhs = static_cast<__int128>(d2.dx) * d1.dy;
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

// Membership in the grid of g: x >= 0, y >= 0, x + y <= side.
bool in_grid(LatticePoint p, const GridSpec& g);

// All grid points, ascending y then ascending x; length n(n+1)/2.
std::vector<LatticePoint> grid_points(const GridSpec& g);

}  // namespace trigrid
