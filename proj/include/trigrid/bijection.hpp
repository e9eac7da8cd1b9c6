// bijection.hpp - 4-subsets of {1..n+2} <-> equilateral triangles in the grid
//
// The correspondence runs through two intermediate forms:
//
//   Subset4 {a<b<c<d}  <->  GapVector (g1..g5)   stars and bars: the five
//                                                 gaps before/between/after
//                                                 the chosen elements sum
//                                                 to n-2
//   GapVector          <->  InscribedParams      frozen assignment
//                                                 (g1,g2,g3,g4,g5) =
//                                                 (p, q, r, t, s-1-t)
//   InscribedParams    <->  Triangle             the triangle inscribed with
//                                                 tilt t in the aligned
//                                                 upward triangle of side s
//                                                 at corner (p, q)
//
// Every equilateral lattice triangle arises this way from exactly one
// parameter tuple, which is what makes encode/decode a bijection.  rank and
// unrank add colexicographic indexing of the subsets on top.
#pragma once

#include <cstdint>

#include "trigrid/counting.hpp"
#include "trigrid/lattice.hpp"
#include "trigrid/triangles.hpp"

namespace trigrid {

// A 4-element subset of {1, ..., n+2}, strictly increasing.
struct Subset4 {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;

    friend auto operator<=>(const Subset4&, const Subset4&) = default;
};

// Five nonnegative gaps summing to n - 2.
struct GapVector {
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::int64_t g3 = 0;
    std::int64_t g4 = 0;
    std::int64_t g5 = 0;

    friend auto operator<=>(const GapVector&, const GapVector&) = default;
};

// Circumscribing aligned upward triangle plus inscribed offset:
//   s: side of the circumscriber, 1 <= s <= N
//   t: tilt of the inscribed triangle along its sides, 0 <= t <= s-1
//   p, q, r: position of the circumscriber, p + q + r = N - s
// t = 0 iff the triangle is itself an aligned upward triangle.
struct InscribedParams {
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;

    friend auto operator<=>(const InscribedParams&, const InscribedParams&) = default;
};

// Invariant checks; each throws std::invalid_argument on violation.
void validate(const Subset4& S, const GridSpec& g);
void validate(const GapVector& gv, const GridSpec& g);
void validate(const InscribedParams& ip, const GridSpec& g);

// Stars and bars: (a-1, b-a-1, c-b-1, d-c-1, n+2-d) and back.
GapVector subset_to_gaps(const Subset4& S, const GridSpec& g);
Subset4 gaps_to_subset(const GapVector& gv, const GridSpec& g);

// The frozen gap-to-parameter assignment and its inverse.
InscribedParams gaps_to_params(const GapVector& gv, const GridSpec& g);
GapVector params_to_gaps(const InscribedParams& ip, const GridSpec& g);

// With aligned corner A = (p, q), the inscribed vertices are
//   V1 = (p+t, q),  V2 = (p+s-t, q+t),  V3 = (p, q+s-t),
// returned canonicalized.  Always in-grid and equilateral for valid params.
Triangle params_to_triangle(const InscribedParams& ip, const GridSpec& g);

// Inverse construction.  Orient the vertices counterclockwise; exactly one
// directed edge (dx, dy) has dy >= 0 and dx + dy >= 1, and it determines
//   t = dy,  s = dx + 2*dy,  A = edge start - (t, 0).
// Uniqueness of that edge is asserted, not assumed.
InscribedParams triangle_to_params(const Triangle& T, const GridSpec& g);

// Full compositions.
Triangle encode(const Subset4& S, const GridSpec& g);
Subset4 decode(const Triangle& T, const GridSpec& g);

// Colexicographic rank C(a-1,1) + C(b-1,2) + C(c-1,3) + C(d-1,4), a bijection
// onto [0, C(n+2,4)), and its greedy inverse.
Count rank(const Subset4& S, const GridSpec& g);
Subset4 unrank(Count k, const GridSpec& g);

}  // namespace trigrid
