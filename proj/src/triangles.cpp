// triangles.cpp
#include "trigrid/triangles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trigrid {

namespace {

bool all_distinct(LatticePoint p, LatticePoint q, LatticePoint r) {
    return p != q && p != r && q != r;
}

// Canonical vertex order inside a triangle: ascending y, then ascending x.
bool canonical_less(LatticePoint a, LatticePoint b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

bool is_equilateral(LatticePoint p, LatticePoint q, LatticePoint r) {
    if (!all_distinct(p, q, r)) {
        return false;
    }
    const Delta pq = q - p;
    const Delta pr = r - p;
    return pr == rotate60(pq) || pr == rotate_minus60(pq);
}

bool is_equilateral_by_norms(LatticePoint p, LatticePoint q, LatticePoint r) {
    if (!all_distinct(p, q, r)) {
        return false;
    }
    const std::int64_t a = norm_sq(q - p);
    const std::int64_t b = norm_sq(r - q);
    const std::int64_t c = norm_sq(p - r);
    return a == b && b == c && a > 0;
}

Triangle canonicalize(LatticePoint p, LatticePoint q, LatticePoint r, const GridSpec& g) {
    if (!is_equilateral(p, q, r)) {
        throw not_equilateral_error("canonicalize: points " + point_str(p) + " " +
                                    point_str(q) + " " + point_str(r) +
                                    " are not an equilateral triangle");
    }
    for (LatticePoint v : {p, q, r}) {
        if (!in_grid(v, g)) {
            throw out_of_grid_error("canonicalize: vertex " + point_str(v) +
                                    " outside grid with n=" + std::to_string(g.n()));
        }
    }
    Triangle t{{p, q, r}};
    std::sort(t.v.begin(), t.v.end(), canonical_less);
    return t;
}

std::vector<Triangle> enumerate_brute_force(const GridSpec& g, std::int64_t max_n) {
    if (g.n() > max_n) {
        throw std::domain_error("enumerate_brute_force: n=" + std::to_string(g.n()) +
                                " exceeds the safety bound " + std::to_string(max_n) +
                                "; the triple loop is cubic in the point count");
    }
    const std::vector<LatticePoint> pts = grid_points(g);
    const std::size_t m = pts.size();

    // Each triangle's vertex set is one unordered triple, so i<j<k visits
    // every candidate exactly once and the result is duplicate-free.
    std::vector<Triangle> found;
    for (std::size_t i = 0; i + 2 < m; ++i) {
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                if (is_equilateral(pts[i], pts[j], pts[k])) {
                    found.push_back(canonicalize(pts[i], pts[j], pts[k], g));
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace trigrid
