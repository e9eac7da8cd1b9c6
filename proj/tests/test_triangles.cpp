// test_triangles.cpp
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "trigrid/counting.hpp"
#include "trigrid/errors.hpp"
#include "trigrid/lattice.hpp"
#include "trigrid/triangles.hpp"

using namespace trigrid;

namespace {

LatticePoint pt(std::int64_t x, std::int64_t y) { return LatticePoint{x, y}; }

Triangle tri(LatticePoint a, LatticePoint b, LatticePoint c) {
    return Triangle{{a, b, c}};
}

std::mt19937_64 rng(911);

LatticePoint random_point(std::int64_t lim) {
    std::uniform_int_distribution<std::int64_t> dist(-lim, lim);
    return LatticePoint{dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("is_equilateral on known triples") {
    CHECK(is_equilateral(pt(0, 0), pt(1, 0), pt(0, 1)));
    CHECK(is_equilateral(pt(0, 0), pt(2, 0), pt(0, 2)));
    CHECK(is_equilateral(pt(0, 0), pt(2, -1), pt(1, 1)));  // tilted
    CHECK(is_equilateral(pt(5, 0), pt(3, 2), pt(5, 2)));   // tilted, side^2 = 4
    CHECK_FALSE(is_equilateral(pt(0, 0), pt(2, 0), pt(0, 1)));
    CHECK_FALSE(is_equilateral(pt(0, 0), pt(1, 0), pt(2, 0)));  // collinear
    CHECK_FALSE(is_equilateral(pt(0, 0), pt(0, 0), pt(1, 0)));  // degenerate
    CHECK_FALSE(is_equilateral(pt(0, 0), pt(0, 0), pt(0, 0)));
}

TEST_CASE("the tilted example has squared side 4") {
    // (5,0) -> (3,2): d=(-2,2), |d|^2 = 4 - 4 + 4 = 4.
    CHECK(norm_sq(pt(3, 2) - pt(5, 0)) == 4);
    CHECK(norm_sq(pt(5, 2) - pt(3, 2)) == 4);
    CHECK(norm_sq(pt(5, 0) - pt(5, 2)) == 4);
}

TEST_CASE("is_equilateral is invariant under vertex permutations") {
    for (int iter = 0; iter < 10000; ++iter) {
        std::array<LatticePoint, 3> v{random_point(50), random_point(50), random_point(50)};
        const bool base = is_equilateral(v[0], v[1], v[2]);
        std::array<int, 3> idx{0, 1, 2};
        do {
            CHECK(is_equilateral(v[idx[0]], v[idx[1]], v[idx[2]]) == base);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("is_equilateral is invariant under translation") {
    for (int iter = 0; iter < 10000; ++iter) {
        const LatticePoint a = random_point(40);
        const LatticePoint b = random_point(40);
        const LatticePoint c = random_point(40);
        const Delta shift = random_point(1000000) - pt(0, 0);
        const LatticePoint a2 = a + shift;
        const LatticePoint b2 = b + shift;
        const LatticePoint c2 = c + shift;
        CHECK(is_equilateral(a, b, c) == is_equilateral(a2, b2, c2));
    }
}

TEST_CASE("rotation route and norm route agree on every grid triple (n=8)") {
    const auto pts = grid_points(GridSpec(8));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const bool via_rot = is_equilateral(pts[i], pts[j], pts[k]);
                const bool via_norm = is_equilateral_by_norms(pts[i], pts[j], pts[k]);
                CHECK(via_rot == via_norm);
            }
        }
    }
}

TEST_CASE("canonicalize sorts by (y, x) and validates") {
    const GridSpec g(10);
    const Triangle t = canonicalize(pt(5, 2), pt(5, 0), pt(3, 2), g);
    CHECK(t == tri(pt(5, 0), pt(3, 2), pt(5, 2)));
    // Idempotent on its own output.
    CHECK(canonicalize(t.v[0], t.v[1], t.v[2], g) == t);

    CHECK_THROWS_AS(canonicalize(pt(0, 0), pt(2, 0), pt(0, 1), g), not_equilateral_error);
    // Equilateral but poking past the left edge: the unit upward triangle
    // translated by (-1, 0).
    CHECK_THROWS_AS(canonicalize(pt(-1, 0), pt(0, 0), pt(-1, 1), g), out_of_grid_error);
    // Non-equilateral wins when both conditions fail.
    CHECK_THROWS_AS(canonicalize(pt(-1, 0), pt(5, 0), pt(0, 3), g), not_equilateral_error);
}

TEST_CASE("brute force: degenerate and tiny grids") {
    const auto none = enumerate_brute_force(GridSpec(1));
    CHECK(none.empty());

    const auto unit = enumerate_brute_force(GridSpec(2));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == tri(pt(0, 0), pt(1, 0), pt(0, 1)));

    const auto five = enumerate_brute_force(GridSpec(3));
    CHECK(five.size() == 5);
}

TEST_CASE("brute-force counts match the closed form for n = 1..12") {
    const std::vector<Count> expected{0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715, 1001};
    for (std::int64_t n = 1; n <= 12; ++n) {
        const GridSpec g(n);
        const auto all = enumerate_brute_force(g);
        CHECK(all.size() == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(all.size() == count_closed_form(g));
        // Sorted, duplicate-free, every triangle canonical and in-grid.
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const Triangle& t : all) {
            CHECK(is_equilateral(t.v[0], t.v[1], t.v[2]));
            CHECK(canonicalize(t.v[0], t.v[1], t.v[2], g) == t);
        }
    }
}

TEST_CASE("triangles of grid n embed into grid n+1") {
    for (std::int64_t n = 1; n <= 10; ++n) {
        const auto small = enumerate_brute_force(GridSpec(n));
        const auto large = enumerate_brute_force(GridSpec(n + 1));
        const std::set<Triangle> large_set(large.begin(), large.end());
        for (const Triangle& t : small) {
            CHECK(large_set.count(t) == 1);
        }
    }
}

TEST_CASE("brute force refuses grids beyond the safety bound") {
    CHECK(kBruteForceMaxN == 25);
    CHECK_THROWS_AS(enumerate_brute_force(GridSpec(26)), std::domain_error);
    CHECK_THROWS_AS(enumerate_brute_force(GridSpec(6), 5), std::domain_error);
    CHECK_NOTHROW(enumerate_brute_force(GridSpec(5), 5));
}
