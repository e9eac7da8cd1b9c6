// test_lattice.cpp
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "trigrid/lattice.hpp"

using namespace trigrid;

namespace {

// Paren-call constructors keep commas out of assertion macros.
Delta dl(std::int64_t dx, std::int64_t dy) { return Delta{dx, dy}; }
LatticePoint pt(std::int64_t x, std::int64_t y) { return LatticePoint{x, y}; }

// Independent oracle: squared length of the Cartesian embedding
// dx*(1,0) + dy*(1/2, sqrt(3)/2), in floating point.
double cart_len_sq(Delta d) {
    const double x = static_cast<double>(d.dx) + static_cast<double>(d.dy) / 2.0;
    const double y = static_cast<double>(d.dy) * std::sqrt(3.0) / 2.0;
    return x * x + y * y;
}

std::mt19937_64 rng(20240817);

Delta random_delta(std::int64_t lim) {
    std::uniform_int_distribution<std::int64_t> dist(-lim, lim);
    return Delta{dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("GridSpec validates n and derives side and vertex count") {
    CHECK_THROWS_AS(GridSpec(0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(-3), std::invalid_argument);
    const GridSpec g(10);
    CHECK(g.n() == 10);
    CHECK(g.side() == 9);
    CHECK(g.vertex_count() == 55);
    CHECK(GridSpec(1).side() == 0);
    CHECK(GridSpec(1).vertex_count() == 1);
}

TEST_CASE("rotate60 on unit vectors") {
    CHECK(rotate60(dl(1, 0)) == dl(0, 1));
    CHECK(rotate60(dl(0, 1)) == dl(-1, 1));
}

TEST_CASE("rotate60 preserves the norm form: (2,-1) -> (1,1)") {
    CHECK(rotate60(dl(2, -1)) == dl(1, 1));
    CHECK(norm_sq(dl(2, -1)) == 3);
    CHECK(norm_sq(dl(1, 1)) == 3);
}

TEST_CASE("norm_sq basics and Cartesian cross-check") {
    CHECK(norm_sq(dl(1, 0)) == 1);
    CHECK(norm_sq(dl(0, 0)) == 0);
    CHECK(norm_sq(dl(-1, 2)) == 3);  // 1 - 2 + 4
    CHECK(cart_len_sq(dl(-1, 2)) == doctest::Approx(3.0).epsilon(1e-12));

    for (int i = 0; i < 10000; ++i) {
        const Delta d = random_delta(1000000);
        const double exact = static_cast<double>(norm_sq(d));
        CHECK(exact == doctest::Approx(cart_len_sq(d)).epsilon(1e-9));
    }
}

TEST_CASE("cross_sign orientation predicate") {
    CHECK(cross_sign(dl(1, 0), dl(0, 1)) == 1);
    CHECK(cross_sign(dl(1, 0), dl(2, 0)) == 0);
    CHECK(cross_sign(dl(0, 2), dl(-2, 0)) == 1);  // 0*0 - (-2)*2 = 4
    CHECK(cross_sign(dl(0, 1), dl(1, 0)) == -1);
    // Extremes cannot overflow: the implementation compares products.
    CHECK(cross_sign(dl(INT64_MAX, INT64_MAX), dl(INT64_MAX, INT64_MAX)) == 0);
    CHECK(cross_sign(dl(INT64_MIN, INT64_MIN), dl(INT64_MAX, INT64_MAX)) == 0);
    CHECK(cross_sign(dl(INT64_MIN, 1), dl(1, INT64_MAX)) == -1);
}

TEST_CASE("rotate60 applied six times is the identity") {
    const auto six_turns = [](Delta d) {
        for (int i = 0; i < 6; ++i) d = rotate60(d);
        return d;
    };
    for (std::int64_t dx = -10; dx <= 10; ++dx) {
        for (std::int64_t dy = -10; dy <= 10; ++dy) {
            CHECK(six_turns(dl(dx, dy)) == dl(dx, dy));
        }
    }
    for (int i = 0; i < 10000; ++i) {
        const Delta d = random_delta(1000000000);
        CHECK(six_turns(d) == d);
    }
}

TEST_CASE("rotate60 and rotate_minus60 are mutually inverse and norm-preserving") {
    for (int i = 0; i < 10000; ++i) {
        const Delta d = random_delta(1000000000);
        CHECK(rotate_minus60(rotate60(d)) == d);
        CHECK(rotate60(rotate_minus60(d)) == d);
        CHECK(norm_sq(rotate60(d)) == norm_sq(d));
    }
}

TEST_CASE("norm_sq is zero only at the origin") {
    CHECK(norm_sq(dl(0, 0)) == 0);
    for (int i = 0; i < 10000; ++i) {
        Delta d = random_delta(1000);
        if (d.dx == 0 && d.dy == 0) d.dx = 1;
        CHECK(norm_sq(d) > 0);
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    const std::int64_t big = 4000000000LL;  // 3*big^2 > INT64_MAX
    CHECK_THROWS_AS(norm_sq(dl(big, big)), std::overflow_error);
    CHECK_THROWS_AS(rotate60(dl(INT64_MAX, 1)), std::overflow_error);
    CHECK_THROWS_AS(rotate60(dl(0, INT64_MIN)), std::overflow_error);
    CHECK(norm_sq(dl(3000000000LL, 0)) == 9000000000000000000LL);
}

TEST_CASE("in_grid membership") {
    const GridSpec g(10);  // side 9: x,y >= 0 and x + y <= 9
    CHECK(in_grid(pt(0, 0), g));
    CHECK(in_grid(pt(9, 0), g));
    CHECK(in_grid(pt(0, 9), g));
    CHECK(in_grid(pt(4, 5), g));
    CHECK_FALSE(in_grid(pt(5, 5), g));
    CHECK_FALSE(in_grid(pt(-1, 0), g));
    CHECK_FALSE(in_grid(pt(0, -1), g));
    CHECK_FALSE(in_grid(pt(10, 0), g));

    const GridSpec unit(1);
    CHECK(in_grid(pt(0, 0), unit));
    CHECK_FALSE(in_grid(pt(1, 0), unit));
}

TEST_CASE("grid_points small cases and ordering") {
    const std::vector<LatticePoint> one{pt(0, 0)};
    CHECK(grid_points(GridSpec(1)) == one);
    const std::vector<LatticePoint> three{pt(0, 0), pt(1, 0), pt(0, 1)};
    CHECK(grid_points(GridSpec(2)) == three);

    const auto pts = grid_points(GridSpec(10));
    CHECK(pts.size() == 55);
    const GridSpec g(10);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(in_grid(pts[i], g));
        if (i > 0) {
            const bool ordered = pts[i - 1].y < pts[i].y ||
                                 (pts[i - 1].y == pts[i].y && pts[i - 1].x < pts[i].x);
            CHECK(ordered);
        }
    }
}

TEST_CASE("grid_points(n) is a strict subset of grid_points(n+1)") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto small = grid_points(GridSpec(n));
        const auto large = grid_points(GridSpec(n + 1));
        const std::set<LatticePoint> large_set(large.begin(), large.end());
        for (const LatticePoint& p : small) {
            CHECK(large_set.count(p) == 1);
        }
        CHECK(small.size() < large.size());
    }
}
