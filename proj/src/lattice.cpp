// lattice.cpp
#include "trigrid/lattice.hpp"

#include <stdexcept>
#include <string>

namespace trigrid {

GridSpec::GridSpec(std::int64_t n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("GridSpec: n must be >= 1, got " + std::to_string(n));
    }
}

std::int64_t GridSpec::vertex_count() const {
    return narrow_i128(static_cast<__int128>(n_) * (n_ + 1) / 2);
}

bool in_grid(LatticePoint p, const GridSpec& g) {
    return p.x >= 0 && p.y >= 0 && checked_add(p.x, p.y) <= g.side();
}

std::vector<LatticePoint> grid_points(const GridSpec& g) {
    const std::int64_t N = g.side();
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (std::int64_t y = 0; y <= N; ++y) {
        for (std::int64_t x = 0; x <= N - y; ++x) {
            pts.push_back(LatticePoint{x, y});
        }
    }
    return pts;
}

}  // namespace trigrid
