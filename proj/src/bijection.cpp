// bijection.cpp
#include "trigrid/bijection.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace trigrid {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace

void validate(const Subset4& S, const GridSpec& g) {
    if (!(1 <= S.a && S.a < S.b && S.b < S.c && S.c < S.d && S.d <= g.n() + 2)) {
        invalid("Subset4 {" + std::to_string(S.a) + "," + std::to_string(S.b) + "," +
                std::to_string(S.c) + "," + std::to_string(S.d) +
                "} is not strictly increasing within 1.." + std::to_string(g.n() + 2));
    }
}

void validate(const GapVector& gv, const GridSpec& g) {
    for (std::int64_t gi : {gv.g1, gv.g2, gv.g3, gv.g4, gv.g5}) {
        if (gi < 0) {
            invalid("GapVector has a negative gap");
        }
    }
    const std::int64_t sum =
        checked_add(checked_add(checked_add(checked_add(gv.g1, gv.g2), gv.g3), gv.g4), gv.g5);
    if (sum != g.n() - 2) {
        invalid("GapVector sums to " + std::to_string(sum) + ", expected n-2 = " +
                std::to_string(g.n() - 2));
    }
}

void validate(const InscribedParams& ip, const GridSpec& g) {
    const std::int64_t N = g.side();
    if (ip.s < 1 || ip.s > N) {
        invalid("InscribedParams: s=" + std::to_string(ip.s) + " outside 1..N=" +
                std::to_string(N));
    }
    if (ip.t < 0 || ip.t > ip.s - 1) {
        invalid("InscribedParams: t=" + std::to_string(ip.t) + " outside 0..s-1");
    }
    if (ip.p < 0 || ip.q < 0 || ip.r < 0) {
        invalid("InscribedParams: negative position coordinate");
    }
    if (checked_add(checked_add(ip.p, ip.q), ip.r) != N - ip.s) {
        invalid("InscribedParams: p+q+r != N-s");
    }
}

GapVector subset_to_gaps(const Subset4& S, const GridSpec& g) {
    validate(S, g);
    return GapVector{S.a - 1, S.b - S.a - 1, S.c - S.b - 1, S.d - S.c - 1, g.n() + 2 - S.d};
}

Subset4 gaps_to_subset(const GapVector& gv, const GridSpec& g) {
    validate(gv, g);
    const std::int64_t a = gv.g1 + 1;
    const std::int64_t b = a + gv.g2 + 1;
    const std::int64_t c = b + gv.g3 + 1;
    const std::int64_t d = c + gv.g4 + 1;
    return Subset4{a, b, c, d};
}

GapVector params_to_gaps(const InscribedParams& ip, const GridSpec& g) {
    validate(ip, g);
    return GapVector{ip.p, ip.q, ip.r, ip.t, ip.s - 1 - ip.t};
}

InscribedParams gaps_to_params(const GapVector& gv, const GridSpec& g) {
    validate(gv, g);
    // p+q+r = (n-2) - g4 - g5 = N - s, so the result is always valid.
    return InscribedParams{gv.g4 + gv.g5 + 1, gv.g4, gv.g1, gv.g2, gv.g3};
}

Triangle params_to_triangle(const InscribedParams& ip, const GridSpec& g) {
    validate(ip, g);
    const LatticePoint v1{ip.p + ip.t, ip.q};
    const LatticePoint v2{ip.p + ip.s - ip.t, ip.q + ip.t};
    const LatticePoint v3{ip.p, ip.q + ip.s - ip.t};
    // canonicalize re-checks equilateral and in-grid.
    return canonicalize(v1, v2, v3, g);
}

InscribedParams triangle_to_params(const Triangle& T, const GridSpec& g) {
    // Revalidate: a Triangle is only trusted relative to its own grid.
    Triangle canon = canonicalize(T.v[0], T.v[1], T.v[2], g);

    // Counterclockwise orientation.
    std::array<LatticePoint, 3> v = canon.v;
    if (cross_sign(v[1] - v[0], v[2] - v[0]) < 0) {
        std::swap(v[1], v[2]);
    }

    // Of the three directed edges, exactly one satisfies dy >= 0 and
    // dx + dy >= 1 (their dy values sum to zero).  Assert uniqueness.
    int hits = 0;
    LatticePoint start;
    Delta edge;
    for (int i = 0; i < 3; ++i) {
        const LatticePoint u = v[static_cast<std::size_t>(i)];
        const Delta e = v[static_cast<std::size_t>((i + 1) % 3)] - u;
        if (e.dy >= 0 && checked_add(e.dx, e.dy) >= 1) {
            ++hits;
            start = u;
            edge = e;
        }
    }
    if (hits != 1) {
        throw std::logic_error("triangle_to_params: " + std::to_string(hits) +
                               " qualifying edges instead of 1; circumscription is broken");
    }

    const std::int64_t t = edge.dy;
    const std::int64_t s = checked_add(edge.dx, checked_mul(2, edge.dy));
    const std::int64_t p = start.x - t;
    const std::int64_t q = start.y;
    const std::int64_t r = g.side() - s - p - q;
    const InscribedParams ip{s, t, p, q, r};
    validate(ip, g);  // guaranteed for in-grid equilateral input
    return ip;
}

Triangle encode(const Subset4& S, const GridSpec& g) {
    return params_to_triangle(gaps_to_params(subset_to_gaps(S, g), g), g);
}

Subset4 decode(const Triangle& T, const GridSpec& g) {
    return gaps_to_subset(params_to_gaps(triangle_to_params(T, g), g), g);
}

Count rank(const Subset4& S, const GridSpec& g) {
    validate(S, g);
    const unsigned __int128 sum = static_cast<unsigned __int128>(binomial(S.a - 1, 1)) +
                                  binomial(S.b - 1, 2) + binomial(S.c - 1, 3) +
                                  binomial(S.d - 1, 4);
    if (sum > std::numeric_limits<Count>::max()) {
        throw std::overflow_error("rank: value does not fit in 64 bits");
    }
    return static_cast<Count>(sum);
}

namespace {

// Largest m with C(m, k) <= target, searched in [k-1, hi].  C(k-1, k) = 0
// so the search always succeeds for target >= 0.
std::int64_t largest_binomial_le(Count target, std::int64_t k, std::int64_t hi) {
    std::int64_t lo = k - 1;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (binomial(mid, k) <= target) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

Subset4 unrank(Count k, const GridSpec& g) {
    const Count total = count_closed_form(g);
    if (k >= total) {
        invalid("unrank: index " + std::to_string(k) + " outside [0, " +
                std::to_string(total) + ") for n=" + std::to_string(g.n()));
    }
    // Greedy largest-binomial decomposition, highest element first.
    std::array<std::int64_t, 4> elems{};
    std::int64_t hi = g.n() + 1;
    Count rem = k;
    for (std::int64_t i = 4; i >= 1; --i) {
        const std::int64_t m = largest_binomial_le(rem, i, hi);
        elems[static_cast<std::size_t>(i - 1)] = m + 1;
        rem -= binomial(m, i);
        hi = m - 1;
    }
    const Subset4 S{elems[0], elems[1], elems[2], elems[3]};
    validate(S, g);
    return S;
}

}  // namespace trigrid
