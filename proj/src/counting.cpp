// counting.cpp
#include "trigrid/counting.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace trigrid {

namespace {

using U128 = unsigned __int128;

constexpr U128 kU128Max = ~static_cast<U128>(0);

Count narrow_count(U128 v, const char* what) {
    if (v > std::numeric_limits<Count>::max()) {
        throw std::overflow_error(std::string(what) + ": count does not fit in 64 bits");
    }
    return static_cast<Count>(v);
}

}  // namespace

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("binomial: arguments must be nonnegative");
    }
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiplicative form; the running product after i steps is C(n-k+i, i),
    // so each division is exact.
    U128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const U128 factor = static_cast<U128>(n - k + i);
        if (result > kU128Max / factor) {
            throw std::overflow_error("binomial: 128-bit intermediate overflow");
        }
        result = result * factor / static_cast<U128>(i);
    }
    return narrow_count(result, "binomial");
}

Count count_closed_form(const GridSpec& g) {
    return binomial(g.n() + 2, 4);
}

Count count_decomposition(const GridSpec& g) {
    const std::int64_t N = g.side();
    U128 total = 0;
    for (std::int64_t s = 1; s <= N; ++s) {
        const U128 positions = static_cast<U128>(N - s + 1) * static_cast<U128>(N - s + 2) / 2;
        total += static_cast<U128>(s) * positions;
    }
    return narrow_count(total, "count_decomposition");
}

}  // namespace trigrid
