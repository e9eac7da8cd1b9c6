// errors.hpp - exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace trigrid {

// Input points do not form an equilateral triangle.
struct not_equilateral_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A point lies outside the grid of the given GridSpec.
struct out_of_grid_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace trigrid
