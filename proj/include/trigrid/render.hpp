// render.hpp - proof-without-words figures: grid, highlighted triangle,
// circumscriber, number-line strip with gap braces
//
// layout() turns a FigureSpec into a Scene of screen-space positions
// (Cartesian embedding, y flipped so the grid apex points up on screen).
// emit() serializes a Scene to SVG 1.1 or a standalone TikZ picture.
// Output is byte-stable: fixed element order, fixed 4-decimal coordinate
// formatting, nothing time- or locale-dependent.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/bijection.hpp"
#include "trigrid/lattice.hpp"

namespace trigrid {

enum class FigureFormat { kSvg, kTikz };

struct FigureSpec {
    GridSpec grid;
    std::optional<Subset4> subset;
    bool show_circumscribed = false;
    bool show_gap_strip = false;
    FigureFormat format = FigureFormat::kSvg;
    double scale = 40.0;  // screen units per lattice edge
};

// Fixed color roles; the single point of change for figure styling.
struct StyleTable {
    std::string background = "#ffffff";
    std::string grid_dot = "#8a8a8a";
    std::string triangle_fill = "#f4a261";
    std::string triangle_stroke = "#e76f51";
    std::string circumscriber = "#2a6f97";
    std::string strip_ink = "#333333";
    std::string mark_fill = "#e76f51";
    double grid_dot_radius = 2.5;
    double vertex_dot_radius = 4.0;
    double mark_radius = 3.5;
    double triangle_opacity = 0.45;
};

const StyleTable& default_style();

struct Vec2 {
    double x = 0;
    double y = 0;
};

// One of the five gaps, rendered as a labeled brace under the number line.
// x0 == x1 for an empty gap (drawn as a tick instead of a brace).
struct GapMark {
    int index = 0;         // 1..5
    std::int64_t value = 0;
    double x0 = 0;
    double x1 = 0;
};

struct NumberStrip {
    double baseline = 0;               // y of the number line
    double step = 0;                   // spacing between adjacent numbers
    std::vector<Vec2> ticks;           // positions of 1 .. n+2, in order
    std::vector<std::int64_t> marked;  // subset elements, ascending; may be empty
    std::vector<GapMark> gaps;         // five entries when a subset is present
};

struct Scene {
    double width = 0;
    double height = 0;
    std::vector<Vec2> grid_dots;                       // grid_points order
    std::optional<std::array<Vec2, 3>> triangle;       // canonical vertex order
    std::optional<std::array<Vec2, 3>> circumscriber;  // (p,q), (p+s,q), (p,q+s)
    std::optional<NumberStrip> strip;
};

Scene layout(const FigureSpec& f);

std::string emit(const Scene& scene, FigureFormat format,
                 const StyleTable& style = default_style());

}  // namespace trigrid
