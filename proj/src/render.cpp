// render.cpp
#include "trigrid/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace trigrid {

namespace {

// Fixed layout constants (screen units).
constexpr double kMargin = 24.0;
constexpr double kStripOffset = 42.0;   // number line below the grid bottom
constexpr double kStripDepth = 48.0;    // room for labels and braces
constexpr double kTickHalf = 3.0;
constexpr double kNumberDrop = 16.0;    // number label baseline below the line
constexpr double kBraceDrop = 23.0;
constexpr double kBraceArc = 5.0;
constexpr double kGapLabelDrop = 44.0;
const double kRow = std::sqrt(3.0) / 2.0;

// Fixed 4-decimal formatting, no scientific notation, no negative zero.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") {
        s = "0.0000";
    }
    return s;
}

std::string fmt(Vec2 v) {
    return fmt(v.x) + "," + fmt(v.y);
}

// One quadratic Bezier arc of a brace.
struct QuadArc {
    Vec2 p0, c, p1;
};

// A downward-opening curly brace from (x0, y) to (x1, y) with tip at
// (mid, y + 2*arc): two arcs and a flat run per half.
struct BraceShape {
    QuadArc left_out, left_in, right_out, right_in;
    Vec2 flat_l0, flat_l1, flat_r0, flat_r1;
    Vec2 tip;
};

BraceShape brace_shape(double x0, double x1, double y) {
    const double h = kBraceArc;
    const double mid = (x0 + x1) / 2.0;
    const double w = std::min(h, (x1 - x0) / 4.0);
    BraceShape b;
    b.left_out = {{x0, y}, {x0, y + h}, {x0 + w, y + h}};
    b.flat_l0 = {x0 + w, y + h};
    b.flat_l1 = {mid - w, y + h};
    b.left_in = {{mid - w, y + h}, {mid, y + h}, {mid, y + 2 * h}};
    b.right_out = {{x1, y}, {x1, y + h}, {x1 - w, y + h}};
    b.flat_r0 = {x1 - w, y + h};
    b.flat_r1 = {mid + w, y + h};
    b.right_in = {{mid + w, y + h}, {mid, y + h}, {mid, y + 2 * h}};
    b.tip = {mid, y + 2 * h};
    return b;
}

std::string hex_body(const std::string& color) {
    return color.size() > 1 && color[0] == '#' ? color.substr(1) : color;
}

}  // namespace

const StyleTable& default_style() {
    static const StyleTable style{};
    return style;
}

Scene layout(const FigureSpec& f) {
    if (!(f.scale > 0)) {
        throw std::invalid_argument("layout: scale must be positive");
    }
    if (f.subset) {
        validate(*f.subset, f.grid);
    }

    const std::int64_t n = f.grid.n();
    const double N = static_cast<double>(f.grid.side());
    const double grid_w = N * f.scale;
    const double grid_h = N * f.scale * kRow;

    // Lattice (x, y) -> screen, with y flipped so the apex points up.
    const auto embed = [&](double x, double y) {
        return Vec2{kMargin + (x + y / 2.0) * f.scale, kMargin + grid_h - y * kRow * f.scale};
    };

    Scene scene;
    const double strip_w = std::max(N, 1.0) * f.scale;
    scene.width = 2 * kMargin + (f.show_gap_strip ? std::max(grid_w, strip_w) : grid_w);
    scene.height = 2 * kMargin + grid_h + (f.show_gap_strip ? kStripOffset + kStripDepth : 0.0);

    for (const LatticePoint& p : grid_points(f.grid)) {
        scene.grid_dots.push_back(embed(static_cast<double>(p.x), static_cast<double>(p.y)));
    }

    if (f.subset) {
        const Triangle tri = encode(*f.subset, f.grid);
        scene.triangle = std::array<Vec2, 3>{};
        for (int i = 0; i < 3; ++i) {
            const LatticePoint& v = tri.v[static_cast<std::size_t>(i)];
            (*scene.triangle)[static_cast<std::size_t>(i)] =
                embed(static_cast<double>(v.x), static_cast<double>(v.y));
        }
        if (f.show_circumscribed) {
            const InscribedParams ip = triangle_to_params(tri, f.grid);
            const double p = static_cast<double>(ip.p);
            const double q = static_cast<double>(ip.q);
            const double s = static_cast<double>(ip.s);
            scene.circumscriber =
                std::array<Vec2, 3>{embed(p, q), embed(p + s, q), embed(p, q + s)};
        }
    }

    if (f.show_gap_strip) {
        NumberStrip strip;
        strip.baseline = kMargin + grid_h + kStripOffset;
        strip.step = strip_w / static_cast<double>(n + 1);
        for (std::int64_t j = 1; j <= n + 2; ++j) {
            strip.ticks.push_back(
                Vec2{kMargin + strip.step * static_cast<double>(j - 1), strip.baseline});
        }
        if (f.subset) {
            const Subset4& S = *f.subset;
            strip.marked = {S.a, S.b, S.c, S.d};
            const GapVector gv = subset_to_gaps(S, f.grid);
            const auto tick_x = [&](std::int64_t j) {
                return strip.ticks[static_cast<std::size_t>(j - 1)].x;
            };
            // Value ranges covered by each gap; empty gaps collapse to the
            // midpoint between their neighbors.
            const std::array<std::int64_t, 5> values{gv.g1, gv.g2, gv.g3, gv.g4, gv.g5};
            const std::array<std::int64_t, 5> lo{1, S.a + 1, S.b + 1, S.c + 1, S.d + 1};
            const std::array<std::int64_t, 5> hi{S.a - 1, S.b - 1, S.c - 1, S.d - 1, n + 2};
            const std::array<double, 5> collapse{
                tick_x(S.a) - strip.step / 2.0, (tick_x(S.a) + tick_x(S.b)) / 2.0,
                (tick_x(S.b) + tick_x(S.c)) / 2.0, (tick_x(S.c) + tick_x(S.d)) / 2.0,
                tick_x(S.d) + strip.step / 2.0};
            for (int i = 0; i < 5; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                GapMark gm;
                gm.index = i + 1;
                gm.value = values[ui];
                if (gm.value == 0) {
                    gm.x0 = gm.x1 = collapse[ui];
                } else {
                    gm.x0 = tick_x(lo[ui]) - 0.35 * strip.step;
                    gm.x1 = tick_x(hi[ui]) + 0.35 * strip.step;
                }
                strip.gaps.push_back(gm);
            }
        }
        scene.strip = std::move(strip);
    }
    return scene;
}

namespace {

std::string emit_svg(const Scene& scene, const StyleTable& st) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(scene.width) << "\" height=\"" << fmt(scene.height) << "\" viewBox=\"0 0 "
        << fmt(scene.width) << " " << fmt(scene.height) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(scene.width) << "\" height=\""
        << fmt(scene.height) << "\" fill=\"" << st.background << "\"/>\n";

    if (scene.circumscriber) {
        const auto& c = *scene.circumscriber;
        out << "<path d=\"M " << fmt(c[0]) << " L " << fmt(c[1]) << " L " << fmt(c[2])
            << " Z\" fill=\"none\" stroke=\"" << st.circumscriber
            << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    }
    if (scene.triangle) {
        const auto& t = *scene.triangle;
        out << "<path d=\"M " << fmt(t[0]) << " L " << fmt(t[1]) << " L " << fmt(t[2])
            << " Z\" fill=\"" << st.triangle_fill << "\" fill-opacity=\""
            << fmt(st.triangle_opacity) << "\" stroke=\"" << st.triangle_stroke
            << "\" stroke-width=\"2\"/>\n";
    }
    for (const Vec2& d : scene.grid_dots) {
        out << "<circle cx=\"" << fmt(d.x) << "\" cy=\"" << fmt(d.y) << "\" r=\""
            << fmt(st.grid_dot_radius) << "\" fill=\"" << st.grid_dot << "\"/>\n";
    }
    if (scene.triangle) {
        for (const Vec2& v : *scene.triangle) {
            out << "<circle cx=\"" << fmt(v.x) << "\" cy=\"" << fmt(v.y) << "\" r=\""
                << fmt(st.vertex_dot_radius) << "\" fill=\"" << st.triangle_stroke << "\"/>\n";
        }
    }

    if (scene.strip && !scene.strip->ticks.empty()) {
        const NumberStrip& strip = *scene.strip;
        const double half = strip.step / 2.0;
        const double x0 = strip.ticks.front().x - half;
        const double x1 = strip.ticks.back().x + half;
        out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(strip.baseline) << "\" x2=\""
            << fmt(x1) << "\" y2=\"" << fmt(strip.baseline) << "\" stroke=\"" << st.strip_ink
            << "\" stroke-width=\"1\"/>\n";
        std::int64_t value = 1;
        for (const Vec2& tick : strip.ticks) {
            out << "<line x1=\"" << fmt(tick.x) << "\" y1=\"" << fmt(tick.y - kTickHalf)
                << "\" x2=\"" << fmt(tick.x) << "\" y2=\"" << fmt(tick.y + kTickHalf)
                << "\" stroke=\"" << st.strip_ink << "\" stroke-width=\"1\"/>\n";
            out << "<text x=\"" << fmt(tick.x) << "\" y=\"" << fmt(tick.y + kNumberDrop)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                   "fill=\""
                << st.strip_ink << "\">" << value << "</text>\n";
            ++value;
        }
        for (std::int64_t m : strip.marked) {
            const Vec2& tick = strip.ticks[static_cast<std::size_t>(m - 1)];
            out << "<circle cx=\"" << fmt(tick.x) << "\" cy=\"" << fmt(tick.y) << "\" r=\""
                << fmt(st.mark_radius) << "\" fill=\"" << st.mark_fill << "\"/>\n";
        }
        for (const GapMark& gm : strip.gaps) {
            const double label_x = (gm.x0 + gm.x1) / 2.0;
            if (gm.value == 0) {
                out << "<line x1=\"" << fmt(gm.x0) << "\" y1=\""
                    << fmt(strip.baseline + kBraceDrop) << "\" x2=\"" << fmt(gm.x0)
                    << "\" y2=\"" << fmt(strip.baseline + kBraceDrop + 2 * kBraceArc)
                    << "\" stroke=\"" << st.strip_ink << "\" stroke-width=\"1\"/>\n";
            } else {
                const BraceShape b = brace_shape(gm.x0, gm.x1, strip.baseline + kBraceDrop);
                out << "<path d=\"M " << fmt(b.left_out.p0) << " Q " << fmt(b.left_out.c)
                    << " " << fmt(b.left_out.p1) << " L " << fmt(b.flat_l1) << " Q "
                    << fmt(b.left_in.c) << " " << fmt(b.left_in.p1) << " M "
                    << fmt(b.right_out.p0) << " Q " << fmt(b.right_out.c) << " "
                    << fmt(b.right_out.p1) << " L " << fmt(b.flat_r1) << " Q "
                    << fmt(b.right_in.c) << " " << fmt(b.right_in.p1)
                    << "\" fill=\"none\" stroke=\"" << st.strip_ink
                    << "\" stroke-width=\"1\"/>\n";
            }
            out << "<text x=\"" << fmt(label_x) << "\" y=\""
                << fmt(strip.baseline + kGapLabelDrop)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                   "fill=\""
                << st.strip_ink << "\">g" << gm.index << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

// Quadratic-to-cubic control points for TikZ's .. controls .. syntax.
std::string tikz_arc(const QuadArc& a) {
    const Vec2 c1{a.p0.x + 2.0 / 3.0 * (a.c.x - a.p0.x), a.p0.y + 2.0 / 3.0 * (a.c.y - a.p0.y)};
    const Vec2 c2{a.p1.x + 2.0 / 3.0 * (a.c.x - a.p1.x), a.p1.y + 2.0 / 3.0 * (a.c.y - a.p1.y)};
    return ".. controls (" + fmt(c1) + ") and (" + fmt(c2) + ") .. (" + fmt(a.p1) + ")";
}

std::string emit_tikz(const Scene& scene, const StyleTable& st) {
    std::ostringstream out;
    out << "\\definecolor{trigridgrid}{HTML}{" << hex_body(st.grid_dot) << "}\n";
    out << "\\definecolor{trigridfill}{HTML}{" << hex_body(st.triangle_fill) << "}\n";
    out << "\\definecolor{trigridedge}{HTML}{" << hex_body(st.triangle_stroke) << "}\n";
    out << "\\definecolor{trigridcirc}{HTML}{" << hex_body(st.circumscriber) << "}\n";
    out << "\\definecolor{trigridink}{HTML}{" << hex_body(st.strip_ink) << "}\n";
    // y=-1pt: scene coordinates are screen-oriented (y grows downward).
    out << "\\begin{tikzpicture}[x=1pt,y=-1pt]\n";
    out << "\\useasboundingbox (0,0) rectangle (" << fmt(scene.width) << ","
        << fmt(scene.height) << ");\n";

    if (scene.circumscriber) {
        const auto& c = *scene.circumscriber;
        out << "\\draw[trigridcirc,dashed,line width=1.5pt] (" << fmt(c[0]) << ") -- ("
            << fmt(c[1]) << ") -- (" << fmt(c[2]) << ") -- cycle;\n";
    }
    if (scene.triangle) {
        const auto& t = *scene.triangle;
        out << "\\filldraw[fill=trigridfill,fill opacity=" << fmt(st.triangle_opacity)
            << ",draw=trigridedge,line width=2.0pt] (" << fmt(t[0]) << ") -- (" << fmt(t[1])
            << ") -- (" << fmt(t[2]) << ") -- cycle;\n";
    }
    for (const Vec2& d : scene.grid_dots) {
        out << "\\fill[trigridgrid] (" << fmt(d) << ") circle [radius="
            << fmt(st.grid_dot_radius) << "];\n";
    }
    if (scene.triangle) {
        for (const Vec2& v : *scene.triangle) {
            out << "\\fill[trigridedge] (" << fmt(v) << ") circle [radius="
                << fmt(st.vertex_dot_radius) << "];\n";
        }
    }

    if (scene.strip && !scene.strip->ticks.empty()) {
        const NumberStrip& strip = *scene.strip;
        const double half = strip.step / 2.0;
        out << "\\draw[trigridink] (" << fmt(strip.ticks.front().x - half) << ","
            << fmt(strip.baseline) << ") -- (" << fmt(strip.ticks.back().x + half) << ","
            << fmt(strip.baseline) << ");\n";
        std::int64_t value = 1;
        for (const Vec2& tick : strip.ticks) {
            out << "\\draw[trigridink] (" << fmt(tick.x) << "," << fmt(tick.y - kTickHalf)
                << ") -- (" << fmt(tick.x) << "," << fmt(tick.y + kTickHalf) << ");\n";
            out << "\\node[text=trigridink,font=\\footnotesize,anchor=north] at ("
                << fmt(tick.x) << "," << fmt(tick.y + kTickHalf) << ") {" << value << "};\n";
            ++value;
        }
        for (std::int64_t m : strip.marked) {
            const Vec2& tick = strip.ticks[static_cast<std::size_t>(m - 1)];
            out << "\\fill[trigridedge] (" << fmt(tick) << ") circle [radius="
                << fmt(st.mark_radius) << "];\n";
        }
        for (const GapMark& gm : strip.gaps) {
            const double label_x = (gm.x0 + gm.x1) / 2.0;
            double label_y = strip.baseline + kBraceDrop + 2 * kBraceArc;
            if (gm.value == 0) {
                out << "\\draw[trigridink] (" << fmt(gm.x0) << ","
                    << fmt(strip.baseline + kBraceDrop) << ") -- (" << fmt(gm.x0) << ","
                    << fmt(label_y) << ");\n";
            } else {
                const BraceShape b = brace_shape(gm.x0, gm.x1, strip.baseline + kBraceDrop);
                out << "\\draw[trigridink] (" << fmt(b.left_out.p0) << ") "
                    << tikz_arc(b.left_out) << " -- (" << fmt(b.flat_l1) << ") "
                    << tikz_arc(b.left_in) << ";\n";
                out << "\\draw[trigridink] (" << fmt(b.right_out.p0) << ") "
                    << tikz_arc(b.right_out) << " -- (" << fmt(b.flat_r1) << ") "
                    << tikz_arc(b.right_in) << ";\n";
            }
            out << "\\node[text=trigridink,font=\\footnotesize,anchor=north] at ("
                << fmt(label_x) << "," << fmt(label_y) << ") {$g_" << gm.index << "$};\n";
        }
    }

    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace

std::string emit(const Scene& scene, FigureFormat format, const StyleTable& style) {
    return format == FigureFormat::kSvg ? emit_svg(scene, style) : emit_tikz(scene, style);
}

}  // namespace trigrid
