// cli.cpp
#include "trigrid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigrid/bijection.hpp"
#include "trigrid/counting.hpp"
#include "trigrid/lattice.hpp"
#include "trigrid/render.hpp"
#include "trigrid/triangles.hpp"

namespace trigrid::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t parse_int(std::string_view tok, const std::string& what) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument(what + ": '" + std::string(tok) + "' is not an integer");
    }
    return v;
}

std::vector<std::int64_t> split_ints(const std::string& s, char sep, const std::string& what) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find(sep, start);
        const std::size_t stop = end == std::string::npos ? s.size() : end;
        out.push_back(parse_int(std::string_view(s).substr(start, stop - start), what));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

Subset4 parse_subset(const std::string& s) {
    const auto v = split_ints(s, ',', "--subset");
    if (v.size() != 4) {
        throw std::invalid_argument("--subset expects four comma-separated integers a,b,c,d");
    }
    return Subset4{v[0], v[1], v[2], v[3]};
}

// "x1,y1 x2,y2 x3,y3"
std::array<LatticePoint, 3> parse_triangle(const std::string& s) {
    std::istringstream in(s);
    std::vector<LatticePoint> pts;
    std::string tok;
    while (in >> tok) {
        const auto v = split_ints(tok, ',', "--triangle");
        if (v.size() != 2) {
            throw std::invalid_argument("--triangle vertex '" + tok + "' is not of the form x,y");
        }
        pts.push_back(LatticePoint{v[0], v[1]});
    }
    if (pts.size() != 3) {
        throw std::invalid_argument("--triangle expects three vertices \"x1,y1 x2,y2 x3,y3\"");
    }
    return {pts[0], pts[1], pts[2]};
}

// The one record schema shared by enumerate and the codec commands.
ordered_json record_json(const Subset4& S, const GridSpec& g) {
    const Triangle T = encode(S, g);
    const InscribedParams ip = triangle_to_params(T, g);
    ordered_json j;
    j["rank"] = rank(S, g);
    j["subset"] = {S.a, S.b, S.c, S.d};
    j["vertices"] = {{T.v[0].x, T.v[0].y}, {T.v[1].x, T.v[1].y}, {T.v[2].x, T.v[2].y}};
    j["params"] = ordered_json{{"s", ip.s}, {"t", ip.t}, {"p", ip.p}, {"q", ip.q}, {"r", ip.r}};
    return j;
}

constexpr const char* kCsvHeader = "rank,a,b,c,d,x1,y1,x2,y2,x3,y3,s,t,p,q,r";

std::string record_csv(const Subset4& S, const GridSpec& g) {
    const Triangle T = encode(S, g);
    const InscribedParams ip = triangle_to_params(T, g);
    std::ostringstream row;
    row << rank(S, g) << ',' << S.a << ',' << S.b << ',' << S.c << ',' << S.d;
    for (const LatticePoint& v : T.v) {
        row << ',' << v.x << ',' << v.y;
    }
    row << ',' << ip.s << ',' << ip.t << ',' << ip.p << ',' << ip.q << ',' << ip.r;
    return row.str();
}

int cmd_count(std::int64_t n, const std::string& method, std::ostream& out) {
    const GridSpec g(n);
    Count c = 0;
    if (method == "closed") {
        c = count_closed_form(g);
    } else if (method == "sum") {
        c = count_decomposition(g);
    } else {
        c = static_cast<Count>(enumerate_brute_force(g).size());
    }
    out << c << "\n";
    return 0;
}

int cmd_enumerate(std::int64_t n, const std::string& format, std::ostream& out) {
    const GridSpec g(n);
    const Count total = count_closed_form(g);
    if (format == "csv") {
        out << kCsvHeader << "\n";
    }
    for (Count k = 0; k < total; ++k) {
        const Subset4 S = unrank(k, g);
        if (format == "csv") {
            out << record_csv(S, g) << "\n";
        } else {
            out << record_json(S, g).dump() << "\n";
        }
    }
    return 0;
}

int cmd_verify(std::int64_t n, std::ostream& out) {
    const GridSpec g(n);
    bool all_ok = true;
    const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << name << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) {
            out << " (" << detail << ")";
        }
        out << "\n";
        all_ok = all_ok && ok;
    };

    const std::vector<Triangle> brute = enumerate_brute_force(g);

    // All subsets, and the triangles they encode to.
    std::vector<Subset4> subsets;
    for (std::int64_t a = 1; a <= n + 2; ++a)
        for (std::int64_t b = a + 1; b <= n + 2; ++b)
            for (std::int64_t c = b + 1; c <= n + 2; ++c)
                for (std::int64_t d = c + 1; d <= n + 2; ++d)
                    subsets.push_back(Subset4{a, b, c, d});

    bool trip_a = true;
    std::vector<Triangle> image;
    image.reserve(subsets.size());
    for (const Subset4& S : subsets) {
        const Triangle T = encode(S, g);
        image.push_back(T);
        trip_a = trip_a && decode(T, g) == S;
    }
    report("round_trip_subset", trip_a,
           "decode(encode(S)) = S over " + std::to_string(subsets.size()) + " subsets");

    bool trip_b = true;
    for (const Triangle& T : brute) {
        trip_b = trip_b && encode(decode(T, g), g) == T;
    }
    report("round_trip_triangle", trip_b,
           "encode(decode(T)) = T over " + std::to_string(brute.size()) + " triangles");

    std::sort(image.begin(), image.end());
    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    report("image_equality", injective && image == brute,
           "encode image vs brute-force enumeration");

    const Count closed = count_closed_form(g);
    const Count sum = count_decomposition(g);
    const Count brute_count = static_cast<Count>(brute.size());
    report("count_agreement", closed == sum && sum == brute_count,
           "closed=" + std::to_string(closed) + " sum=" + std::to_string(sum) +
               " brute=" + std::to_string(brute_count));

    out << (all_ok ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_render(std::int64_t n, const std::string& subset_str, const std::string& out_path,
               const std::string& format, bool show_circ, bool show_gaps, double scale,
               std::ostream& out, std::ostream& err) {
    FigureSpec spec{GridSpec(n), std::nullopt, show_circ, show_gaps,
                    format == "tikz" ? FigureFormat::kTikz : FigureFormat::kSvg, scale};
    if (!subset_str.empty()) {
        spec.subset = parse_subset(subset_str);
    }
    const std::string doc = emit(layout(spec), spec.format);
    if (out_path.empty()) {
        out << doc;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << doc;
    if (!file) {
        err << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equilateral triangles in the triangular grid: counting, "
                 "subset<->triangle codec, verification, figures"};
    app.require_subcommand(1);

    std::int64_t n = 0;
    std::string method = "closed";
    std::string format = "jsonl";
    std::string subset_str;
    std::string triangle_str;
    std::string out_path;
    std::string render_format = "svg";
    std::uint64_t rank_index = 0;
    bool show_circ = false;
    bool show_gaps = false;
    double scale = 40.0;

    const auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", n, "grid size: vertices per side")->required();
    };

    CLI::App* count = app.add_subcommand("count", "print the number of equilateral triangles");
    add_n(count);
    count->add_option("--method", method, "closed | sum | brute")
        ->check(CLI::IsMember({"closed", "sum", "brute"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all triangles ordered by rank");
    add_n(enumerate);
    enumerate->add_option("--format", format, "jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    CLI::App* encode_cmd = app.add_subcommand("encode", "subset -> triangle record");
    add_n(encode_cmd);
    encode_cmd->add_option("--subset", subset_str, "a,b,c,d")->required();

    CLI::App* decode_cmd = app.add_subcommand("decode", "triangle -> subset record");
    add_n(decode_cmd);
    decode_cmd->add_option("--triangle", triangle_str, "\"x1,y1 x2,y2 x3,y3\"")->required();

    CLI::App* rank_cmd = app.add_subcommand("rank", "subset -> colexicographic rank");
    add_n(rank_cmd);
    rank_cmd->add_option("--subset", subset_str, "a,b,c,d")->required();

    CLI::App* unrank_cmd = app.add_subcommand("unrank", "rank -> triangle record");
    add_n(unrank_cmd);
    unrank_cmd->add_option("--rank", rank_index, "index in [0, C(n+2,4))")->required();

    CLI::App* verify = app.add_subcommand("verify", "run bijection and counting checks");
    add_n(verify);

    CLI::App* render = app.add_subcommand("render", "write an SVG or TikZ figure");
    add_n(render);
    render->add_option("--subset", subset_str, "a,b,c,d to highlight");
    render->add_option("--out", out_path, "output file (stdout if omitted)");
    render->add_option("--format", render_format, "svg | tikz")
        ->check(CLI::IsMember({"svg", "tikz"}));
    render->add_flag("--show-circumscribed", show_circ, "dashed circumscribing triangle");
    render->add_flag("--show-gaps", show_gaps, "number-line strip with gap braces");
    render->add_option("--scale", scale, "screen units per lattice edge");

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes back-to-front
        app.parse(args);

        if (*count) return cmd_count(n, method, out);
        if (*enumerate) return cmd_enumerate(n, format, out);
        if (*encode_cmd) {
            out << record_json(parse_subset(subset_str), GridSpec(n)).dump() << "\n";
            return 0;
        }
        if (*decode_cmd) {
            const GridSpec g(n);
            const auto pts = parse_triangle(triangle_str);
            const Triangle T = canonicalize(pts[0], pts[1], pts[2], g);
            out << record_json(decode(T, g), g).dump() << "\n";
            return 0;
        }
        if (*rank_cmd) {
            out << rank(parse_subset(subset_str), GridSpec(n)) << "\n";
            return 0;
        }
        if (*unrank_cmd) {
            const GridSpec g(n);
            out << record_json(unrank(rank_index, g), g).dump() << "\n";
            return 0;
        }
        if (*verify) return cmd_verify(n, out);
        if (*render) {
            return cmd_render(n, subset_str, out_path, render_format, show_circ, show_gaps,
                              scale, out, err);
        }
        err << "error: no command given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace trigrid::cli
