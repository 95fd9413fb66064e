#pragma once

// Minimal SVG rendering of drawings and morph plans. Barycentric coordinates
// are mapped affinely onto an equilateral frame (affine maps preserve the
// straight-line structure and face orientations), with the SVG y axis
// flipped so the third exterior vertex appears on top.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "basics.hpp"
#include "drawing.hpp"
#include "flips.hpp"
#include "morph.hpp"
#include "triangulation.hpp"

namespace schnyder {

namespace detail {

inline std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::array<double, 2> to_canvas(const std::array<double, 3>& bary, double W,
                                       double size) {
    double x = (bary[1] + bary[2] / 2.0) / W * size;
    double y = (std::sqrt(3.0) / 2.0) * bary[2] / W * size;
    return {x, size - y};  // flip y for SVG
}

}  // namespace detail

// Renders one frame. `positions` holds barycentric triples (interpolated
// frames are fractional); `highlight` marks a triangle's edges in red.
inline std::string svg_frame(const Triangulation& T,
                             const std::vector<std::array<double, 3>>& positions, double W,
                             std::optional<std::array<Vid, 3>> highlight = std::nullopt) {
    const double size = 720.0;
    const double pad = 24.0;
    std::vector<std::array<double, 2>> pt(positions.size());
    for (size_t v = 0; v < positions.size(); ++v)
        pt[v] = detail::to_canvas(positions[v], W, size);

    auto is_highlighted = [&](Vid u, Vid v) {
        if (!highlight) return false;
        const auto& h = *highlight;
        for (int i = 0; i < 3; ++i) {
            Vid a = h[i], b = h[(i + 1) % 3];
            if ((u == a && v == b) || (u == b && v == a)) return true;
        }
        return false;
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         detail::fmt6(-pad) + " " + detail::fmt6(-pad) + " " + detail::fmt6(size + 2 * pad) +
         " " + detail::fmt6(size + 2 * pad) + "\">\n";
    s += "  <rect x=\"" + detail::fmt6(-pad) + "\" y=\"" + detail::fmt6(-pad) + "\" width=\"" +
         detail::fmt6(size + 2 * pad) + "\" height=\"" + detail::fmt6(size + 2 * pad) +
         "\" fill=\"white\"/>\n";
    // Plain edges first so highlighted ones draw on top.
    for (int pass = 0; pass < 2; ++pass) {
        for (EdgeId e = 0; e < T.edge_count(); ++e) {
            auto [u, v] = T.edge(e);
            bool hi = is_highlighted(u, v);
            if (hi != (pass == 1)) continue;
            s += "  <line x1=\"" + detail::fmt6(pt[u][0]) + "\" y1=\"" + detail::fmt6(pt[u][1]) +
                 "\" x2=\"" + detail::fmt6(pt[v][0]) + "\" y2=\"" + detail::fmt6(pt[v][1]) +
                 "\" stroke=\"" + (hi ? "#cc2222" : "#333333") + "\" stroke-width=\"" +
                 (hi ? "3" : "1.5") + "\"/>\n";
        }
    }
    for (size_t v = 0; v < pt.size(); ++v) {
        bool ext = T.is_exterior_vertex(static_cast<Vid>(v));
        s += "  <circle cx=\"" + detail::fmt6(pt[v][0]) + "\" cy=\"" + detail::fmt6(pt[v][1]) +
             "\" r=\"" + (ext ? "6" : "4") + "\" fill=\"" + (ext ? "#2255cc" : "#111111") +
             "\"/>\n";
        s += "  <text x=\"" + detail::fmt6(pt[v][0] + 8) + "\" y=\"" +
             detail::fmt6(pt[v][1] - 8) + "\" font-size=\"16\" font-family=\"sans-serif\">" +
             std::to_string(v) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

inline std::string svg_of_drawing(const Triangulation& T, const Drawing& d,
                                  std::optional<std::array<Vid, 3>> highlight = std::nullopt) {
    std::vector<std::array<double, 3>> pos(d.coords.size());
    for (size_t v = 0; v < d.coords.size(); ++v)
        for (int i = 0; i < 3; ++i) pos[v][i] = static_cast<double>(d.coords[v][i]);
    return svg_frame(T, pos, static_cast<double>(d.W), highlight);
}

// Writes `samples` interpolated frames per step (plus the final pose) as
// frame_0000.svg, frame_0001.svg, ... inside `dir`. Returns the frame count.
inline int write_morph_svgs(const Triangulation& T, const MorphPlan& plan,
                            const std::string& dir, int samples) {
    if (samples < 1) throw ValidationError("svg: need at least one sample per step");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir);
    int frame = 0;
    auto emit = [&](const std::vector<std::array<double, 3>>& pos,
                    std::optional<std::array<Vid, 3>> hi) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04d.svg", frame++);
        std::ofstream out(std::filesystem::path(dir) / name);
        if (!out) throw IoError(std::string("cannot write ") + name);
        out << svg_frame(T, pos, static_cast<double>(plan.W), hi);
    };
    std::vector<std::array<double, 3>> pos(T.n());
    for (size_t si = 0; si < plan.steps.size(); ++si) {
        const MorphStep& st = plan.steps[si];
        auto hi = st.event ? std::optional(st.event->tri) : std::nullopt;
        for (int s = 0; s < samples; ++s) {
            double t = static_cast<double>(s) / samples;
            for (Vid v = 0; v < T.n(); ++v)
                for (int i = 0; i < 3; ++i)
                    pos[v][i] = static_cast<double>(st.from.coords[v][i]) +
                                t * static_cast<double>(st.to.coords[v][i] -
                                                        st.from.coords[v][i]);
            emit(pos, hi);
        }
        if (si + 1 == plan.steps.size()) {
            for (Vid v = 0; v < T.n(); ++v)
                for (int i = 0; i < 3; ++i)
                    pos[v][i] = static_cast<double>(st.to.coords[v][i]);
            emit(pos, std::nullopt);
        }
    }
    return frame;
}

}  // namespace schnyder
