#pragma once

// Weighted barycentric drawings. Every interior face carries a positive
// integer weight; vertex v gets coordinate i equal to the total weight of the
// faces in its region R_i(v), and the three exterior vertices are pinned to
// W*e_1, W*e_2, W*e_3 where W is the total weight. The plane drawing is the
// projection onto the first two coordinates.

#include <numeric>
#include <vector>

#include "basics.hpp"
#include "triangulation.hpp"
#include "wood.hpp"

namespace schnyder {

struct Drawing {
    Coord W = 0;
    std::vector<std::array<Coord, 3>> coords;
    bool operator==(const Drawing&) const = default;
};

inline std::vector<Coord> uniform_weights(const Triangulation& T, Coord s) {
    return std::vector<Coord>(T.face_count(), s);
}

inline Coord total_weight(const std::vector<Coord>& w) {
    return std::accumulate(w.begin(), w.end(), Coord{0});
}

inline void require_valid_weights(const Triangulation& T, const std::vector<Coord>& w) {
    if (static_cast<FaceId>(w.size()) != T.face_count())
        throw ValidationError("weights: need one weight per interior face");
    for (Coord x : w)
        if (x <= 0) throw ValidationError("weights: weights must be positive");
}

// Evaluates the region weights for every vertex by explicit flood fill; the
// closed-form flip updates are checked against this in the test-suite.
inline Drawing draw(const Triangulation& T, const SchnyderWood& S, const std::vector<Coord>& w) {
    require_valid_weights(T, w);
    const Coord W = total_weight(w);
    Drawing d;
    d.W = W;
    d.coords.assign(T.n(), {0, 0, 0});
    for (int i = 0; i < 3; ++i) d.coords[T.exterior()[i]][i] = W;

    RegionFlooder flood(T);
    std::array<std::vector<Vid>, 3> path;
    std::vector<FaceId> scratch;
    for (Vid v = 0; v < T.n(); ++v) {
        if (T.is_exterior_vertex(v)) continue;
        for (int i = 0; i < 3; ++i) detail::tree_path(T, S, v, colour_from_index(i), path[i]);
        Coord sum = 0;
        for (int i = 0; i < 3; ++i) {
            const auto& pa = path[(i + 1) % 3];
            const auto& pb = path[(i + 2) % 3];
            flood.begin();
            for (size_t k = 0; k + 1 < pa.size(); ++k) flood.block(T.edge_id(pa[k], pa[k + 1]));
            for (size_t k = 0; k + 1 < pb.size(); ++k) flood.block(T.edge_id(pb[k], pb[k + 1]));
            flood.block(T.edge_id(T.exterior()[(i + 1) % 3], T.exterior()[(i + 2) % 3]));
            scratch.clear();
            if (!flood.run(T.face_with(v, pa[1]), scratch))
                throw ValidationError("draw: region flood escaped (invalid wood)");
            Coord c = 0;
            for (FaceId f : scratch) c += w[f];
            d.coords[v][i] = c;
            sum += c;
        }
        if (sum != W)
            throw ValidationError("draw: region weights of vertex " + std::to_string(v) +
                                  " do not add up (invalid wood)");
    }
    return d;
}

inline std::vector<std::array<Coord, 2>> project(const Drawing& d) {
    std::vector<std::array<Coord, 2>> out(d.coords.size());
    for (size_t v = 0; v < d.coords.size(); ++v) out[v] = {d.coords[v][0], d.coords[v][1]};
    return out;
}

// Twice the signed area of face f in the projected drawing.
inline Coord doubled_area(const Triangulation& T, const Drawing& d, FaceId f) {
    const auto& t = T.faces()[f];
    const auto &p = d.coords[t[0]], &q = d.coords[t[1]], &r = d.coords[t[2]];
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

// A drawing is planar (a straight-line embedding) iff every stored face is
// strictly positively oriented in the projection.
inline bool is_planar(const Triangulation& T, const Drawing& d) {
    for (FaceId f = 0; f < T.face_count(); ++f)
        if (doubled_area(T, d, f) <= 0) return false;
    return true;
}

// All coordinates within [0, bound] (the drawing grid check).
inline bool on_grid(const Drawing& d, Coord bound) {
    for (const auto& c : d.coords)
        for (Coord x : c)
            if (x < 0 || x > bound) return false;
    return true;
}

}  // namespace schnyder
