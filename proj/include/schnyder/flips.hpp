#pragma once

// Triangle flips on Schnyder woods and their closed-form effect on weighted
// drawings.
//
// A triangle (x, y, z) is *flippable* when its edges are oriented cyclically
// with colours  x->y : 1,  y->z : 3,  z->x : 2.  Flipping reverses the three
// cycle edges (colour i becomes i-1); if the triangle is separating, the
// edges strictly inside it keep their orientation and change colour from i
// to i+1. A *flop* is the exact inverse; the same triple (x, y, z) is
// floppable when the wood shows  y->x : 3,  z->y : 2,  x->z : 1.
//
// The coordinate update is local: with d_i the weight of the region bounded
// by edge yz/xy/xz and the two colour-i paths of its endpoints, and wf the
// total weight inside the triangle, the descendants of x in tree 1 move by
// (0, -(d1+wf), +(d1+wf)), those of z in tree 2 by (+(d2+wf), 0, -(d2+wf)),
// those of y in tree 3 by (-(d3+wf), +(d3+wf), 0); vertices strictly inside a
// separating triangle are re-based through the drawing of the restricted
// triangulation.

#include <algorithm>
#include <optional>
#include <vector>

#include "basics.hpp"
#include "drawing.hpp"
#include "triangulation.hpp"
#include "wood.hpp"

namespace schnyder {

enum class TriangleKind { Facial, Separating };
enum class FlipDirection { Flip, Flop };

struct FlipEvent {
    std::array<Vid, 3> tri{};  // canonical (x, y, z) as above
    FlipDirection dir = FlipDirection::Flip;
    TriangleKind kind = TriangleKind::Facial;
    bool operator==(const FlipEvent&) const = default;
};

namespace detail {

inline std::array<Vid, 3> sorted_tri(const std::array<Vid, 3>& t) {
    std::array<Vid, 3> s = t;
    std::sort(s.begin(), s.end());
    return s;
}

// True if the wood shows the flippable pattern on (x, y, z).
inline bool matches_flip(const SchnyderWood& S, Vid x, Vid y, Vid z) {
    return S.parent(x, Colour::C1) == y && S.parent(y, Colour::C3) == z &&
           S.parent(z, Colour::C2) == x;
}

// True if the wood shows the floppable pattern on (x, y, z).
inline bool matches_flop(const SchnyderWood& S, Vid x, Vid y, Vid z) {
    return S.parent(x, Colour::C1) == z && S.parent(z, Colour::C2) == y &&
           S.parent(y, Colour::C3) == x;
}

inline TriangleKind triangle_kind(const Triangulation& T, Vid x, Vid y, Vid z) {
    // The triangle bounds a face iff the face traversing x->z has apex y.
    return T.apex(x, z) == y ? TriangleKind::Facial : TriangleKind::Separating;
}

}  // namespace detail

// All flippable triangles, sorted by ascending vertex triple.
inline std::vector<FlipEvent> flippable_triangles(const Triangulation& T,
                                                  const SchnyderWood& S) {
    std::vector<FlipEvent> out;
    for (const auto& a : S.arcs()) {
        if (!a.present() || a.colour != Colour::C1) continue;
        Vid x = a.tail, y = a.head;
        Vid z = S.parent(y, Colour::C3);
        if (z < 0 || S.parent(z, Colour::C2) != x) continue;
        out.push_back({{x, y, z}, FlipDirection::Flip, detail::triangle_kind(T, x, y, z)});
    }
    std::sort(out.begin(), out.end(), [](const FlipEvent& a, const FlipEvent& b) {
        return detail::sorted_tri(a.tri) < detail::sorted_tri(b.tri);
    });
    return out;
}

// All floppable triangles, sorted by ascending vertex triple.
inline std::vector<FlipEvent> floppable_triangles(const Triangulation& T,
                                                  const SchnyderWood& S) {
    std::vector<FlipEvent> out;
    for (const auto& a : S.arcs()) {
        if (!a.present() || a.colour != Colour::C1) continue;
        Vid x = a.tail, z = a.head;
        Vid y = S.parent(z, Colour::C2);
        if (y < 0 || S.parent(y, Colour::C3) != x) continue;
        out.push_back({{x, y, z}, FlipDirection::Flop, detail::triangle_kind(T, x, y, z)});
    }
    std::sort(out.begin(), out.end(), [](const FlipEvent& a, const FlipEvent& b) {
        return detail::sorted_tri(a.tri) < detail::sorted_tri(b.tri);
    });
    return out;
}

// Applies the event to the wood (coordinates are not involved).
inline SchnyderWood apply_flip(const Triangulation& T, const SchnyderWood& S,
                               const FlipEvent& ev) {
    auto [x, y, z] = ev.tri;
    std::vector<WoodArc> arcs = S.arcs();
    EdgeId exy = T.edge_id(x, y), eyz = T.edge_id(y, z), ezx = T.edge_id(z, x);
    if (ev.dir == FlipDirection::Flip) {
        if (!detail::matches_flip(S, x, y, z))
            throw ValidationError("apply_flip: triangle is not flippable in this wood");
        arcs[exy] = {y, x, Colour::C3};
        arcs[eyz] = {z, y, Colour::C2};
        arcs[ezx] = {x, z, Colour::C1};
    } else {
        if (!detail::matches_flop(S, x, y, z))
            throw ValidationError("apply_flip: triangle is not floppable in this wood");
        arcs[exy] = {x, y, Colour::C1};
        arcs[eyz] = {y, z, Colour::C3};
        arcs[ezx] = {z, x, Colour::C2};
    }
    if (ev.kind == TriangleKind::Separating) {
        // Recolour the edges strictly inside the triangle, orientation kept.
        std::vector<FaceId> inside = detail::faces_inside(T, {y, x, z});
        std::vector<char> seen(T.edge_count(), 0);
        seen[exy] = seen[eyz] = seen[ezx] = 1;
        for (FaceId f : inside)
            for (EdgeId e : T.face_edges(f)) {
                if (seen[e]) continue;
                seen[e] = 1;
                arcs[e].colour = ev.dir == FlipDirection::Flip ? next_colour(arcs[e].colour)
                                                               : prev_colour(arcs[e].colour);
            }
    }
    return SchnyderWood::assemble(T, std::move(arcs));
}

// The three side regions and the triangle interior of a flip, with weights.
// The wood must show the flippable pattern on ev.tri (for flop events,
// compute this in the post-flop wood).
struct FlipRegions {
    std::array<std::vector<FaceId>, 3> faces;  // regions at edges yz, xy, xz
    std::array<Coord, 3> delta{};              // their weights d1, d2, d3
    std::vector<FaceId> inside;                // faces enclosed by the triangle
    Coord inside_weight = 0;                   // wf
};

inline FlipRegions region_weights(const Triangulation& T, const SchnyderWood& S,
                                  const std::vector<Coord>& w, const FlipEvent& ev) {
    require_valid_weights(T, w);
    auto [x, y, z] = ev.tri;
    if (!detail::matches_flip(S, x, y, z))
        throw ValidationError("region_weights: triangle is not flippable in this wood");
    FlipRegions out;
    RegionFlooder flood(T);
    std::vector<Vid> pa, pb;
    // (colour, edge endpoints, seed direction) per region.
    struct Side {
        Colour c;
        Vid u, v;     // region hangs off edge u-v
        Vid su, sv;   // seed = face traversing su->sv (away from the triangle)
    };
    const Side sides[3] = {
        {Colour::C1, y, z, y, z},
        {Colour::C2, x, y, x, y},
        {Colour::C3, x, z, z, x},
    };
    for (int i = 0; i < 3; ++i) {
        const Side& s = sides[i];
        detail::tree_path(T, S, s.u, s.c, pa);
        detail::tree_path(T, S, s.v, s.c, pb);
        flood.begin();
        for (size_t k = 0; k + 1 < pa.size(); ++k) flood.block(T.edge_id(pa[k], pa[k + 1]));
        for (size_t k = 0; k + 1 < pb.size(); ++k) flood.block(T.edge_id(pb[k], pb[k + 1]));
        flood.block(T.edge_id(s.u, s.v));
        if (!flood.run(T.face_with(s.su, s.sv), out.faces[i]))
            throw ValidationError("region_weights: side region escaped (invalid wood)");
        std::sort(out.faces[i].begin(), out.faces[i].end());
        for (FaceId f : out.faces[i]) out.delta[i] += w[f];
    }
    out.inside = detail::faces_inside(T, {y, x, z});
    for (FaceId f : out.inside) out.inside_weight += w[f];
    return out;
}

// Wood of the restricted triangulation under the sub ids of `sub`, which must
// come from restrict_to_triangle(T, {y, x, z}) of a flippable triangle:
// interior arcs keep orientation and colour.
inline SchnyderWood restrict_wood(const Triangulation& T, const SchnyderWood& S,
                                  const SubTriangulation& sub) {
    std::vector<WoodArc> arcs(sub.tri.edge_count());
    for (EdgeId e = 0; e < sub.tri.edge_count(); ++e) {
        if (sub.tri.is_exterior_edge(e)) continue;
        auto [u, v] = sub.tri.edge(e);
        const WoodArc& a = S.arc(T.edge_id(sub.to_parent[u], sub.to_parent[v]));
        arcs[e] = {sub.from_parent[a.tail], sub.from_parent[a.head], a.colour};
    }
    return SchnyderWood::assemble(sub.tri, std::move(arcs));
}

struct FlipOutcome {
    SchnyderWood wood;
    Drawing drawing;
};

// Executes the event on wood and drawing together. The drawing must be the
// exact weighted drawing of (T, S, w); the result is the exact weighted
// drawing of (T, new wood, w), obtained by the closed-form update.
inline FlipOutcome perform_flip(const Triangulation& T, const SchnyderWood& S,
                                const std::vector<Coord>& w, const Drawing& d,
                                const FlipEvent& ev) {
    auto [x, y, z] = ev.tri;
    SchnyderWood after = apply_flip(T, S, ev);
    // Regions and descendant classes live in the flippable configuration:
    // the current wood for flips, the resulting wood for flops.
    const SchnyderWood& base = ev.dir == FlipDirection::Flip ? S : after;
    FlipRegions reg = region_weights(T, base, w, ev);
    const Coord m1 = reg.delta[0] + reg.inside_weight;
    const Coord m2 = reg.delta[1] + reg.inside_weight;
    const Coord m3 = reg.delta[2] + reg.inside_weight;
    const Coord sgn = ev.dir == FlipDirection::Flip ? 1 : -1;

    std::vector<char> in_inside(T.n(), 0);
    std::vector<Vid> inside_vertices;
    if (ev.kind == TriangleKind::Separating) {
        for (FaceId f : reg.inside)
            for (Vid v : T.faces()[f])
                if (!in_inside[v]) {
                    in_inside[v] = 1;
                    inside_vertices.push_back(v);
                }
        in_inside[x] = in_inside[y] = in_inside[z] = 0;
        std::erase_if(inside_vertices, [&](Vid v) { return v == x || v == y || v == z; });
    }

    Drawing out = d;
    auto shift = [&](Vid root, Colour c, int add, int sub, Coord amount) {
        for (Vid v : descendants(T, base, root, c)) {
            if (in_inside[v]) continue;
            out.coords[v][add] += sgn * amount;
            out.coords[v][sub] -= sgn * amount;
        }
    };
    shift(x, Colour::C1, 2, 1, m1);
    shift(z, Colour::C2, 0, 2, m2);
    shift(y, Colour::C3, 1, 0, m3);

    if (ev.kind == TriangleKind::Separating) {
        SubTriangulation sub = restrict_to_triangle(T, {y, x, z});
        SchnyderWood sub_wood = restrict_wood(T, base, sub);
        std::vector<Coord> sub_w(sub.tri.face_count());
        for (FaceId f = 0; f < sub.tri.face_count(); ++f)
            sub_w[f] = w[sub.face_to_parent[f]];
        Drawing beta = draw(sub.tri, sub_wood, sub_w);
        // Coordinate anchors: x's first, z's second and y's third coordinate
        // are invariant under the event, so they can be read off `d`.
        const Coord x1 = d.coords[x][0], z2 = d.coords[z][1], y3 = d.coords[y][2];
        for (Vid v : inside_vertices) {
            const auto& b = beta.coords[sub.from_parent[v]];
            if (ev.dir == FlipDirection::Flip)
                out.coords[v] = {x1 + reg.delta[1] + b[2], z2 + reg.delta[2] + b[0],
                                 y3 + reg.delta[0] + b[1]};
            else
                out.coords[v] = {x1 + reg.delta[2] + b[0], z2 + reg.delta[0] + b[1],
                                 y3 + reg.delta[1] + b[2]};
        }
    }
    return {std::move(after), std::move(out)};
}

// Kind-checked wrappers around perform_flip for callers that already know
// whether the event's triangle is facial or separating.
inline Drawing predict_coords_facial(const Triangulation& T, const SchnyderWood& S,
                                     const std::vector<Coord>& w, const Drawing& d,
                                     const FlipEvent& ev) {
    if (ev.kind != TriangleKind::Facial)
        throw ValidationError("predict_coords_facial: event is separating");
    return perform_flip(T, S, w, d, ev).drawing;
}

inline Drawing predict_coords_separating(const Triangulation& T, const SchnyderWood& S,
                                         const std::vector<Coord>& w, const Drawing& d,
                                         const FlipEvent& ev) {
    if (ev.kind != TriangleKind::Separating)
        throw ValidationError("predict_coords_separating: event is facial");
    return perform_flip(T, S, w, d, ev).drawing;
}

// ---------------------------------------------------------------------------
// Flip sequences.

enum class FlipPolicy { Lexicographic, Random };

struct MaximalSequence {
    std::vector<FlipEvent> events;
    SchnyderWood sink;
};

// Applies flips until none is available. With FlipPolicy::Lexicographic the
// smallest sorted triple is taken each time (deterministic); with Random the
// choice is uniform from `rng`.
inline MaximalSequence maximal_flip_sequence(const Triangulation& T, SchnyderWood S,
                                             FlipPolicy policy = FlipPolicy::Lexicographic,
                                             Rng* rng = nullptr) {
    MaximalSequence out;
    const std::size_t guard = 100 * static_cast<std::size_t>(T.n()) * T.n() + 1000;
    while (true) {
        std::vector<FlipEvent> cands = flippable_triangles(T, S);
        if (cands.empty()) break;
        const FlipEvent& ev = policy == FlipPolicy::Random && rng
                                  ? cands[rng->below(cands.size())]
                                  : cands.front();
        S = apply_flip(T, S, ev);
        out.events.push_back(ev);
        if (out.events.size() > guard)
            throw ValidationError("maximal_flip_sequence: runaway sequence");
    }
    out.sink = std::move(S);
    return out;
}

// Flip sequence transforming wood `from` into wood `to`: flips of `from`
// down to the common sink, then the flips of `to` undone as flops.
inline std::vector<FlipEvent> flip_sequence(const Triangulation& T, const SchnyderWood& from,
                                            const SchnyderWood& to) {
    MaximalSequence a = maximal_flip_sequence(T, from);
    MaximalSequence b = maximal_flip_sequence(T, to);
    if (!(a.sink == b.sink))
        throw ValidationError("flip_sequence: maximal sequences reached different sinks");
    std::vector<FlipEvent> out = std::move(a.events);
    for (auto it = b.events.rbegin(); it != b.events.rend(); ++it) {
        FlipEvent ev = *it;
        ev.dir = FlipDirection::Flop;
        out.push_back(ev);
    }
    return out;
}

// Sum over interior faces of their dual-graph distance to the outer face
// (the flip-distance bound for 4-connected instances).
inline long long dual_distance_sum(const Triangulation& T) {
    std::vector<int> dist(T.face_count(), -1);
    std::vector<FaceId> queue;
    for (FaceId f = 0; f < T.face_count(); ++f)
        for (FaceId g : T.face_neighbours(f))
            if (g == kOuterFace && dist[f] < 0) {
                dist[f] = 1;
                queue.push_back(f);
            }
    for (size_t k = 0; k < queue.size(); ++k) {
        FaceId f = queue[k];
        for (FaceId g : T.face_neighbours(f))
            if (g != kOuterFace && dist[g] < 0) {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
    }
    long long sum = 0;
    for (FaceId f = 0; f < T.face_count(); ++f) sum += dist[f];
    return sum;
}

inline bool is_four_connected(const Triangulation& T) {
    return T.separating_triangles().empty();
}

}  // namespace schnyder
