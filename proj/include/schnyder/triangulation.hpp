#pragma once

// Combinatorial planar triangulations with a fixed outer triangle.
//
// Storage convention: only interior faces are stored, each as a vertex triple
// whose order is positive (counter-clockwise) in the drawing frame used by
// this library, i.e. the frame of the first two barycentric coordinates.
// The exterior triple (a1, a2, a3) is stored in the opposite (clockwise)
// order, so the reversed triple (a3, a2, a1) tiles the outer face: every
// directed edge of the graph is traversed by exactly one face of the set
// {interior faces} + {(a3, a2, a1)}. That property both validates the input
// as an oriented combinatorial sphere and yields the rotation system.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "basics.hpp"

namespace schnyder {

enum class TriangulationDefect {
    NonTriangularFace,
    EulerViolation,
    OrientationInconsistent,
    DisconnectedInput,
};

inline const char* to_string(TriangulationDefect d) {
    switch (d) {
        case TriangulationDefect::NonTriangularFace: return "NonTriangularFace";
        case TriangulationDefect::EulerViolation: return "EulerViolation";
        case TriangulationDefect::OrientationInconsistent: return "OrientationInconsistent";
        case TriangulationDefect::DisconnectedInput: return "DisconnectedInput";
    }
    return "?";
}

class TriangulationError : public ValidationError {
public:
    TriangulationError(TriangulationDefect defect, const std::string& what)
        : ValidationError(std::string(to_string(defect)) + ": " + what), defect_(defect) {}
    TriangulationDefect defect() const { return defect_; }

private:
    TriangulationDefect defect_;
};

class Triangulation {
public:
    // Validating factory; throws TriangulationError on malformed input.
    static Triangulation build(Vid n, std::array<Vid, 3> exterior,
                               std::vector<std::array<Vid, 3>> faces);

    Vid n() const { return n_; }
    const std::array<Vid, 3>& exterior() const { return exterior_; }
    const std::vector<std::array<Vid, 3>>& faces() const { return faces_; }
    FaceId face_count() const { return static_cast<FaceId>(faces_.size()); }

    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::pair<Vid, Vid>& edge(EdgeId e) const { return edges_[e]; }
    EdgeId edge_id(Vid u, Vid v) const;
    bool adjacent(Vid u, Vid v) const { return find_edge(u, v).has_value(); }

    bool is_exterior_vertex(Vid v) const { return exterior_role_[v] >= 0; }
    // 0,1,2 for a1,a2,a3; -1 for interior vertices.
    int exterior_role(Vid v) const { return exterior_role_[v]; }
    bool is_exterior_edge(EdgeId e) const { return exterior_edge_[e]; }

    int degree(Vid v) const { return static_cast<int>(rot_[v].size()); }
    // Neighbours of v in rotation order (the clockwise order of the tree
    // conditions; counter-clockwise in the drawing frame).
    const std::vector<Vid>& neighbours(Vid v) const { return rot_[v]; }
    int rotation_position(Vid u, Vid v) const;  // index of v in neighbours(u)

    // Face traversing the directed edge u->v, or kOuterFace if that side is
    // the outer face. Throws if the edge does not exist.
    FaceId face_with(Vid u, Vid v) const;
    // Third vertex of face_with(u, v); valid also when that face is outer.
    Vid apex(Vid u, Vid v) const;

    const std::array<EdgeId, 3>& face_edges(FaceId f) const { return face_edges_[f]; }
    // Neighbour across face_edges(f)[k]; may be kOuterFace.
    const std::array<FaceId, 3>& face_neighbours(FaceId f) const { return face_nbrs_[f]; }

    // All separating triangles (3-cycles that are not face boundaries and not
    // the exterior), as ascending vertex triples in deterministic order.
    std::vector<std::array<Vid, 3>> separating_triangles() const;

private:
    Triangulation() = default;

    static std::uint64_t key(Vid u, Vid v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }
    std::optional<EdgeId> find_edge(Vid u, Vid v) const;

    Vid n_ = 0;
    std::array<Vid, 3> exterior_{};
    std::vector<std::array<Vid, 3>> faces_;

    std::vector<std::pair<Vid, Vid>> edges_;           // undirected, u < v
    std::unordered_map<std::uint64_t, EdgeId> edge_id_;  // key(min,max) -> id
    std::vector<char> exterior_edge_;

    struct DirInfo {
        FaceId face;  // face traversing u->v (kOuterFace for the outer side)
        Vid apex;     // third vertex of that face
    };
    std::unordered_map<std::uint64_t, DirInfo> dir_;  // key(u,v) -> info

    std::vector<std::vector<Vid>> rot_;                 // rotation order
    std::unordered_map<std::uint64_t, std::int32_t> rot_pos_;
    std::vector<int> exterior_role_;

    std::vector<std::array<EdgeId, 3>> face_edges_;
    std::vector<std::array<FaceId, 3>> face_nbrs_;
};

inline std::optional<EdgeId> Triangulation::find_edge(Vid u, Vid v) const {
    auto it = edge_id_.find(key(std::min(u, v), std::max(u, v)));
    if (it == edge_id_.end()) return std::nullopt;
    return it->second;
}

inline EdgeId Triangulation::edge_id(Vid u, Vid v) const {
    auto e = find_edge(u, v);
    if (!e) throw ValidationError("edge_id: no such edge");
    return *e;
}

inline int Triangulation::rotation_position(Vid u, Vid v) const {
    auto it = rot_pos_.find(key(u, v));
    if (it == rot_pos_.end()) throw ValidationError("rotation_position: no such edge");
    return it->second;
}

inline FaceId Triangulation::face_with(Vid u, Vid v) const {
    auto it = dir_.find(key(u, v));
    if (it == dir_.end()) throw ValidationError("face_with: no such directed edge");
    return it->second.face;
}

inline Vid Triangulation::apex(Vid u, Vid v) const {
    auto it = dir_.find(key(u, v));
    if (it == dir_.end()) throw ValidationError("apex: no such directed edge");
    return it->second.apex;
}

inline Triangulation Triangulation::build(Vid n, std::array<Vid, 3> exterior,
                                          std::vector<std::array<Vid, 3>> faces) {
    Triangulation T;
    T.n_ = n;
    T.exterior_ = exterior;
    T.faces_ = std::move(faces);

    if (n < 4)
        throw TriangulationError(TriangulationDefect::EulerViolation,
                                 "need at least 4 vertices, got " + std::to_string(n));
    auto check_vid = [&](Vid v) {
        if (v < 0 || v >= n)
            throw TriangulationError(TriangulationDefect::NonTriangularFace,
                                     "vertex id out of range: " + std::to_string(v));
    };
    for (Vid a : exterior) check_vid(a);
    if (exterior[0] == exterior[1] || exterior[1] == exterior[2] || exterior[0] == exterior[2])
        throw TriangulationError(TriangulationDefect::NonTriangularFace,
                                 "exterior vertices not distinct");
    if (static_cast<FaceId>(T.faces_.size()) != 2 * n - 5)
        throw TriangulationError(
            TriangulationDefect::EulerViolation,
            "expected " + std::to_string(2 * n - 5) + " interior faces, got " +
                std::to_string(T.faces_.size()));
    for (const auto& f : T.faces_) {
        for (Vid v : f) check_vid(v);
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw TriangulationError(TriangulationDefect::NonTriangularFace,
                                     "face with repeated vertex");
    }

    // Directed-edge map over interior faces plus the reversed exterior triple.
    auto add_dir = [&](Vid u, Vid v, Vid w, FaceId f) {
        auto [it, fresh] = T.dir_.try_emplace(key(u, v), DirInfo{f, w});
        if (!fresh)
            throw TriangulationError(TriangulationDefect::OrientationInconsistent,
                                     "directed edge " + std::to_string(u) + "->" +
                                         std::to_string(v) + " traversed twice");
    };
    for (FaceId f = 0; f < T.face_count(); ++f) {
        const auto& t = T.faces_[f];
        add_dir(t[0], t[1], t[2], f);
        add_dir(t[1], t[2], t[0], f);
        add_dir(t[2], t[0], t[1], f);
    }
    add_dir(exterior[2], exterior[1], exterior[0], kOuterFace);
    add_dir(exterior[1], exterior[0], exterior[2], kOuterFace);
    add_dir(exterior[0], exterior[2], exterior[1], kOuterFace);

    // Every directed edge needs its reverse.
    for (const auto& [k, info] : T.dir_) {
        Vid u = static_cast<Vid>(k >> 32), v = static_cast<Vid>(k & 0xffffffffu);
        if (!T.dir_.count(key(v, u)))
            throw TriangulationError(TriangulationDefect::OrientationInconsistent,
                                     "directed edge " + std::to_string(u) + "->" +
                                         std::to_string(v) + " has no reverse");
    }

    // Undirected edges.
    for (const auto& [k, info] : T.dir_) {
        Vid u = static_cast<Vid>(k >> 32), v = static_cast<Vid>(k & 0xffffffffu);
        if (u < v) {
            T.edge_id_.emplace(k, static_cast<EdgeId>(T.edges_.size()));
            T.edges_.emplace_back(u, v);
        }
    }
    if (T.edge_count() != 3 * n - 6)
        throw TriangulationError(TriangulationDefect::EulerViolation,
                                 "expected " + std::to_string(3 * n - 6) + " edges, got " +
                                     std::to_string(T.edge_count()));
    T.exterior_edge_.assign(T.edges_.size(), 0);
    for (int i = 0; i < 3; ++i) {
        auto e = T.find_edge(exterior[i], exterior[(i + 1) % 3]);
        if (!e)
            throw TriangulationError(TriangulationDefect::OrientationInconsistent,
                                     "exterior edge missing");
        T.exterior_edge_[*e] = 1;
    }

    // Rotation system: successor of v around u is the apex of the face
    // traversing u->v. Each vertex must close into a single cycle, otherwise
    // the faces do not form a disc around it.
    T.rot_.assign(n, {});
    std::vector<Vid> first_nbr(n, -1);
    std::vector<int> deg(n, 0);
    for (const auto& [k, info] : T.dir_) {
        Vid u = static_cast<Vid>(k >> 32), v = static_cast<Vid>(k & 0xffffffffu);
        ++deg[u];
        if (first_nbr[u] < 0 || v < first_nbr[u]) first_nbr[u] = v;
    }
    for (Vid u = 0; u < n; ++u) {
        if (first_nbr[u] < 0)
            throw TriangulationError(TriangulationDefect::DisconnectedInput,
                                     "isolated vertex " + std::to_string(u));
        Vid v = first_nbr[u];
        do {
            T.rot_pos_.emplace(key(u, v), static_cast<std::int32_t>(T.rot_[u].size()));
            T.rot_[u].push_back(v);
            v = T.dir_.at(key(u, v)).apex;
            if (static_cast<int>(T.rot_[u].size()) > deg[u])
                throw TriangulationError(TriangulationDefect::EulerViolation,
                                         "rotation at vertex " + std::to_string(u) +
                                             " does not close");
        } while (v != first_nbr[u]);
        if (static_cast<int>(T.rot_[u].size()) != deg[u])
            throw TriangulationError(TriangulationDefect::EulerViolation,
                                     "vertex " + std::to_string(u) +
                                         " has a pinched (multi-cycle) rotation");
    }

    // Connectivity.
    {
        std::vector<char> seen(n, 0);
        std::vector<Vid> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            Vid u = stack.back();
            stack.pop_back();
            ++count;
            for (Vid v : T.rot_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (count != n)
            throw TriangulationError(TriangulationDefect::DisconnectedInput,
                                     "graph is not connected");
    }

    T.exterior_role_.assign(n, -1);
    for (int i = 0; i < 3; ++i) T.exterior_role_[exterior[i]] = i;

    // Face adjacency.
    T.face_edges_.resize(T.faces_.size());
    T.face_nbrs_.resize(T.faces_.size());
    for (FaceId f = 0; f < T.face_count(); ++f) {
        const auto& t = T.faces_[f];
        for (int k = 0; k < 3; ++k) {
            Vid u = t[k], v = t[(k + 1) % 3];
            T.face_edges_[f][k] = T.edge_id(u, v);
            T.face_nbrs_[f][k] = T.dir_.at(key(v, u)).face;
        }
    }
    return T;
}

inline std::vector<std::array<Vid, 3>> Triangulation::separating_triangles() const {
    // Triple {u<v<w} pairwise adjacent is a triangle of the graph; it is a
    // face boundary or the exterior or a separating triangle.
    std::vector<std::array<Vid, 3>> out;
    std::array<Vid, 3> ext = exterior_;
    std::sort(ext.begin(), ext.end());
    std::vector<std::vector<Vid>> sorted_adj(n_);
    for (Vid u = 0; u < n_; ++u) {
        sorted_adj[u] = rot_[u];
        std::sort(sorted_adj[u].begin(), sorted_adj[u].end());
    }
    auto has = [&](Vid u, Vid v) {
        return std::binary_search(sorted_adj[u].begin(), sorted_adj[u].end(), v);
    };
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        for (Vid w : sorted_adj[u]) {
            if (w <= v || !has(v, w)) continue;
            std::array<Vid, 3> tri{u, v, w};
            if (tri == ext) continue;
            // Facial iff some face uses exactly these three vertices.
            Vid ap1 = apex(u, v), ap2 = apex(v, u);
            if (ap1 == w || ap2 == w) continue;
            out.push_back(tri);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Reusable flood-fill over interior faces that never crosses blocked edges.
// Uses stamped buffers so repeated queries do not reallocate.
class RegionFlooder {
public:
    explicit RegionFlooder(const Triangulation& T)
        : T_(&T), edge_stamp_(T.edge_count(), 0), face_stamp_(T.face_count(), 0) {}

    void begin() { ++stamp_; }
    void block(EdgeId e) { edge_stamp_[e] = stamp_; }
    bool blocked(EdgeId e) const { return edge_stamp_[e] == stamp_; }

    // Flood from seed; appends visited faces to out. Returns false if the
    // flood is open towards the outer face (reaches a non-blocked exterior
    // side), true if it is a closed region.
    bool run(FaceId seed, std::vector<FaceId>& out) {
        bool closed = true;
        if (face_stamp_[seed] == stamp_) return closed;
        face_stamp_[seed] = stamp_;
        stack_.clear();
        stack_.push_back(seed);
        while (!stack_.empty()) {
            FaceId f = stack_.back();
            stack_.pop_back();
            out.push_back(f);
            const auto& es = T_->face_edges(f);
            const auto& ns = T_->face_neighbours(f);
            for (int k = 0; k < 3; ++k) {
                if (blocked(es[k])) continue;
                FaceId g = ns[k];
                if (g == kOuterFace) {
                    closed = false;
                    continue;
                }
                if (face_stamp_[g] != stamp_) {
                    face_stamp_[g] = stamp_;
                    stack_.push_back(g);
                }
            }
        }
        return closed;
    }

private:
    const Triangulation* T_;
    std::vector<int> edge_stamp_, face_stamp_;
    std::vector<FaceId> stack_;
    int stamp_ = 0;
};

// A triangulation cut out of (or remaining from) a parent one, with id maps.
struct SubTriangulation {
    Triangulation tri;
    std::vector<Vid> to_parent;       // sub vertex id -> parent vertex id
    std::vector<Vid> from_parent;     // parent vertex id -> sub id or -1
    std::vector<FaceId> face_to_parent;  // sub face id -> parent face id (-1: new face)
};

namespace detail {

// Faces strictly inside the 3-cycle whose stored-exterior order would be
// (c0, c1, c2); i.e. the faces traversing the directed edges c1->c2, c0->c1,
// c2->c0. Throws if the cycle is missing or the chosen side is outward.
inline std::vector<FaceId> faces_inside(const Triangulation& T, std::array<Vid, 3> c) {
    for (int k = 0; k < 3; ++k)
        if (!T.adjacent(c[k], c[(k + 1) % 3]))
            throw ValidationError("faces_inside: not a triangle of the graph");
    RegionFlooder flood(T);
    flood.begin();
    for (int k = 0; k < 3; ++k) flood.block(T.edge_id(c[k], c[(k + 1) % 3]));
    std::vector<FaceId> inside;
    if (!flood.run(T.face_with(c[1], c[2]), inside))
        throw ValidationError("faces_inside: cycle orientation points outward");
    std::sort(inside.begin(), inside.end());
    return inside;
}

inline SubTriangulation relabel(const Triangulation& T, std::array<Vid, 3> ext,
                                const std::vector<FaceId>& faces,
                                const std::vector<std::array<Vid, 3>>& extra_faces) {
    std::vector<Vid> to_parent;
    std::vector<Vid> from_parent(T.n(), -1);
    std::vector<FaceId> face_to_parent;
    auto intern = [&](Vid pv) {
        if (from_parent[pv] < 0) {
            from_parent[pv] = static_cast<Vid>(to_parent.size());
            to_parent.push_back(pv);
        }
        return from_parent[pv];
    };
    std::array<Vid, 3> sub_ext{intern(ext[0]), intern(ext[1]), intern(ext[2])};
    // Deterministic interior numbering: ascending parent id.
    std::vector<Vid> interior;
    {
        std::vector<char> used(T.n(), 0);
        for (FaceId f : faces)
            for (Vid v : T.faces()[f]) used[v] = 1;
        for (const auto& t : extra_faces)
            for (Vid v : t) used[v] = 1;
        for (Vid v = 0; v < T.n(); ++v)
            if (used[v] && from_parent[v] < 0) interior.push_back(v);
    }
    for (Vid v : interior) intern(v);

    std::vector<std::array<Vid, 3>> sub_faces;
    sub_faces.reserve(faces.size() + extra_faces.size());
    for (FaceId f : faces) {
        const auto& t = T.faces()[f];
        sub_faces.push_back({from_parent[t[0]], from_parent[t[1]], from_parent[t[2]]});
        face_to_parent.push_back(f);
    }
    for (const auto& t : extra_faces) {
        sub_faces.push_back({from_parent[t[0]], from_parent[t[1]], from_parent[t[2]]});
        face_to_parent.push_back(-1);
    }
    return {Triangulation::build(static_cast<Vid>(to_parent.size()), sub_ext,
                                 std::move(sub_faces)),
            std::move(to_parent), std::move(from_parent), std::move(face_to_parent)};
}

}  // namespace detail

// The closed disc bounded by the 3-cycle `ext`, as its own triangulation with
// exterior triple exactly `ext` (which must be in stored-exterior order, i.e.
// the interior lies on the side tiled by the complementary directed edges).
inline SubTriangulation restrict_to_triangle(const Triangulation& T, std::array<Vid, 3> ext) {
    std::vector<FaceId> inside = detail::faces_inside(T, ext);
    if (inside.empty()) throw ValidationError("restrict_to_triangle: empty interior");
    return detail::relabel(T, ext, inside, {});
}

// The triangulation obtained by deleting everything strictly inside the
// 3-cycle `ext` and sealing the hole with the single face (ext1, ext2, ext0).
// The parent exterior is kept.
inline SubTriangulation remove_triangle_interior(const Triangulation& T, std::array<Vid, 3> ext) {
    std::vector<FaceId> inside = detail::faces_inside(T, ext);
    std::vector<char> is_inside(T.face_count(), 0);
    for (FaceId f : inside) is_inside[f] = 1;
    std::vector<FaceId> keep;
    for (FaceId f = 0; f < T.face_count(); ++f)
        if (!is_inside[f]) keep.push_back(f);
    std::vector<std::array<Vid, 3>> closing{{ext[1], ext[2], ext[0]}};
    return detail::relabel(T, T.exterior(), keep, closing);
}

}  // namespace schnyder
