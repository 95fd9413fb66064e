#pragma once

// Schnyder woods on a triangulation: orientation plus 3-colouring of the
// interior edges such that
//   (W1) every interior vertex has exactly one outgoing edge of each colour,
//        appearing clockwise in the order 1, 2, 3, with incoming edges of
//        colour i confined to the sector between the outgoing edges of
//        colours i-1 and i+1;
//   (W2) at the k-th exterior vertex every interior edge arrives with
//        colour k;
//   (W3) the union of colour-i edges with the reversals of the other two
//        colour classes is acyclic (equivalently, each colour class is a
//        tree rooted at its exterior vertex).
//
// The colour-i edges form a spanning tree of the interior vertices plus the
// root a_i; paths towards the roots and the three regions they cut out are
// the basis of the barycentric drawing.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "basics.hpp"
#include "triangulation.hpp"

namespace schnyder {

struct WoodArc {
    Vid tail = -1;
    Vid head = -1;
    Colour colour = Colour::C1;
    bool present() const { return tail >= 0; }
    bool operator==(const WoodArc&) const = default;
};

class SchnyderWood {
public:
    SchnyderWood() = default;

    // Builds the parent index; performs only structural checks (arcs sit on
    // their edges). Use validate_wood for the full conditions.
    static SchnyderWood assemble(const Triangulation& T, std::vector<WoodArc> arcs) {
        SchnyderWood S;
        S.arcs_ = std::move(arcs);
        if (static_cast<EdgeId>(S.arcs_.size()) != T.edge_count())
            throw ValidationError("wood: arc vector size mismatch");
        S.reindex(T);
        return S;
    }

    const std::vector<WoodArc>& arcs() const { return arcs_; }
    const WoodArc& arc(EdgeId e) const { return arcs_[e]; }

    // Head of v's outgoing colour-c edge, or -1 (exterior vertices).
    Vid parent(Vid v, Colour c) const { return parent_[v][index_of(c)]; }

    bool operator==(const SchnyderWood& o) const { return arcs_ == o.arcs_; }

    // Re-derive the parent index after arcs_ changed (used by flips).
    void reindex(const Triangulation& T) {
        parent_.assign(T.n(), {-1, -1, -1});
        for (const auto& a : arcs_) {
            if (!a.present()) continue;
            Vid& slot = parent_[a.tail][index_of(a.colour)];
            if (slot >= 0)
                throw ValidationError("wood: vertex " + std::to_string(a.tail) +
                                      " has two outgoing edges of colour " +
                                      std::to_string(static_cast<int>(a.colour)));
            slot = a.head;
        }
    }

    std::vector<WoodArc>& mutable_arcs() { return arcs_; }

private:
    std::vector<WoodArc> arcs_;                 // indexed by EdgeId
    std::vector<std::array<Vid, 3>> parent_;    // [v][colour index] -> head
};

struct WoodDefect {
    enum class Code {
        Structure,      // arcs missing/misplaced
        ExteriorRule,   // condition (W2)
        VertexPattern,  // condition (W1)
        Cycle,          // condition (W3)
    } code;
    std::string detail;
};

inline const char* to_string(WoodDefect::Code c) {
    switch (c) {
        case WoodDefect::Code::Structure: return "Structure";
        case WoodDefect::Code::ExteriorRule: return "ExteriorRule";
        case WoodDefect::Code::VertexPattern: return "VertexPattern";
        case WoodDefect::Code::Cycle: return "Cycle";
    }
    return "?";
}

// First violated wood condition with a witness, or nullopt if valid.
inline std::optional<WoodDefect> validate_wood(const Triangulation& T, const SchnyderWood& S) {
    using Code = WoodDefect::Code;
    if (static_cast<EdgeId>(S.arcs().size()) != T.edge_count())
        return WoodDefect{Code::Structure, "arc vector size mismatch"};
    for (EdgeId e = 0; e < T.edge_count(); ++e) {
        const auto& a = S.arc(e);
        auto [u, v] = T.edge(e);
        if (T.is_exterior_edge(e)) {
            if (a.present())
                return WoodDefect{Code::Structure, "exterior edge " + std::to_string(u) + "-" +
                                                       std::to_string(v) + " carries an arc"};
            continue;
        }
        if (!a.present())
            return WoodDefect{Code::Structure, "interior edge " + std::to_string(u) + "-" +
                                                   std::to_string(v) + " lacks an arc"};
        if (!((a.tail == u && a.head == v) || (a.tail == v && a.head == u)))
            return WoodDefect{Code::Structure, "arc endpoints disagree with edge " +
                                                   std::to_string(u) + "-" + std::to_string(v)};
    }

    // (W2): all interior edges at the exterior vertex of role k arrive with
    // colour k+1 (roles are 0-based, colours 1-based).
    for (int k = 0; k < 3; ++k) {
        Vid a = T.exterior()[k];
        Colour want = colour_from_index(k);
        for (Vid w : T.neighbours(a)) {
            EdgeId e = T.edge_id(a, w);
            if (T.is_exterior_edge(e)) continue;
            const auto& arc = S.arc(e);
            if (arc.head != a || arc.colour != want)
                return WoodDefect{Code::ExteriorRule,
                                  "edge " + std::to_string(w) + "-" + std::to_string(a) +
                                      " must point into exterior vertex " + std::to_string(a) +
                                      " with colour " + std::to_string(k + 1)};
        }
    }

    // (W1) per interior vertex: one outgoing edge per colour and the sector
    // pattern out1 [in3*] out2 [in1*] out3 [in2*] in rotation order.
    for (Vid v = 0; v < T.n(); ++v) {
        if (T.is_exterior_vertex(v)) continue;
        const auto& nbrs = T.neighbours(v);
        int out_pos[3] = {-1, -1, -1};
        for (int p = 0; p < static_cast<int>(nbrs.size()); ++p) {
            const auto& a = S.arc(T.edge_id(v, nbrs[p]));
            if (a.tail == v) {
                int i = index_of(a.colour);
                if (out_pos[i] >= 0)
                    return WoodDefect{Code::VertexPattern,
                                      "vertex " + std::to_string(v) +
                                          " has two outgoing edges of colour " +
                                          std::to_string(i + 1)};
                out_pos[i] = p;
            }
        }
        for (int i = 0; i < 3; ++i)
            if (out_pos[i] < 0)
                return WoodDefect{Code::VertexPattern,
                                  "vertex " + std::to_string(v) +
                                      " has no outgoing edge of colour " + std::to_string(i + 1)};
        const int deg = static_cast<int>(nbrs.size());
        // Expected cyclic sectors starting at the colour-1 out-edge.
        int p = out_pos[0];
        auto arc_at = [&](int pos) -> const WoodArc& {
            return S.arc(T.edge_id(v, nbrs[pos % deg]));
        };
        for (int sector = 0; sector < 3; ++sector) {
            Colour out_c = colour_from_index(sector);
            Colour in_c = prev_colour(out_c);  // incoming colour between out_c and next
            if (arc_at(p).tail != v || arc_at(p).colour != out_c)
                return WoodDefect{Code::VertexPattern,
                                  "vertex " + std::to_string(v) + ": rotation slot " +
                                      std::to_string(p % deg) + " should be outgoing colour " +
                                      std::to_string(sector + 1)};
            ++p;
            while (p % deg != out_pos[(sector + 1) % 3]) {
                const auto& a = arc_at(p);
                if (a.head != v || a.colour != in_c)
                    return WoodDefect{Code::VertexPattern,
                                      "vertex " + std::to_string(v) + ": rotation slot " +
                                          std::to_string(p % deg) +
                                          " should be incoming colour " +
                                          std::to_string(static_cast<int>(in_c))};
                ++p;
            }
        }
    }

    // (W3) each colour class is acyclic (trees), and the mixed relation with
    // the other two classes reversed has no directed cycle either.
    for (int i = 0; i < 3; ++i) {
        std::vector<int> state(T.n(), 0);  // 0 fresh, 1 on path, 2 done
        for (Vid v0 = 0; v0 < T.n(); ++v0) {
            Vid v = v0;
            std::vector<Vid> chain;
            while (v >= 0 && state[v] == 0) {
                state[v] = 1;
                chain.push_back(v);
                v = S.parent(v, colour_from_index(i));
            }
            if (v >= 0 && state[v] == 1)
                return WoodDefect{Code::Cycle, "colour-" + std::to_string(i + 1) +
                                                   " cycle through vertex " + std::to_string(v)};
            for (Vid u : chain) state[u] = 2;
        }
    }
    for (int i = 0; i < 3; ++i) {
        // Digraph: colour i forward, colours i-1 and i+1 reversed.
        std::vector<std::vector<Vid>> adj(T.n());
        for (const auto& a : S.arcs()) {
            if (!a.present()) continue;
            if (index_of(a.colour) == i)
                adj[a.tail].push_back(a.head);
            else
                adj[a.head].push_back(a.tail);
        }
        std::vector<int> state(T.n(), 0);
        std::vector<std::pair<Vid, size_t>> stack;
        for (Vid v0 = 0; v0 < T.n(); ++v0) {
            if (state[v0]) continue;
            stack.clear();
            stack.emplace_back(v0, 0);
            state[v0] = 1;
            while (!stack.empty()) {
                auto& [u, k] = stack.back();
                if (k == adj[u].size()) {
                    state[u] = 2;
                    stack.pop_back();
                    continue;
                }
                Vid w = adj[u][k++];
                if (state[w] == 1)
                    return WoodDefect{Code::Cycle,
                                      "mixed relation around colour " + std::to_string(i + 1) +
                                          " has a directed cycle through vertex " +
                                          std::to_string(w)};
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical construction: peel the outer vertex first and then repeatedly the
// lowest-numbered chain vertex with exactly two neighbours on the current
// boundary; replaying the peels backwards as insertions onto the base edge
// colours every edge (leftmost fan edge outward colour 2, rightmost outward
// colour 3, inner fan edges inward colour 1).

inline SchnyderWood compute_wood(const Triangulation& T) {
    const Vid a1 = T.exterior()[0], a2 = T.exterior()[1], a3 = T.exterior()[2];
    const Vid n = T.n();

    std::vector<char> active(n, 1), on_chain(n, 0);
    std::vector<Vid> next_to_a3(n, -1), prev_to_a2(n, -1);
    on_chain[a1] = on_chain[a2] = on_chain[a3] = 1;
    next_to_a3[a2] = a1;
    next_to_a3[a1] = a3;
    prev_to_a2[a3] = a1;
    prev_to_a2[a1] = a2;

    std::vector<int> boundary_nbrs(n, 0);
    for (Vid v = 0; v < n; ++v)
        for (Vid w : T.neighbours(v))
            if (on_chain[w]) ++boundary_nbrs[v];

    auto eligible = [&](Vid v) {
        return active[v] && on_chain[v] && v != a2 && v != a3 && boundary_nbrs[v] == 2;
    };
    std::vector<char> in_set(n, 0);
    std::vector<Vid> candidates;  // kept as a simple ordered scan set
    auto refresh = [&](Vid v) {
        bool want = eligible(v);
        if (want && !in_set[v]) {
            in_set[v] = 1;
            candidates.push_back(v);
        } else if (!want && in_set[v]) {
            in_set[v] = 0;  // lazily removed on scan
        }
    };
    refresh(a1);

    struct PeelStep {
        Vid v;
        std::vector<Vid> fan;  // active neighbours from the a2-side chain
                               // neighbour to the a3-side one, rotation order
    };
    std::vector<PeelStep> steps;
    steps.reserve(n - 2);

    for (int round = 0; round < n - 2; ++round) {
        Vid v = -1;
        for (Vid c : candidates)
            if (in_set[c] && eligible(c) && (v < 0 || c < v)) v = c;
        if (v < 0) throw ValidationError("compute_wood: no peelable vertex (input not a disc)");
        in_set[v] = 0;

        Vid L = prev_to_a2[v], R = next_to_a3[v];
        std::vector<Vid> fan;
        const auto& nbrs = T.neighbours(v);
        const int deg = static_cast<int>(nbrs.size());
        int p = T.rotation_position(v, L);
        for (int k = 0; k < deg; ++k) {
            Vid w = nbrs[(p + k) % deg];
            if (!active[w])
                throw ValidationError("compute_wood: fan interrupted (input not a disc)");
            fan.push_back(w);
            if (w == R) break;
        }
        if (fan.back() != R || fan.front() != L || fan.size() < 2)
            throw ValidationError("compute_wood: malformed fan");

        active[v] = 0;
        on_chain[v] = 0;
        for (Vid w : T.neighbours(v))
            if (active[w]) --boundary_nbrs[w];
        // Chain now runs L -> fan[1..] -> R.
        Vid prev = L;
        for (size_t k = 1; k + 1 < fan.size(); ++k) {
            Vid m = fan[k];
            on_chain[m] = 1;
            next_to_a3[prev] = m;
            prev_to_a2[m] = prev;
            prev = m;
            for (Vid w : T.neighbours(m))
                if (active[w]) ++boundary_nbrs[w];
        }
        next_to_a3[prev] = R;
        prev_to_a2[R] = prev;

        for (Vid w : T.neighbours(v)) refresh(w);
        for (size_t k = 1; k + 1 < fan.size(); ++k)
            for (Vid w : T.neighbours(fan[k])) refresh(w);

        steps.push_back({v, std::move(fan)});
    }

    std::vector<WoodArc> arcs(T.edge_count());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const Vid v = it->v;
        const auto& fan = it->fan;
        for (size_t k = 0; k < fan.size(); ++k) {
            EdgeId e = T.edge_id(v, fan[k]);
            if (T.is_exterior_edge(e)) continue;  // only for the outer vertex
            if (k == 0)
                arcs[e] = {v, fan[k], Colour::C2};
            else if (k + 1 == fan.size())
                arcs[e] = {v, fan[k], Colour::C3};
            else
                arcs[e] = {fan[k], v, Colour::C1};
        }
    }
    return SchnyderWood::assemble(T, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Paths and regions.

struct VertexFrame {
    std::array<std::vector<Vid>, 3> path;       // P_i(v): v, ..., a_i
    std::array<std::vector<FaceId>, 3> region;  // R_i(v) as sorted face lists
};

namespace detail {

inline void tree_path(const Triangulation& T, const SchnyderWood& S, Vid v, Colour c,
                      std::vector<Vid>& out) {
    out.clear();
    out.push_back(v);
    Vid cur = v;
    while (!T.is_exterior_vertex(cur)) {
        Vid p = S.parent(cur, c);
        if (p < 0) throw ValidationError("tree_path: missing parent (invalid wood)");
        out.push_back(p);
        cur = p;
        if (out.size() > static_cast<size_t>(T.n()))
            throw ValidationError("tree_path: cycle (invalid wood)");
    }
}

}  // namespace detail

// Paths and regions of an interior vertex. Region i is bounded by the paths
// of colours i+1 and i-1 and the exterior edge joining their roots; it is
// computed as the face flood on v's side of that boundary.
inline VertexFrame paths_and_regions(const Triangulation& T, const SchnyderWood& S, Vid v) {
    if (T.is_exterior_vertex(v))
        throw ValidationError("paths_and_regions: exterior vertex");
    VertexFrame out;
    for (int i = 0; i < 3; ++i)
        detail::tree_path(T, S, v, colour_from_index(i), out.path[i]);
    RegionFlooder flood(T);
    for (int i = 0; i < 3; ++i) {
        const auto& pa = out.path[(i + 1) % 3];
        const auto& pb = out.path[(i + 2) % 3];
        flood.begin();
        for (size_t k = 0; k + 1 < pa.size(); ++k) flood.block(T.edge_id(pa[k], pa[k + 1]));
        for (size_t k = 0; k + 1 < pb.size(); ++k) flood.block(T.edge_id(pb[k], pb[k + 1]));
        flood.block(T.edge_id(T.exterior()[(i + 1) % 3], T.exterior()[(i + 2) % 3]));
        FaceId seed = T.face_with(v, out.path[(i + 1) % 3][1]);
        if (!flood.run(seed, out.region[i]))
            throw ValidationError("paths_and_regions: region flood escaped (invalid wood)");
        std::sort(out.region[i].begin(), out.region[i].end());
    }
    return out;
}

// All vertices whose colour-i path passes through v (v included), in
// ascending order.
inline std::vector<Vid> descendants(const Triangulation& T, const SchnyderWood& S, Vid v,
                                    Colour c) {
    std::vector<std::vector<Vid>> children(T.n());
    for (const auto& a : S.arcs())
        if (a.present() && a.colour == c) children[a.head].push_back(a.tail);
    std::vector<Vid> out{v};
    for (size_t k = 0; k < out.size(); ++k)
        for (Vid w : children[out[k]]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration for small instances (tests and confluence checks).
// Enumerates 3-orientations (interior vertices out-degree 3, exterior ones
// out-degree 0 on interior edges) by backtracking, then colours the out-edges
// per vertex consistently; every candidate passing validate_wood is emitted.

inline std::vector<SchnyderWood> enumerate_woods(const Triangulation& T, int max_n = 12) {
    if (T.n() > max_n)
        throw ValidationError("enumerate_woods: instance too large for exhaustive search");
    std::vector<EdgeId> interior;
    for (EdgeId e = 0; e < T.edge_count(); ++e)
        if (!T.is_exterior_edge(e)) interior.push_back(e);

    std::vector<int> budget(T.n());  // outgoing slots still allowed
    for (Vid v = 0; v < T.n(); ++v) budget[v] = T.is_exterior_vertex(v) ? 0 : 3;
    std::vector<int> remaining(T.n(), 0);  // undecided interior edges at v
    for (EdgeId e : interior) {
        auto [u, v] = T.edge(e);
        ++remaining[u];
        ++remaining[v];
    }

    std::vector<Vid> tails(interior.size(), -1);
    std::vector<SchnyderWood> found;

    // Colour the out-edges of each vertex given a full orientation; the
    // rotation pattern forces the colouring up to the choice at one vertex,
    // so a small backtracking search over colours suffices.
    auto colour_and_collect = [&]() {
        std::vector<WoodArc> arcs(T.edge_count());
        for (size_t k = 0; k < interior.size(); ++k) {
            auto [u, v] = T.edge(interior[k]);
            Vid t = tails[k], h = t == u ? v : u;
            arcs[interior[k]] = {t, h, Colour::C1};  // colour decided below
        }
        // Candidate colourings: for each interior vertex the three outgoing
        // edges in rotation order get colours 1,2,3 cyclically, three ways.
        std::vector<std::array<EdgeId, 3>> outs(T.n(), {-1, -1, -1});
        for (Vid v = 0; v < T.n(); ++v) {
            if (T.is_exterior_vertex(v)) continue;
            int c = 0;
            for (Vid w : T.neighbours(v)) {
                EdgeId e = T.edge_id(v, w);
                if (T.is_exterior_edge(e) || arcs[e].tail != v) continue;
                if (c == 3) return;  // out-degree > 3, cannot happen here
                outs[v][c++] = e;
            }
            if (c != 3) return;
        }
        std::vector<int> shift(T.n(), 0);
        auto try_all = [&](auto&& self, Vid v) -> void {
            while (v < T.n() && T.is_exterior_vertex(v)) ++v;
            if (v == T.n()) {
                std::vector<WoodArc> cand = arcs;
                for (Vid u = 0; u < T.n(); ++u) {
                    if (T.is_exterior_vertex(u)) continue;
                    for (int k = 0; k < 3; ++k)
                        cand[outs[u][k]].colour = colour_from_index((k + shift[u]) % 3);
                }
                SchnyderWood S = SchnyderWood::assemble(T, std::move(cand));
                if (!validate_wood(T, S)) found.push_back(std::move(S));
                return;
            }
            for (int s = 0; s < 3; ++s) {
                shift[v] = s;
                self(self, v + 1);
            }
        };
        try_all(try_all, 0);
    };

    auto orient = [&](auto&& self, size_t k) -> void {
        if (k == interior.size()) {
            colour_and_collect();
            return;
        }
        auto [u, v] = T.edge(interior[k]);
        --remaining[u];
        --remaining[v];
        for (Vid t : {u, v}) {
            Vid h = t == u ? v : u;
            if (budget[t] == 0) continue;
            --budget[t];
            // Both endpoints must still be able to spend their remaining
            // out-degree budget on their undecided edges.
            if (budget[t] <= remaining[t] && budget[h] <= remaining[h]) {
                tails[k] = t;
                self(self, k + 1);
            }
            ++budget[t];
        }
        ++remaining[u];
        ++remaining[v];
        tails[k] = -1;
    };
    orient(orient, 0);
    return found;
}

}  // namespace schnyder
