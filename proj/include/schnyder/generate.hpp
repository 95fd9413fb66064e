#pragma once

// Seeded generators for test corpora and the CLI:
//  - random_triangulation: vertex stacking into random faces followed by
//    random diagonal flips (the standard mixing walk on triangulations),
//  - random_wood: a seeded walk in the flip lattice anchored at the
//    flip-free wood,
//  - random_weights: a random composition of a given total into one positive
//    integer per inner face.
// All randomness flows through Rng, so results are reproducible per seed.

#include <unordered_map>
#include <utility>
#include <vector>

#include "basics.hpp"
#include "flips.hpp"
#include "triangulation.hpp"
#include "wood.hpp"

namespace schnyder {

namespace detail {

// Face lists under construction are indexed by directed edge.
class FaceSurgeon {
  public:
    void add_face(int idx, const std::array<Vid, 3>& f) {
        faces_.resize(std::max<size_t>(faces_.size(), idx + 1));
        faces_[idx] = f;
        for (int i = 0; i < 3; ++i) at_[key(f[i], f[(i + 1) % 3])] = idx;
    }
    int face_at(Vid u, Vid v) const {
        auto it = at_.find(key(u, v));
        return it == at_.end() ? -1 : it->second;
    }
    bool edge_exists(Vid u, Vid v) const { return face_at(u, v) >= 0 || face_at(v, u) >= 0; }
    const std::vector<std::array<Vid, 3>>& faces() const { return faces_; }

    void stack(int face_idx, Vid x) {
        std::array<Vid, 3> f = faces_[face_idx];
        erase_keys(f);
        int base = static_cast<int>(faces_.size());
        add_face(face_idx, {f[0], f[1], x});
        add_face(base, {f[1], f[2], x});
        add_face(base + 1, {f[2], f[0], x});
    }

    // Replaces faces (u,v,a),(v,u,b) by (u,b,a),(b,v,a). Returns false when
    // the edge is not interior or the flip would create a duplicate edge.
    bool diagonal_flip(Vid u, Vid v) {
        int f1 = face_at(u, v), f2 = face_at(v, u);
        if (f1 < 0 || f2 < 0) return false;
        Vid a = third(faces_[f1], u, v);
        Vid b = third(faces_[f2], v, u);
        if (edge_exists(a, b)) return false;
        erase_keys(faces_[f1]);
        erase_keys(faces_[f2]);
        add_face(f1, {u, b, a});
        add_face(f2, {b, v, a});
        return true;
    }

  private:
    static uint64_t key(Vid u, Vid v) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
               static_cast<uint32_t>(v);
    }
    static Vid third(const std::array<Vid, 3>& f, Vid u, Vid v) {
        for (int i = 0; i < 3; ++i)
            if (f[i] == u && f[(i + 1) % 3] == v) return f[(i + 2) % 3];
        throw std::logic_error("FaceSurgeon: directed edge not on face");
    }
    void erase_keys(const std::array<Vid, 3>& f) {
        for (int i = 0; i < 3; ++i) at_.erase(key(f[i], f[(i + 1) % 3]));
    }

    std::vector<std::array<Vid, 3>> faces_;
    std::unordered_map<uint64_t, int> at_;
};

}  // namespace detail

// A random triangulation on n >= 4 vertices with exterior (0,1,2): stack
// n - 4 vertices into random faces, then attempt `flip_rounds` random
// diagonal flips (default 10n) to mix away the stacked structure.
inline Triangulation random_triangulation(int n, Rng& rng, int flip_rounds = -1) {
    if (n < 4) throw ValidationError("random_triangulation: need n >= 4");
    if (flip_rounds < 0) flip_rounds = 10 * n;
    detail::FaceSurgeon s;
    s.add_face(0, {0, 1, 3});
    s.add_face(1, {1, 2, 3});
    s.add_face(2, {2, 0, 3});
    for (Vid x = 4; x < n; ++x)
        s.stack(static_cast<int>(rng.below(s.faces().size())), x);

    for (int round = 0; round < flip_rounds; ++round) {
        // A uniformly random directed inner-face edge; interior edges are
        // seen from both sides, exterior ones from one, so interior edges
        // are (harmlessly) twice as likely to be proposed.
        int f = static_cast<int>(rng.below(s.faces().size()));
        int k = static_cast<int>(rng.below(3));
        Vid u = s.faces()[f][k], v = s.faces()[f][(k + 1) % 3];
        s.diagonal_flip(u, v);
    }
    return Triangulation::build(n, {0, 1, 2}, s.faces());
}

// A random wood: descend from the canonical wood to the flip-free wood, then
// take `walk` uniformly random steps among all currently available flips and
// flops (default 3n). Anchoring at the flip-free wood keeps the pairwise flip
// distance between generated woods proportional to the walk length.
inline SchnyderWood random_wood(const Triangulation& T, Rng& rng, int walk = -1) {
    if (walk < 0) walk = 3 * T.n();
    SchnyderWood S = maximal_flip_sequence(T, compute_wood(T)).sink;
    for (int step = 0; step < walk; ++step) {
        std::vector<FlipEvent> moves = flippable_triangles(T, S);
        std::vector<FlipEvent> flops = floppable_triangles(T, S);
        moves.insert(moves.end(), flops.begin(), flops.end());
        if (moves.empty()) break;
        S = apply_flip(T, S, moves[rng.below(moves.size())]);
    }
    return S;
}

// A random weight vector: positive integers, one per inner face, summing to
// `total` (which must be at least the face count).
inline std::vector<Coord> random_weights(const Triangulation& T, Coord total, Rng& rng) {
    const int F = T.face_count();
    if (total < F)
        throw ValidationError("random_weights: total below one unit per face");
    std::vector<Coord> w(F, 1);
    for (Coord left = total - F; left > 0; --left) w[rng.below(F)] += 1;
    return w;
}

}  // namespace schnyder
