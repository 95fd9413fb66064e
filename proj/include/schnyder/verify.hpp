#pragma once

// Exact certification of linear morphs. When every vertex moves on a straight
// line from its position in drawing `from` to the one in `to`, twice the
// signed area of a face is a quadratic polynomial A t^2 + B t + C with
// integer coefficients. The motion keeps the face positively oriented for
// all t in [0, 1] iff
//   C > 0  and  A+B+C > 0  and  (A != 0 and -B/2A in (0,1)  =>  value there > 0).
// All decisions are made in exact integer/rational arithmetic. When a face
// collapses, a rational witness time with non-positive area is reported (0,
// the linear root, the parabola vertex, or 1 — not necessarily the earliest
// zero, which need not be rational).

#include <optional>
#include <vector>

#include "basics.hpp"
#include "drawing.hpp"
#include "triangulation.hpp"

namespace schnyder {

struct AreaPoly {
    Coord A = 0, B = 0, C = 0;  // 2*area(t) = A t^2 + B t + C
    Coord at0() const { return C; }
    Coord at1() const { return A + B + C; }
};

// Quadratic for one face of a linear morph between two coordinate frames.
inline AreaPoly area_polynomial(const std::array<Coord, 2>& p0, const std::array<Coord, 2>& q0,
                                const std::array<Coord, 2>& r0, const std::array<Coord, 2>& p1,
                                const std::array<Coord, 2>& q1, const std::array<Coord, 2>& r1) {
    const Coord ux = q0[0] - p0[0], uy = q0[1] - p0[1];
    const Coord vx = r0[0] - p0[0], vy = r0[1] - p0[1];
    const Coord dux = (q1[0] - p1[0]) - ux, duy = (q1[1] - p1[1]) - uy;
    const Coord dvx = (r1[0] - p1[0]) - vx, dvy = (r1[1] - p1[1]) - vy;
    AreaPoly poly;
    poly.C = ux * vy - uy * vx;
    poly.B = ux * dvy - uy * dvx + dux * vy - duy * vx;
    poly.A = dux * dvy - duy * dvx;
    return poly;
}

inline AreaPoly area_polynomial(const Triangulation& T, const Drawing& from, const Drawing& to,
                                FaceId f) {
    const auto& t = T.faces()[f];
    auto pr = [](const Drawing& d, Vid v) {
        return std::array<Coord, 2>{d.coords[v][0], d.coords[v][1]};
    };
    return area_polynomial(pr(from, t[0]), pr(from, t[1]), pr(from, t[2]), pr(to, t[0]),
                           pr(to, t[1]), pr(to, t[2]));
}

// A rational time in [0,1] with non-positive doubled area, if one exists.
inline std::optional<Rational> collapse_witness(const AreaPoly& p) {
    if (p.at0() <= 0) return Rational(0);
    if (p.A == 0) {
        if (p.at1() <= 0) return Rational(p.C, -p.B);  // B < 0 since C > 0 >= B+C
        return std::nullopt;
    }
    if (p.A > 0) {
        // Vertex of the parabola; only a minimum for A > 0.
        Rational tv(-p.B, 2 * p.A);
        if (tv > 0 && tv < 1) {
            // Value at the vertex is (4AC - B^2) / (4A).
            if (4 * p.A * p.C - p.B * p.B <= 0) return tv;
            return std::nullopt;
        }
    }
    if (p.at1() <= 0) return Rational(1);
    return std::nullopt;
}

enum class StepVerdict { Planar, CollapsedFace };

struct StepCertificate {
    StepVerdict verdict = StepVerdict::Planar;
    FaceId face = -1;       // witness face when collapsed
    Rational t_star = 0;    // witness time (smallest over faces, then face id)
};

// Certifies one linear morph step between two drawings of the same
// triangulation: Planar iff every face keeps strictly positive area
// throughout [0, 1].
inline StepCertificate certify_step(const Triangulation& T, const Drawing& from,
                                    const Drawing& to) {
    if (from.coords.size() != static_cast<size_t>(T.n()) ||
        to.coords.size() != static_cast<size_t>(T.n()))
        throw ValidationError("certify_step: drawing size mismatch");
    StepCertificate best;
    for (FaceId f = 0; f < T.face_count(); ++f) {
        auto w = collapse_witness(area_polynomial(T, from, to, f));
        if (!w) continue;
        if (best.verdict == StepVerdict::Planar || *w < best.t_star) {
            best.verdict = StepVerdict::CollapsedFace;
            best.face = f;
            best.t_star = *w;
        }
    }
    return best;
}

}  // namespace schnyder
