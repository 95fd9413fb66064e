#pragma once

// Recognition of weighted Schnyder drawings.
//
// Wood extraction: in a weighted Schnyder drawing the outgoing colour-i edge
// of an interior vertex u points to the nearest vertex inside u's open
// cone i, where cone membership is the strict sign pattern of the
// barycentric difference w - u (cone 1: (+,-,-), cone 2: (-,+,-), cone 3:
// (-,-,+)) and nearness is measured by w_i - u_i (the half-Theta-6 rule).
// Ties and empty cones are degenerate; a nearest vertex that is not a graph
// neighbour, or any failure of the wood conditions, disproves the candidate.
//
// Weight recovery: with the wood fixed, the region equations of all interior
// vertices form a linear system in the face weights that has full column
// rank. It is solved twice by fraction-free elimination (opposite column
// orders, results must agree), all equations are verified exactly, and the
// resulting weights decide the final verdict.

#include <optional>
#include <string>
#include <vector>

#include "basics.hpp"
#include "drawing.hpp"
#include "triangulation.hpp"
#include "wood.hpp"

namespace schnyder {

enum class RecognitionVerdict {
    WeightedSchnyder,
    WoodMismatch,
    NonPositiveWeight,
    DegenerateCone,
};

inline const char* to_string(RecognitionVerdict v) {
    switch (v) {
        case RecognitionVerdict::WeightedSchnyder: return "WeightedSchnyder";
        case RecognitionVerdict::WoodMismatch: return "WoodMismatch";
        case RecognitionVerdict::NonPositiveWeight: return "NonPositiveWeight";
        case RecognitionVerdict::DegenerateCone: return "DegenerateCone";
    }
    return "?";
}

struct RecognitionResult {
    RecognitionVerdict verdict = RecognitionVerdict::WoodMismatch;
    std::string detail;
    std::optional<SchnyderWood> wood;  // extracted candidate (when one exists)
    std::vector<Rational> weights;     // recovered weights (when solvable)
};

// Structural checks for "drawing-shaped" input: coordinate sums equal W,
// exterior vertices pinned to W*e_i, nothing negative.
inline void require_drawing_shape(const Triangulation& T, const Drawing& d) {
    if (d.coords.size() != static_cast<size_t>(T.n()))
        throw ValidationError("drawing: expected one coordinate triple per vertex");
    if (d.W <= 0) throw ValidationError("drawing: total weight must be positive");
    for (Vid v = 0; v < T.n(); ++v) {
        const auto& c = d.coords[v];
        if (c[0] < 0 || c[1] < 0 || c[2] < 0)
            throw ValidationError("drawing: negative coordinate at vertex " + std::to_string(v));
        if (c[0] + c[1] + c[2] != d.W)
            throw ValidationError("drawing: coordinates of vertex " + std::to_string(v) +
                                  " do not sum to W");
    }
    for (int i = 0; i < 3; ++i)
        if (d.coords[T.exterior()[i]][i] != d.W)
            throw ValidationError("drawing: exterior vertex " + std::to_string(i + 1) +
                                  " is not pinned to W*e" + std::to_string(i + 1));
}

// Cone index (0..2) containing the strict difference vector, or nullopt.
inline std::optional<int> cone_of(const std::array<Coord, 3>& diff) {
    for (int i = 0; i < 3; ++i)
        if (diff[i] > 0 && diff[(i + 1) % 3] < 0 && diff[(i + 2) % 3] < 0) return i;
    return std::nullopt;
}

namespace detail {

struct Extraction {
    bool ok = false;
    RecognitionResult failure;  // set when !ok
    SchnyderWood wood;
};

inline Extraction extract_wood(const Triangulation& T, const Drawing& d) {
    Extraction out;
    std::vector<WoodArc> arcs(T.edge_count());
    for (Vid u = 0; u < T.n(); ++u) {
        if (T.is_exterior_vertex(u)) continue;
        for (int i = 0; i < 3; ++i) {
            Vid best = -1;
            Coord best_dist = 0;
            bool tie = false;
            for (Vid w = 0; w < T.n(); ++w) {
                if (w == u) continue;
                std::array<Coord, 3> diff{d.coords[w][0] - d.coords[u][0],
                                          d.coords[w][1] - d.coords[u][1],
                                          d.coords[w][2] - d.coords[u][2]};
                auto cone = cone_of(diff);
                if (!cone || *cone != i) continue;
                Coord dist = diff[i];
                if (best < 0 || dist < best_dist) {
                    best = w;
                    best_dist = dist;
                    tie = false;
                } else if (dist == best_dist) {
                    tie = true;
                }
            }
            if (best < 0) {
                out.failure = {RecognitionVerdict::DegenerateCone,
                               "vertex " + std::to_string(u) + " has an empty cone " +
                                   std::to_string(i + 1),
                               std::nullopt,
                               {}};
                return out;
            }
            if (tie) {
                out.failure = {RecognitionVerdict::DegenerateCone,
                               "vertex " + std::to_string(u) +
                                   " has tied nearest vertices in cone " + std::to_string(i + 1),
                               std::nullopt,
                               {}};
                return out;
            }
            if (!T.adjacent(u, best)) {
                out.failure = {RecognitionVerdict::WoodMismatch,
                               "nearest cone-" + std::to_string(i + 1) + " vertex of " +
                                   std::to_string(u) + " is " + std::to_string(best) +
                                   ", not a neighbour",
                               std::nullopt,
                               {}};
                return out;
            }
            EdgeId e = T.edge_id(u, best);
            if (T.is_exterior_edge(e)) {
                out.failure = {RecognitionVerdict::WoodMismatch,
                               "candidate arc lands on an exterior edge", std::nullopt, {}};
                return out;
            }
            WoodArc cand{u, best, colour_from_index(i)};
            if (arcs[e].present() && !(arcs[e] == cand)) {
                out.failure = {RecognitionVerdict::WoodMismatch,
                               "conflicting candidate arcs on edge " + std::to_string(u) + "-" +
                                   std::to_string(best),
                               std::nullopt,
                               {}};
                return out;
            }
            arcs[e] = cand;
        }
    }
    for (EdgeId e = 0; e < T.edge_count(); ++e)
        if (!T.is_exterior_edge(e) && !arcs[e].present()) {
            auto [u, v] = T.edge(e);
            out.failure = {RecognitionVerdict::WoodMismatch,
                           "interior edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " received no candidate arc",
                           std::nullopt,
                           {}};
            return out;
        }
    out.ok = true;
    out.wood = SchnyderWood::assemble(T, std::move(arcs));
    return out;
}

// Fraction-free (Bareiss) elimination on an augmented integer system.
// Returns the solution as numerators over one common positive denominator,
// or nullopt if the system is inconsistent. Throws on rank deficiency.
struct IntegerSolution {
    std::vector<BigInt> num;
    BigInt den;  // > 0
};

inline std::optional<IntegerSolution> solve_fraction_free(
    std::vector<std::vector<BigInt>> rows, int unknowns, bool reverse_columns) {
    const int R = static_cast<int>(rows.size());
    const int M = unknowns;  // augmented column M holds the right-hand side
    std::vector<int> col(M);
    for (int j = 0; j < M; ++j) col[j] = reverse_columns ? M - 1 - j : j;

    BigInt prev = 1;
    for (int k = 0; k < M; ++k) {
        // Column pivoting: take the first column (in the requested order)
        // with a nonzero entry below the finished rows, and within it the
        // entry of smallest magnitude to curb growth.
        int piv = -1;
        for (int jj = k; jj < M && piv < 0; ++jj) {
            int c = col[jj];
            for (int i = k; i < R; ++i) {
                if (rows[i][c] == 0) continue;
                if (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c])) piv = i;
            }
            if (piv >= 0) std::swap(col[k], col[jj]);
        }
        if (piv < 0) {
            // All remaining rows are zero on every unknown. If any has a
            // nonzero right-hand side the system is inconsistent; otherwise
            // it is underdetermined, which region systems never are.
            for (int i = k; i < R; ++i)
                if (rows[i][M] != 0) return std::nullopt;
            throw std::logic_error("solve_fraction_free: rank-deficient system");
        }
        int c = col[k];
        std::swap(rows[k], rows[piv]);
        const BigInt pivot = rows[k][c];
        for (int i = k + 1; i < R; ++i) {
            const BigInt factor = rows[i][c];
            for (int jj = k + 1; jj <= M; ++jj) {
                int cc = jj == M ? M : col[jj];
                rows[i][cc] = (rows[i][cc] * pivot - rows[k][cc] * factor) / prev;
            }
            rows[i][c] = 0;
        }
        prev = pivot;
    }
    // Extra rows must have vanished entirely.
    for (int i = M; i < R; ++i)
        if (rows[i][M] != 0) return std::nullopt;

    // Back-substitution in rationals, then brought to a common denominator.
    std::vector<Rational> x(M);
    for (int k = M - 1; k >= 0; --k) {
        int c = col[k];
        Rational acc(rows[k][M]);
        for (int j = k + 1; j < M; ++j) acc -= Rational(rows[k][col[j]]) * x[col[j]];
        x[c] = acc / Rational(rows[k][c]);
    }
    IntegerSolution sol;
    sol.den = 1;
    for (const Rational& q : x) sol.den = lcm(sol.den, BigInt(denominator(q)));
    sol.num.resize(M);
    for (int j = 0; j < M; ++j)
        sol.num[j] = BigInt(numerator(x[j])) * (sol.den / BigInt(denominator(x[j])));
    return sol;
}

}  // namespace detail

struct WeightSolve {
    bool consistent = false;
    std::string detail;             // first failing equation when inconsistent
    std::vector<Rational> weights;  // when consistent
};

// Recovers the face weights that would draw `d` under wood S, or reports the
// first region equation that cannot be satisfied.
inline WeightSolve solve_weights(const Triangulation& T, const SchnyderWood& S,
                                 const Drawing& d) {
    require_drawing_shape(T, d);
    const int M = T.face_count();

    // Region face sets for every interior vertex.
    struct Row {
        std::vector<FaceId> faces;
        Coord rhs;
        Vid v;
        int colour_index;
    };
    std::vector<Row> all_rows;
    all_rows.reserve(3 * T.n());
    for (Vid v = 0; v < T.n(); ++v) {
        if (T.is_exterior_vertex(v)) continue;
        VertexFrame frame = paths_and_regions(T, S, v);
        for (int i = 0; i < 3; ++i)
            all_rows.push_back({std::move(frame.region[i]), d.coords[v][i], v, i});
    }

    auto augmented = [&](bool with_third) {
        std::vector<std::vector<BigInt>> rows;
        rows.emplace_back(M + 1, BigInt(1));
        rows.back()[M] = d.W;  // total weight equation
        for (const Row& r : all_rows) {
            if (!with_third && r.colour_index == 2) continue;
            std::vector<BigInt> row(M + 1, BigInt(0));
            for (FaceId f : r.faces) row[f] = 1;
            row[M] = r.rhs;
            rows.push_back(std::move(row));
        }
        return rows;
    };

    std::optional<detail::IntegerSolution> sol;
    bool used_full = false;
    try {
        sol = detail::solve_fraction_free(augmented(false), M, false);
    } catch (const std::logic_error&) {
        // The reduced system was rank-deficient; retry with all equations.
        used_full = true;
        sol = detail::solve_fraction_free(augmented(true), M, false);
    }
    if (sol) {
        auto check = detail::solve_fraction_free(augmented(used_full), M, true);
        if (!check) throw std::logic_error("solver paths disagree on consistency");
        for (int j = 0; j < M; ++j)
            if (sol->num[j] * check->den != check->num[j] * sol->den)
                throw std::logic_error("solver paths disagree on a weight");
    }
    WeightSolve out;
    if (!sol) {
        out.detail = "region equations are inconsistent";
        return out;
    }

    // Exact verification of every equation against the candidate solution.
    for (const Row& r : all_rows) {
        BigInt acc = 0;
        for (FaceId f : r.faces) acc += sol->num[f];
        if (acc != BigInt(r.rhs) * sol->den) {
            out.detail = "coordinate " + std::to_string(r.colour_index + 1) + " of vertex " +
                         std::to_string(r.v) + " disagrees with the recovered weights";
            return out;
        }
    }
    BigInt total = 0;
    for (int j = 0; j < M; ++j) total += sol->num[j];
    if (total != BigInt(d.W) * sol->den) {
        out.detail = "total weight disagrees with the recovered weights";
        return out;
    }

    out.consistent = true;
    out.weights.resize(M);
    for (int j = 0; j < M; ++j) out.weights[j] = Rational(sol->num[j], sol->den);
    return out;
}

inline RecognitionResult recognize(const Triangulation& T, const Drawing& d) {
    require_drawing_shape(T, d);
    detail::Extraction ext = detail::extract_wood(T, d);
    if (!ext.ok) return std::move(ext.failure);

    if (auto defect = validate_wood(T, ext.wood))
        return {RecognitionVerdict::WoodMismatch,
                "candidate wood invalid (" + std::string(to_string(defect->code)) + ": " +
                    defect->detail + ")",
                std::nullopt,
                {}};

    WeightSolve solve = solve_weights(T, ext.wood, d);
    if (!solve.consistent)
        return {RecognitionVerdict::WoodMismatch, solve.detail, std::move(ext.wood), {}};

    for (FaceId f = 0; f < T.face_count(); ++f)
        if (solve.weights[f] <= 0)
            return {RecognitionVerdict::NonPositiveWeight,
                    "face " + std::to_string(f) + " needs weight " +
                        solve.weights[f].str(),
                    std::move(ext.wood), std::move(solve.weights)};

    return {RecognitionVerdict::WeightedSchnyder, "", std::move(ext.wood),
            std::move(solve.weights)};
}

}  // namespace schnyder
