// Acceptance suite. Each numbered property prints exactly one line,
// [PASS] or [FAIL], and the process exit code is the number of failures.
//
//  1. every frame of every planned morph lies on the (6n-15) integer grid
//  2. every planned morph step is certified planar by the exact checker
//  3. plan lengths are quadratically bounded; on 4-connected instances the
//     maximal flip sequence is bounded by the dual-distance sum
//  4. closed-form coordinate updates of flips equal full region recomputation
//  5. flips yield valid woods and flip/flop are exact inverses
//  6. all maximal flip sequences of a triangulation reach the same sink wood
//  7. uniform-weight drawings are planar, injective, on the (2n-5) grid
//  8. recognition inverts drawing exactly; a drawing built from a signed
//     weight assignment is rejected as NonPositiveWeight
//  9. some separating flip fails as a single linear morph but passes the
//     balance/flip/relax protocol
// 10. constructed collapsing motions are reported with the exact witness
//     time of an independent quadratic solver

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <schnyder/schnyder.hpp>

#include "support/enumerate.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace schnyder;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::string detail;  // first failure, or pass statistics

    Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

    void fail(std::string d) {
        if (ok) {
            ok = false;
            detail = std::move(d);
        }
    }
    void note(std::string d) {
        if (ok) detail = std::move(d);
    }
};

std::string describe(int i, int n) {
    return "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
}

// Independent re-implementation of the certificate's witness rule, applied
// to a polynomial recovered by rational interpolation (not the library's
// coefficients): the reported time is 0, the linear root, the parabola
// vertex, or 1 -- the first of these with non-positive value.
std::optional<Rational> oracle_witness(const testsupport::InterpolatedPoly& p) {
    const Rational at0 = p.C, at1 = p.A + p.B + p.C;
    if (at0 <= 0) return Rational(0);
    if (p.A == 0) {
        if (at1 <= 0) return -p.C / p.B;
        return std::nullopt;
    }
    if (p.A > 0) {
        Rational tv = -p.B / (2 * p.A);
        if (tv > 0 && tv < 1) {
            if (4 * p.A * p.C - p.B * p.B <= 0) return tv;
            return std::nullopt;
        }
    }
    if (at1 <= 0) return Rational(1);
    return std::nullopt;
}

StepCertificate oracle_certificate(const Triangulation& T, const Drawing& from,
                                   const Drawing& to) {
    StepCertificate best;
    for (FaceId f = 0; f < T.face_count(); ++f) {
        auto w = oracle_witness(testsupport::interpolate_area_poly(T, from, to, f));
        if (!w) continue;
        if (best.verdict == StepVerdict::Planar || *w < best.t_star) {
            best.verdict = StepVerdict::CollapsedFace;
            best.face = f;
            best.t_star = *w;
        }
    }
    return best;
}

bool projection_injective(const Drawing& d) {
    std::vector<std::array<Coord, 2>> pts = project(d);
    std::sort(pts.begin(), pts.end());
    return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

}  // namespace

int main() {
    const auto t_begin = std::chrono::steady_clock::now();
    std::vector<Criterion> crit = {
        {1, "grid bound: every morph frame on the (6n-15) integer grid"},
        {2, "planarity: every morph step certified exactly"},
        {3, "step count: plans quadratic, 4-connected within dual-distance sum"},
        {4, "flip updates: closed-form coordinates equal full recomputation"},
        {5, "flip validity: woods stay valid, flip/flop invert exactly"},
        {6, "confluence: all maximal flip sequences reach the same sink"},
        {7, "baseline: uniform drawings planar, injective, on the (2n-5) grid"},
        {8, "recognition: exact round-trip, signed construction rejected"},
        {9, "separating flips: naive morph fails, balanced protocol passes"},
        {10, "collapse reports: witness times match an independent solver"},
    };
    auto& c1 = crit[0];
    auto& c2 = crit[1];
    auto& c3 = crit[2];
    auto& c4 = crit[3];
    auto& c5 = crit[4];
    auto& c6 = crit[5];
    auto& c7 = crit[6];
    auto& c8 = crit[7];
    auto& c9 = crit[8];
    auto& c10 = crit[9];

    // ----------------------------------------------------------------- corpus
    // 500 random instances shared by properties 1-5 and 7: triangulation,
    // two random woods, uniform weight 1 at both ends of the plan. Sizes
    // cover [10, 200] with emphasis on small instances so the whole corpus
    // stays well under the runtime budget; the extremes are always included.
    long long plans = 0, frames = 0, flips_checked = 0, fourconn = 0;
    long long inverse_checks = 0, baseline_drawings = 0;
    {
        Rng rng(20260825);
        for (int i = 0; i < 500; ++i) {
            int n;
            if (i == 0) {
                n = 200;
            } else if (i == 1) {
                n = 10;
            } else {
                const auto r = rng.below(100);
                if (r < 60)
                    n = 10 + static_cast<int>(rng.below(21));
                else if (r < 85)
                    n = 31 + static_cast<int>(rng.below(30));
                else if (r < 95)
                    n = 61 + static_cast<int>(rng.below(60));
                else
                    n = 121 + static_cast<int>(rng.below(80));
            }
            Triangulation T = random_triangulation(n, rng);
            SchnyderWood Sa = random_wood(T, rng);
            SchnyderWood Sb = random_wood(T, rng);
            const std::vector<Coord> ones = uniform_weights(T, 1);
            const std::string who = describe(i, n);

            MorphPlan plan;
            try {
                plan = plan_morph(T, Sa, ones, Sb, ones);
            } catch (const std::exception& e) {
                const std::string why = who + ": plan construction failed: " + e.what();
                for (auto* c : {&c1, &c2, &c3, &c4, &c5, &c7}) c->fail(why);
                continue;
            }
            ++plans;

            // 1: grid bound, exact.
            const Coord W = 6 * static_cast<Coord>(n) - 15;
            if (plan.W != W) c1.fail(who + ": plan grid is " + std::to_string(plan.W));
            for (size_t k = 0; k < plan.steps.size(); ++k) {
                const MorphStep& st = plan.steps[k];
                if (!on_grid(st.from, W) || !on_grid(st.to, W)) {
                    c1.fail(who + ": step " + std::to_string(k) + " leaves [0, " +
                            std::to_string(W) + "]");
                    break;
                }
            }
            frames += static_cast<long long>(plan.steps.size()) + 1;

            // 2: exact certification of every step.
            for (size_t k = 0; k < plan.steps.size(); ++k) {
                StepCertificate cert = certify_step(T, plan.steps[k].from, plan.steps[k].to);
                if (cert.verdict != StepVerdict::Planar) {
                    c2.fail(who + ": step " + std::to_string(k) + " (" + plan.steps[k].label +
                            ") collapses face " + std::to_string(cert.face));
                    break;
                }
                if (k > 0 && !(plan.steps[k - 1].to == plan.steps[k].from)) {
                    c2.fail(who + ": step " + std::to_string(k) + " breaks continuity");
                    break;
                }
            }

            // 3: quadratic length bound; dual-distance bound when 4-connected.
            const long long bound = 8LL * n * n;
            if (static_cast<long long>(plan.steps.size()) > bound)
                c3.fail(who + ": " + std::to_string(plan.steps.size()) + " steps > 8n^2");
            if (is_four_connected(T)) {
                ++fourconn;
                const long long dd = dual_distance_sum(T);
                for (const SchnyderWood* S : {&Sa, &Sb}) {
                    const auto len = static_cast<long long>(
                        maximal_flip_sequence(T, *S).events.size());
                    if (len > dd)
                        c3.fail(who + ": maximal sequence " + std::to_string(len) +
                                " exceeds dual-distance sum " + std::to_string(dd));
                }
            }

            // 4 and 5: replay the plan, tracking the wood; compare every
            // closed-form coordinate prediction against a full redraw, check
            // wood validity and exact invertibility after every event.
            const std::vector<Coord> uni3 = uniform_weights(T, 3);
            SchnyderWood S = Sa;
            std::vector<Coord> balanced;  // weights of the pending separating flip
            bool replay_ok = true;
            for (size_t k = 0; k < plan.steps.size() && replay_ok; ++k) {
                const MorphStep& st = plan.steps[k];
                if (!st.event) continue;
                const FlipEvent& ev = *st.event;
                const std::string where = who + ": step " + std::to_string(k) + " (" +
                                          st.label + ")";
                try {
                    if (ev.kind == TriangleKind::Facial) {
                        SchnyderWood next = apply_flip(T, S, ev);
                        ++flips_checked;
                        if (!(st.to == draw(T, next, uni3))) {
                            c4.fail(where + ": prediction differs from recomputation");
                            replay_ok = false;
                        }
                        if (auto defect = validate_wood(T, next)) {
                            c5.fail(where + ": post-flip wood invalid: " + defect->detail);
                            replay_ok = false;
                        }
                        FlipEvent inv = ev;
                        inv.dir = ev.dir == FlipDirection::Flip ? FlipDirection::Flop
                                                                : FlipDirection::Flip;
                        if (!(apply_flip(T, next, inv) == S)) {
                            c5.fail(where + ": inverse event does not restore the wood");
                            replay_ok = false;
                        }
                        ++inverse_checks;
                        S = std::move(next);
                    } else if (st.label.ends_with(":balance")) {
                        const SchnyderWood base =
                            ev.dir == FlipDirection::Flip ? S : apply_flip(T, S, ev);
                        balanced = rebalance_weights(T, base, uni3, ev);
                        if (!(st.to == draw(T, S, balanced))) {
                            c4.fail(where + ": balanced drawing differs from recomputation");
                            replay_ok = false;
                        }
                    } else if (st.label.ends_with(":core")) {
                        SchnyderWood next = apply_flip(T, S, ev);
                        ++flips_checked;
                        if (!(st.to == draw(T, next, balanced))) {
                            c4.fail(where + ": prediction differs from recomputation");
                            replay_ok = false;
                        }
                        if (auto defect = validate_wood(T, next)) {
                            c5.fail(where + ": post-flip wood invalid: " + defect->detail);
                            replay_ok = false;
                        }
                        FlipEvent inv = ev;
                        inv.dir = ev.dir == FlipDirection::Flip ? FlipDirection::Flop
                                                                : FlipDirection::Flip;
                        if (!(apply_flip(T, next, inv) == S)) {
                            c5.fail(where + ": inverse event does not restore the wood");
                            replay_ok = false;
                        }
                        ++inverse_checks;
                        S = std::move(next);
                    } else if (st.label.ends_with(":relax")) {
                        if (!(st.to == draw(T, S, uni3))) {
                            c4.fail(where + ": relaxed drawing differs from recomputation");
                            replay_ok = false;
                        }
                    }
                } catch (const std::exception& e) {
                    c4.fail(where + ": replay failed: " + e.what());
                    c5.fail(where + ": replay failed: " + e.what());
                    replay_ok = false;
                }
            }
            if (replay_ok && !(S == Sb))
                c5.fail(who + ": replayed plan does not end at the target wood");

            // 7: uniform weight-1 drawings at both endpoints.
            for (const SchnyderWood* Sp : {&Sa, &Sb}) {
                Drawing d = draw(T, *Sp, ones);
                ++baseline_drawings;
                if (!is_planar(T, d)) {
                    c7.fail(who + ": uniform drawing not planar");
                    break;
                }
                if (!projection_injective(d)) {
                    c7.fail(who + ": two vertices project to the same point");
                    break;
                }
                if (!on_grid(d, 2 * static_cast<Coord>(n) - 5)) {
                    c7.fail(who + ": uniform drawing leaves the (2n-5) grid");
                    break;
                }
            }

            if ((i + 1) % 100 == 0)
                std::cerr << "corpus: " << (i + 1) << "/500 instances done\n";
        }
    }
    {
        std::ostringstream s;
        s << plans << " plans, " << frames << " frames";
        c1.note(s.str());
        c2.note(std::to_string(frames - plans) + " steps certified");
        c3.note(std::to_string(fourconn) + " four-connected instances checked");
        c4.note(std::to_string(flips_checked) + " flips recomputed");
        c5.note(std::to_string(inverse_checks) + " inverse checks");
        c7.note(std::to_string(baseline_drawings) + " drawings checked");
    }
    if (fourconn == 0)
        c3.fail("corpus contained no four-connected instance");

    // ------------------------------------------------------------ confluence
    // Exhaustive over all triangulations with n <= 9 and all their woods:
    // the deterministic maximal sequence and 50 randomized ones per wood all
    // stop at one sink per triangulation.
    {
        Rng rng(66);
        const int expected_classes[] = {1, 1, 2, 5, 14, 50};
        long long woods_total = 0, sequences = 0;
        for (int n = 4; n <= 9 && c6.ok; ++n) {
            std::vector<Triangulation> reps = testsupport::all_triangulations(n);
            if (static_cast<int>(reps.size()) != expected_classes[n - 4]) {
                c6.fail("n=" + std::to_string(n) + ": enumerated " +
                        std::to_string(reps.size()) + " triangulations, expected " +
                        std::to_string(expected_classes[n - 4]));
                break;
            }
            for (size_t ti = 0; ti < reps.size() && c6.ok; ++ti) {
                const Triangulation& T = reps[ti];
                std::vector<SchnyderWood> woods = enumerate_woods(T);
                if (woods.empty()) {
                    c6.fail("n=" + std::to_string(n) + " class " + std::to_string(ti) +
                            ": no woods enumerated");
                    break;
                }
                woods_total += static_cast<long long>(woods.size());
                const SchnyderWood sink = maximal_flip_sequence(T, woods.front()).sink;
                if (!flippable_triangles(T, sink).empty()) {
                    c6.fail("n=" + std::to_string(n) + " class " + std::to_string(ti) +
                            ": sink still has a flippable triangle");
                    break;
                }
                for (size_t wi = 0; wi < woods.size() && c6.ok; ++wi) {
                    if (!(maximal_flip_sequence(T, woods[wi]).sink == sink)) {
                        c6.fail("n=" + std::to_string(n) + " class " + std::to_string(ti) +
                                " wood " + std::to_string(wi) +
                                ": deterministic sequence reaches a different sink");
                        break;
                    }
                    ++sequences;
                    for (int r = 0; r < 50; ++r) {
                        if (!(maximal_flip_sequence(T, woods[wi], FlipPolicy::Random, &rng)
                                  .sink == sink)) {
                            c6.fail("n=" + std::to_string(n) + " class " +
                                    std::to_string(ti) + " wood " + std::to_string(wi) +
                                    ": randomized sequence reaches a different sink");
                            break;
                        }
                        ++sequences;
                    }
                }
            }
        }
        c6.note(std::to_string(woods_total) + " woods, " + std::to_string(sequences) +
                " maximal sequences");
        std::cerr << "confluence done\n";
    }

    // ------------------------------------------------------------ recognition
    // 10^4 fuzz round-trips over random instances and weights, then the
    // constructed drawing whose only consistent weight assignment has a
    // negative entry.
    {
        Rng rng(888);
        const int samples = 10000;
        long long done = 0;
        for (int k = 0; k < samples && c8.ok; ++k) {
            int n;
            const auto band = rng.below(100);
            if (band < 90)
                n = 4 + static_cast<int>(rng.below(21));
            else if (band < 98)
                n = 25 + static_cast<int>(rng.below(26));
            else
                n = 51 + static_cast<int>(rng.below(50));
            Triangulation T = random_triangulation(n, rng);
            SchnyderWood S = random_wood(T, rng);
            const Coord F = T.face_count();
            std::vector<Coord> w =
                random_weights(T, F + static_cast<Coord>(rng.below(4 * n)), rng);
            const std::string who = "sample " + std::to_string(k) +
                                    " (n=" + std::to_string(n) + ")";
            RecognitionResult rec = recognize(T, draw(T, S, w));
            if (rec.verdict != RecognitionVerdict::WeightedSchnyder) {
                c8.fail(who + ": verdict " + std::string(to_string(rec.verdict)) + " (" +
                        rec.detail + ")");
                break;
            }
            if (!rec.wood || !(*rec.wood == S)) {
                c8.fail(who + ": recovered wood differs");
                break;
            }
            for (FaceId f = 0; f < T.face_count(); ++f)
                if (rec.weights[f] != Rational(w[f])) {
                    c8.fail(who + ": weight of face " + std::to_string(f) + " differs");
                    break;
                }
            ++done;
            if ((k + 1) % 2000 == 0)
                std::cerr << "recognition fuzz: " << (k + 1) << "/" << samples << "\n";
        }
        if (c8.ok) {
            Triangulation T = fixtures::nonpositive_tri();
            Drawing d{23, fixtures::nonpositive_coords()};
            RecognitionResult rec = recognize(T, d);
            if (rec.verdict != RecognitionVerdict::NonPositiveWeight)
                c8.fail("signed-weight construction: verdict " +
                        std::string(to_string(rec.verdict)) + " (" + rec.detail + ")");
            else
                c8.note(std::to_string(done) +
                        " exact round-trips; signed construction rejected");
        }
    }

    // ---------------------------------------------- separating-flip necessity
    // Search a deterministic family of skewed weight vectors on the stacked
    // octahedron for one whose separating flip collapses a face as a single
    // linear morph while the balance/flip/relax protocol certifies.
    {
        Triangulation T = fixtures::stacked_octahedron();
        SchnyderWood S1 = fixtures::stacked_wood_separating(T);
        std::vector<FlipEvent> seps;
        for (const FlipEvent& ev : flippable_triangles(T, S1))
            if (ev.kind == TriangleKind::Separating) seps.push_back(ev);
        if (seps.size() != 1) {
            c9.fail("expected exactly one separating flippable triangle, found " +
                    std::to_string(seps.size()));
        } else {
            const FlipEvent ev = seps.front();
            const Coord levels[] = {1, 6, 40};
            long long naive_failures = 0, protocol_passes = 0;
            std::optional<std::vector<Coord>> witness_weights;
            std::vector<Coord> w(T.face_count());
            for (long long code = 0; code < 19683; ++code) {  // 3^9 combinations
                long long c = code;
                for (FaceId f = 0; f < T.face_count(); ++f) {
                    w[f] = levels[c % 3];
                    c /= 3;
                }
                const Drawing before = draw(T, S1, w);
                FlipOutcome naive = perform_flip(T, S1, w, before, ev);
                if (certify_step(T, before, naive.drawing).verdict == StepVerdict::Planar)
                    continue;
                ++naive_failures;
                // Balance the side regions, flip, relax back to the original
                // weights; all three linear morphs must certify.
                std::vector<Coord> bal;
                try {
                    bal = rebalance_weights(T, S1, w, ev);
                } catch (const ValidationError&) {
                    continue;  // this skew cannot be balanced without a zero
                }
                const Drawing spread = draw(T, S1, bal);
                FlipOutcome core = perform_flip(T, S1, bal, spread, ev);
                const Drawing after = draw(T, core.wood, w);
                if (certify_step(T, before, spread).verdict == StepVerdict::Planar &&
                    certify_step(T, spread, core.drawing).verdict == StepVerdict::Planar &&
                    certify_step(T, core.drawing, after).verdict == StepVerdict::Planar) {
                    ++protocol_passes;
                    if (!witness_weights) witness_weights = w;
                }
            }
            if (!witness_weights) {
                c9.fail("no skewed weight vector separates the naive morph from the "
                        "protocol (" +
                        std::to_string(naive_failures) + " naive failures)");
            } else {
                std::ostringstream s;
                s << protocol_passes << " witnesses; first weights:";
                for (Coord x : *witness_weights) s << ' ' << x;
                c9.note(s.str());
            }
        }
        std::cerr << "separating-flip search done\n";
    }

    // ------------------------------------------------------ collapse reports
    // Constructed collapsing motions: an interior vertex teleported onto an
    // exterior corner (20 random instances), plus hand-placed quadratics
    // exercising the parabola-vertex, linear-root and already-collapsed
    // branches. Certificates must equal the independent solver exactly.
    {
        Rng rng(1010);
        long long cases = 0;
        for (int j = 0; j < 20 && c10.ok; ++j) {
            const int n = 6 + 2 * j;
            Triangulation T = random_triangulation(n, rng);
            SchnyderWood S = random_wood(T, rng);
            Drawing from = draw(T, S, uniform_weights(T, 1));
            Drawing to = from;
            const Vid v = T.apex(0, 1);
            to.coords[v] = {from.W, 0, 0};  // onto the first exterior corner
            StepCertificate cert = certify_step(T, from, to);
            StepCertificate want = oracle_certificate(T, from, to);
            const std::string who = "teleport case " + std::to_string(j) +
                                    " (n=" + std::to_string(n) + ")";
            if (cert.verdict != StepVerdict::CollapsedFace)
                c10.fail(who + ": no collapse reported");
            else if (want.verdict != StepVerdict::CollapsedFace)
                c10.fail(who + ": oracle finds no collapse");
            else if (cert.face != want.face || cert.t_star != want.t_star)
                c10.fail(who + ": certificate (face " + std::to_string(cert.face) + ", t=" +
                         rational_to_string(cert.t_star) + ") vs oracle (face " +
                         std::to_string(want.face) + ", t=" +
                         rational_to_string(want.t_star) + ")");
            else
                ++cases;
        }
        if (c10.ok) {
            Triangulation T = fixtures::k4();
            const FaceId f01 = T.face_with(0, 1);
            struct HandCase {
                const char* name;
                Drawing from, to;
                Rational t;
            };
            const HandCase hand[] = {
                // 2*area of the face at edge 0-1 is 64t^2 - 64t + 16: the
                // parabola touches zero at its vertex t = 1/2.
                {"parabola vertex",
                 {8, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {2, 2, 0}}},
                 {8, {{0, 0, 0}, {0, -8, 0}, {0, 8, 0}, {2, -6, 0}}},
                 Rational(1, 2)},
                // Only the interior vertex moves: 16 - 32t, linear root 1/2.
                {"linear root",
                 {8, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {2, 2, 0}}},
                 {8, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {2, -2, 0}}},
                 Rational(1, 2)},
                // The interior vertex starts on a corner: collapsed at t = 0.
                {"collapsed start",
                 {8, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {0, 0, 0}}},
                 {8, {{0, 0, 0}, {8, 0, 0}, {0, 8, 0}, {2, 2, 0}}},
                 Rational(0)},
            };
            for (const HandCase& h : hand) {
                StepCertificate cert = certify_step(T, h.from, h.to);
                StepCertificate want = oracle_certificate(T, h.from, h.to);
                if (cert.verdict != StepVerdict::CollapsedFace || cert.face != f01 ||
                    cert.t_star != h.t) {
                    c10.fail(std::string(h.name) + ": certificate (face " +
                             std::to_string(cert.face) + ", t=" +
                             rational_to_string(cert.t_star) + "), expected (face " +
                             std::to_string(f01) + ", t=" + rational_to_string(h.t) + ")");
                    break;
                }
                if (want.verdict != StepVerdict::CollapsedFace || cert.face != want.face ||
                    cert.t_star != want.t_star) {
                    c10.fail(std::string(h.name) + ": oracle disagrees");
                    break;
                }
                ++cases;
            }
        }
        c10.note(std::to_string(cases) + " collapse certificates matched");
    }

    // ----------------------------------------------------------------- report
    int failures = 0;
    for (const Criterion& c : crit) {
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
        if (!c.ok) ++failures;
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t_begin)
                          .count();
    std::cout << "acceptance: " << (10 - failures) << "/10 passed in " << secs << "s\n";
    return failures;
}
