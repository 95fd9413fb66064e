#pragma once

// Piecewise-linear morphs between weighted Schnyder drawings.
//
// A plan transforms the weighted drawing of (T, S_a, w_a) into the one of
// (T, S_b, w_b) on the common grid W = 6n-15: first a weight morph to the
// uniform weight 3, then
// one linear morph per facial flip and three per separating flip (spread the
// side-region weights evenly, perform the flip, relax back to uniform), and
// a final weight morph to the target weights. Flops run the mirrored
// protocol. Every step is certified exactly; a failed certificate aborts
// planning with CertificationError.

#include <string>
#include <vector>

#include "basics.hpp"
#include "drawing.hpp"
#include "flips.hpp"
#include "triangulation.hpp"
#include "verify.hpp"
#include "wood.hpp"

namespace schnyder {

struct MorphStep {
    std::string label;
    std::optional<FlipEvent> event;  // set on flip/flop steps
    Drawing from;
    Drawing to;
    StepCertificate cert;
};

struct MorphPlan {
    Coord W = 0;
    std::vector<MorphStep> steps;
};

// Evens out the three side-region weights of a flippable triangle by moving
// single units from a maximum-weight face of a surplus region to a
// minimum-weight face of a deficit region (lowest region index, then lowest
// face id). The wood must show the flippable pattern on ev.tri.
inline std::vector<Coord> rebalance_weights(const Triangulation& T, const SchnyderWood& S,
                                            const std::vector<Coord>& w, const FlipEvent& ev) {
    FlipRegions reg = region_weights(T, S, w, ev);
    const Coord sum = reg.delta[0] + reg.delta[1] + reg.delta[2];
    if (sum % 3 != 0)
        throw ValidationError("rebalance_weights: region weights not divisible by 3");
    const Coord target = sum / 3;
    std::vector<Coord> out = w;
    std::array<Coord, 3> cur = reg.delta;
    auto pick = [&](int i, bool maximum) {
        FaceId best = -1;
        for (FaceId f : reg.faces[i]) {
            if (best < 0 || (maximum ? out[f] > out[best] : out[f] < out[best])) best = f;
        }
        return best;
    };
    while (true) {
        int src = -1, dst = -1;
        for (int i = 0; i < 3 && src < 0; ++i)
            if (cur[i] > target) src = i;
        if (src < 0) break;
        for (int j = 0; j < 3 && dst < 0; ++j)
            if (cur[j] < target) dst = j;
        FaceId f_src = pick(src, true), f_dst = pick(dst, false);
        if (out[f_src] <= 1)
            throw ValidationError("rebalance_weights: would drive a face weight to zero");
        --out[f_src];
        ++out[f_dst];
        --cur[src];
        ++cur[dst];
    }
    return out;
}

namespace detail {

inline MorphStep make_step(const Triangulation& T, std::string label,
                           std::optional<FlipEvent> ev, Drawing from, Drawing to) {
    MorphStep step{std::move(label), ev, std::move(from), std::move(to), {}};
    step.cert = certify_step(T, step.from, step.to);
    if (step.cert.verdict != StepVerdict::Planar)
        throw CertificationError("morph step '" + step.label + "' collapses face " +
                                 std::to_string(step.cert.face));
    return step;
}

}  // namespace detail

// Single linear morph changing the weights under a fixed wood.
inline MorphStep morph_weights(const Triangulation& T, const SchnyderWood& S,
                               const std::vector<Coord>& w_from,
                               const std::vector<Coord>& w_to, std::string label = "weights") {
    if (total_weight(w_from) != total_weight(w_to))
        throw ValidationError("morph_weights: totals differ");
    return detail::make_step(T, std::move(label), std::nullopt, draw(T, S, w_from),
                             draw(T, S, w_to));
}

// Appends the steps realising one flip/flop event at the uniform working
// weight `s` (3 in full plans); returns the resulting wood and updates `d`.
inline SchnyderWood append_flip_steps(const Triangulation& T, const SchnyderWood& S,
                                      Coord s, Drawing& d, const FlipEvent& ev,
                                      std::vector<MorphStep>& steps) {
    const std::vector<Coord> uni = uniform_weights(T, s);
    const char* tag = ev.dir == FlipDirection::Flip ? "flip" : "flop";
    if (ev.kind == TriangleKind::Facial) {
        FlipOutcome out = perform_flip(T, S, uni, d, ev);
        steps.push_back(
            detail::make_step(T, std::string(tag) + ":facial", ev, d, out.drawing));
        d = std::move(out.drawing);
        return std::move(out.wood);
    }
    // Separating: regions are balanced in the flippable configuration.
    const SchnyderWood base =
        ev.dir == FlipDirection::Flip ? S : apply_flip(T, S, ev);
    std::vector<Coord> balanced = rebalance_weights(T, base, uni, ev);
    Drawing spread = draw(T, S, balanced);
    steps.push_back(detail::make_step(T, std::string(tag) + ":separating:balance", ev, d,
                                      std::move(spread)));
    FlipOutcome out = perform_flip(T, S, balanced, steps.back().to, ev);
    steps.push_back(detail::make_step(T, std::string(tag) + ":separating:core", ev,
                                      steps.back().to, std::move(out.drawing)));
    Drawing relaxed = draw(T, out.wood, uni);
    steps.push_back(detail::make_step(T, std::string(tag) + ":separating:relax", ev,
                                      steps.back().to, std::move(relaxed)));
    d = steps.back().to;
    return std::move(out.wood);
}

// Full plan between two weighted Schnyder drawings given by their woods and
// weight distributions (each summing to 2n-5, scaled by 3 internally, or
// already to 6n-15).
inline MorphPlan plan_morph(const Triangulation& T, const SchnyderWood& S_a,
                            const std::vector<Coord>& w_a, const SchnyderWood& S_b,
                            const std::vector<Coord>& w_b) {
    for (const auto* S : {&S_a, &S_b})
        if (auto defect = validate_wood(T, *S))
            throw ValidationError("plan_morph: invalid wood (" +
                                  std::string(to_string(defect->code)) + ": " + defect->detail +
                                  ")");
    require_valid_weights(T, w_a);
    require_valid_weights(T, w_b);
    const Coord base_total = 2 * static_cast<Coord>(T.n()) - 5;
    // Accept weights at the base scale (summing to 2n-5, scaled by 3 here) or
    // already at the working scale (summing to 6n-15).
    auto normalise = [&](std::vector<Coord> w) {
        const Coord total = total_weight(w);
        if (total == base_total)
            for (Coord& x : w) x *= 3;
        else if (total != 3 * base_total)
            throw ValidationError("plan_morph: weights must sum to 2n-5 or 6n-15");
        return w;
    };
    const std::vector<Coord> w3a = normalise(w_a), w3b = normalise(w_b);
    const std::vector<Coord> uni = uniform_weights(T, 3);

    MorphPlan plan;
    plan.W = 3 * base_total;
    Drawing d = draw(T, S_a, w3a);
    plan.steps.push_back(
        detail::make_step(T, "weights:start", std::nullopt, d, draw(T, S_a, uni)));
    d = plan.steps.back().to;

    SchnyderWood S = S_a;
    for (const FlipEvent& ev : flip_sequence(T, S_a, S_b))
        S = append_flip_steps(T, S, 3, d, ev, plan.steps);
    if (!(S == S_b))
        throw ValidationError("plan_morph: flip sequence did not reach the target wood");

    plan.steps.push_back(
        detail::make_step(T, "weights:end", std::nullopt, d, draw(T, S_b, w3b)));
    return plan;
}

struct PlanReport {
    bool ok = true;
    std::string problem;
};

// Re-checks a finished plan: step continuity, exact certification of every
// step, and grid bounds [0, W] on every coordinate.
inline PlanReport verify_plan(const Triangulation& T, const MorphPlan& plan) {
    auto fail = [](std::string why) { return PlanReport{false, std::move(why)}; };
    if (plan.steps.empty()) return fail("plan has no steps");
    for (size_t k = 0; k < plan.steps.size(); ++k) {
        const MorphStep& st = plan.steps[k];
        if (st.from.coords.size() != static_cast<size_t>(T.n()) ||
            st.to.coords.size() != static_cast<size_t>(T.n()))
            return fail("step " + std::to_string(k) + ": drawing size mismatch");
        if (st.from.W != plan.W || st.to.W != plan.W)
            return fail("step " + std::to_string(k) + ": weight total mismatch");
        if (k > 0 && !(plan.steps[k - 1].to == st.from))
            return fail("step " + std::to_string(k) + ": does not continue previous step");
        if (!on_grid(st.from, plan.W) || !on_grid(st.to, plan.W))
            return fail("step " + std::to_string(k) + ": coordinates leave the grid");
        StepCertificate cert = certify_step(T, st.from, st.to);
        if (cert.verdict != StepVerdict::Planar)
            return fail("step " + std::to_string(k) + " (" + st.label + "): face " +
                        std::to_string(cert.face) + " collapses");
    }
    return {};
}

}  // namespace schnyder
