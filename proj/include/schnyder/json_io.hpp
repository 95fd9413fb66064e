#pragma once

// JSON serialisation for every object the CLI exchanges:
//   triangulation  {"n", "exterior", "faces"}
//   wood           {"edges": [{"tail","head","colour"}...]}  (sorted)
//   weights        {"W", "weights": [per inner face]}
//   drawing        {"W", "coords": {"<vid>": [v1,v2,v3], ...}}
//   flip event     {"triangle", "direction", "kind"}
//   morph plan     {"W", "triangulation", "steps": [...]}
// Rationals travel as "p/q" strings so nothing is rounded.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "basics.hpp"
#include "drawing.hpp"
#include "flips.hpp"
#include "morph.hpp"
#include "triangulation.hpp"
#include "verify.hpp"
#include "wood.hpp"

namespace schnyder {

using Json = nlohmann::ordered_json;

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

inline void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto is_integer = [](const std::string& t) {
        const size_t start = t.size() > 1 && t[0] == '-' ? 1 : 0;
        if (t.size() == start) return false;
        for (size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!is_integer(s)) throw IoError("");
            return Rational(BigInt(s));
        }
        const std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
        if (!is_integer(ps) || !is_integer(qs)) throw IoError("");
        BigInt p(ps), q(qs);
        if (q == 0) throw IoError("");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    } catch (const std::exception&) {
        throw IoError("bad rational literal: " + s);
    }
}

// ---- triangulation ----------------------------------------------------

inline Json triangulation_to_json(const Triangulation& T) {
    Json j;
    j["n"] = T.n();
    j["exterior"] = T.exterior();
    Json faces = Json::array();
    for (const auto& f : T.faces()) faces.push_back(f);
    j["faces"] = std::move(faces);
    return j;
}

inline Triangulation triangulation_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        auto ext = j.at("exterior").get<std::array<Vid, 3>>();
        auto faces = j.at("faces").get<std::vector<std::array<Vid, 3>>>();
        return Triangulation::build(n, ext, faces);
    } catch (const Json::exception& e) {
        throw IoError(std::string("triangulation: ") + e.what());
    }
}

// ---- wood ---------------------------------------------------------------

inline Json wood_to_json(const Triangulation& T, const SchnyderWood& S) {
    std::vector<WoodArc> sorted;
    for (EdgeId e = 0; e < T.edge_count(); ++e)
        if (S.arc(e).present()) sorted.push_back(S.arc(e));
    std::sort(sorted.begin(), sorted.end(), [](const WoodArc& a, const WoodArc& b) {
        return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    Json edges = Json::array();
    for (const WoodArc& a : sorted)
        edges.push_back({{"tail", a.tail},
                         {"head", a.head},
                         {"colour", static_cast<int>(a.colour)}});
    return Json{{"edges", std::move(edges)}};
}

inline SchnyderWood wood_from_json(const Triangulation& T, const Json& j) {
    std::vector<WoodArc> arcs(T.edge_count());
    try {
        for (const Json& e : j.at("edges")) {
            Vid tail = e.at("tail").get<Vid>();
            Vid head = e.at("head").get<Vid>();
            int colour = e.at("colour").get<int>();
            if (colour < 1 || colour > 3) throw IoError("wood: colour outside 1..3");
            if (!T.adjacent(tail, head))
                throw ValidationError("wood: edge " + std::to_string(tail) + "-" +
                                      std::to_string(head) + " is not in the triangulation");
            EdgeId id = T.edge_id(tail, head);
            if (T.is_exterior_edge(id))
                throw ValidationError("wood: exterior edges carry no arc");
            if (arcs[id].present())
                throw ValidationError("wood: duplicate arc on edge " + std::to_string(tail) +
                                      "-" + std::to_string(head));
            arcs[id] = {tail, head, colour_from_index(colour - 1)};
        }
    } catch (const Json::exception& e) {
        throw IoError(std::string("wood: ") + e.what());
    }
    for (EdgeId e = 0; e < T.edge_count(); ++e)
        if (!T.is_exterior_edge(e) && !arcs[e].present()) {
            auto [u, v] = T.edge(e);
            throw ValidationError("wood: interior edge " + std::to_string(u) + "-" +
                                  std::to_string(v) + " has no arc");
        }
    return SchnyderWood::assemble(T, std::move(arcs));
}

// ---- weights -----------------------------------------------------------

inline Json weights_to_json(const std::vector<Coord>& w) {
    return Json{{"W", total_weight(w)}, {"weights", w}};
}

inline std::vector<Coord> weights_from_json(const Triangulation& T, const Json& j) {
    std::vector<Coord> w;
    try {
        w = j.at("weights").get<std::vector<Coord>>();
        if (j.contains("W") && j.at("W").get<Coord>() != total_weight(w))
            throw ValidationError("weights: declared W differs from the sum");
    } catch (const Json::exception& e) {
        throw IoError(std::string("weights: ") + e.what());
    }
    require_valid_weights(T, w);
    return w;
}

// ---- drawing -----------------------------------------------------------

inline Json coords_to_json(const Drawing& d) {
    Json coords = Json::object();
    for (size_t v = 0; v < d.coords.size(); ++v)
        coords[std::to_string(v)] = d.coords[v];
    return coords;
}

inline Json drawing_to_json(const Drawing& d) {
    return Json{{"W", d.W}, {"coords", coords_to_json(d)}};
}

inline std::vector<std::array<Coord, 3>> coords_from_json(const Json& coords) {
    std::vector<std::array<Coord, 3>> out(coords.size(), {0, 0, 0});
    for (const auto& [key, val] : coords.items()) {
        size_t v = 0;
        try {
            v = std::stoul(key);
        } catch (const std::exception&) {
            throw IoError("drawing: bad vertex key '" + key + "'");
        }
        if (v >= out.size()) throw IoError("drawing: vertex keys are not 0..n-1");
        out[v] = val.get<std::array<Coord, 3>>();
    }
    return out;
}

inline Drawing drawing_from_json(const Json& j) {
    Drawing d;
    try {
        d.W = j.at("W").get<Coord>();
        d.coords = coords_from_json(j.at("coords"));
    } catch (const Json::exception& e) {
        throw IoError(std::string("drawing: ") + e.what());
    }
    return d;
}

// ---- flip events ---------------------------------------------------------

inline Json event_to_json(const FlipEvent& ev) {
    return Json{{"triangle", ev.tri},
                {"direction", ev.dir == FlipDirection::Flip ? "flip" : "flop"},
                {"kind", ev.kind == TriangleKind::Facial ? "facial" : "separating"}};
}

inline FlipEvent event_from_json(const Json& j) {
    FlipEvent ev;
    try {
        ev.tri = j.at("triangle").get<std::array<Vid, 3>>();
        std::string dir = j.at("direction").get<std::string>();
        std::string kind = j.at("kind").get<std::string>();
        if (dir != "flip" && dir != "flop") throw IoError("event: bad direction " + dir);
        if (kind != "facial" && kind != "separating") throw IoError("event: bad kind " + kind);
        ev.dir = dir == "flip" ? FlipDirection::Flip : FlipDirection::Flop;
        ev.kind = kind == "facial" ? TriangleKind::Facial : TriangleKind::Separating;
    } catch (const Json::exception& e) {
        throw IoError(std::string("event: ") + e.what());
    }
    return ev;
}

inline Json events_to_json(const std::vector<FlipEvent>& evs) {
    Json arr = Json::array();
    for (const FlipEvent& ev : evs) arr.push_back(event_to_json(ev));
    return arr;
}

// ---- morph plans ---------------------------------------------------------

inline Json plan_to_json(const Triangulation& T, const MorphPlan& plan) {
    Json steps = Json::array();
    for (const MorphStep& s : plan.steps) {
        Json step{{"label", s.label}};
        step["event"] = s.event ? event_to_json(*s.event) : Json(nullptr);
        step["from"] = coords_to_json(s.from);
        step["to"] = coords_to_json(s.to);
        step["certified"] = s.cert.verdict == StepVerdict::Planar;
        steps.push_back(std::move(step));
    }
    return Json{{"W", plan.W},
                {"triangulation", triangulation_to_json(T)},
                {"steps", std::move(steps)}};
}

struct LoadedPlan {
    Triangulation tri;
    MorphPlan plan;
};

// Certificates are not trusted from disk; verify_plan recomputes them.
inline LoadedPlan plan_from_json(const Json& j) {
    try {
        LoadedPlan out{triangulation_from_json(j.at("triangulation")), {}};
        out.plan.W = j.at("W").get<Coord>();
        for (const Json& js : j.at("steps")) {
            MorphStep s;
            s.label = js.at("label").get<std::string>();
            if (js.contains("event") && !js.at("event").is_null())
                s.event = event_from_json(js.at("event"));
            s.from.W = out.plan.W;
            s.from.coords = coords_from_json(js.at("from"));
            s.to.W = out.plan.W;
            s.to.coords = coords_from_json(js.at("to"));
            out.plan.steps.push_back(std::move(s));
        }
        return out;
    } catch (const Json::exception& e) {
        throw IoError(std::string("plan: ") + e.what());
    }
}

}  // namespace schnyder
