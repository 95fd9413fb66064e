// Command-line front end.
//
// Subcommands:
//   gen        seeded random triangulation (optionally a wood / weights too)
//   wood       canonical Schnyder wood of a triangulation
//   draw       weighted Schnyder drawing from wood + face weights
//   flips      flippable and floppable triangles of a wood
//   flipseq    flip/flop sequence turning one wood into another
//   morph      planarity-certified piecewise-linear morph between drawings
//   verify     re-check a stored morph plan step by step
//   recognize  decide whether coordinates form a weighted Schnyder drawing
//
// Exit codes: 0 success, 1 invalid input, 2 certification failure,
// 3 I/O failure, 4 internal error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <schnyder/schnyder.hpp>

namespace {

using namespace schnyder;

Triangulation load_triangulation(const std::string& path) {
    return triangulation_from_json(load_json(path));
}

SchnyderWood load_wood_checked(const Triangulation& T, const std::string& path) {
    SchnyderWood S = wood_from_json(T, load_json(path));
    if (auto defect = validate_wood(T, S))
        throw ValidationError(path + ": not a Schnyder wood (" +
                              std::string(to_string(defect->code)) + ": " + defect->detail +
                              ")");
    return S;
}

int run(int argc, char** argv) {
    CLI::App app{"Weighted Schnyder drawings, flips, and certified morphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a seeded random triangulation");
    int gen_n = 12;
    uint64_t gen_seed = 1;
    int gen_walk = -1;
    Coord gen_total = -1;
    std::string gen_out, gen_wood_out, gen_weights_out;
    gen->add_option("--n", gen_n, "vertex count (>= 4)")->required();
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_option("--out", gen_out, "triangulation output path")->required();
    gen->add_option("--wood-out", gen_wood_out, "also write a random wood here");
    gen->add_option("--weights-out", gen_weights_out, "also write random weights here");
    gen->add_option("--total", gen_total, "weight total (default: one per face)");
    gen->add_option("--walk", gen_walk, "wood walk length (default 3n)");

    // ---- wood ----
    auto* wood = app.add_subcommand("wood", "canonical Schnyder wood");
    std::string wood_in, wood_out;
    wood->add_option("--input", wood_in, "triangulation JSON")->required();
    wood->add_option("--out", wood_out, "wood output path")->required();

    // ---- draw ----
    auto* draw_cmd = app.add_subcommand("draw", "weighted Schnyder drawing");
    std::string draw_in, draw_wood, draw_weights, draw_out, draw_svg;
    draw_cmd->add_option("--input", draw_in, "triangulation JSON")->required();
    draw_cmd->add_option("--wood", draw_wood, "wood JSON")->required();
    draw_cmd->add_option("--weights", draw_weights, "weights JSON (default: all 1)");
    draw_cmd->add_option("--out", draw_out, "drawing output path")->required();
    draw_cmd->add_option("--svg", draw_svg, "also render the drawing to this SVG file");

    // ---- flips ----
    auto* flips_cmd = app.add_subcommand("flips", "list flippable/floppable triangles");
    std::string flips_in, flips_wood, flips_out;
    flips_cmd->add_option("--input", flips_in, "triangulation JSON")->required();
    flips_cmd->add_option("--wood", flips_wood, "wood JSON")->required();
    flips_cmd->add_option("--out", flips_out, "output path (default: stdout)");

    // ---- flipseq ----
    auto* seq = app.add_subcommand("flipseq", "flip/flop sequence between two woods");
    std::string seq_in, seq_a, seq_b, seq_out;
    seq->add_option("--input", seq_in, "triangulation JSON")->required();
    seq->add_option("--wood-a", seq_a, "source wood JSON")->required();
    seq->add_option("--wood-b", seq_b, "target wood JSON")->required();
    seq->add_option("--out", seq_out, "output path (default: stdout)");

    // ---- morph ----
    auto* morph = app.add_subcommand("morph", "certified morph between two drawings");
    std::string mo_in, mo_wa, mo_ww_a, mo_wb, mo_ww_b, mo_out, mo_svg;
    int mo_samples = 8;
    morph->add_option("--input", mo_in, "triangulation JSON")->required();
    morph->add_option("--wood-a", mo_wa, "source wood JSON")->required();
    morph->add_option("--weights-a", mo_ww_a, "source weights JSON")->required();
    morph->add_option("--wood-b", mo_wb, "target wood JSON")->required();
    morph->add_option("--weights-b", mo_ww_b, "target weights JSON")->required();
    morph->add_option("--out", mo_out, "plan output path")->required();
    morph->add_option("--svg", mo_svg, "directory for rendered frames");
    morph->add_option("--samples", mo_samples, "frames per step (with --svg)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "re-certify a stored morph plan");
    std::string ver_plan;
    verify->add_option("--plan", ver_plan, "plan JSON")->required();

    // ---- recognize ----
    auto* rec = app.add_subcommand("recognize", "recognize a weighted Schnyder drawing");
    std::string rec_in, rec_drawing, rec_out;
    rec->add_option("--input", rec_in, "triangulation JSON")->required();
    rec->add_option("--coords,--drawing", rec_drawing, "drawing coordinates JSON")->required();
    rec->add_option("--out", rec_out, "result output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        Rng rng(gen_seed);
        Triangulation T = random_triangulation(gen_n, rng);
        save_json(gen_out, triangulation_to_json(T));
        if (!gen_wood_out.empty())
            save_json(gen_wood_out, wood_to_json(T, random_wood(T, rng, gen_walk)));
        if (!gen_weights_out.empty()) {
            Coord total = gen_total < 0 ? static_cast<Coord>(T.face_count()) : gen_total;
            save_json(gen_weights_out, weights_to_json(random_weights(T, total, rng)));
        }
        std::cout << "n=" << T.n() << " faces=" << T.face_count() << " seed=" << gen_seed
                  << "\n";
        return 0;
    }

    if (*wood) {
        Triangulation T = load_triangulation(wood_in);
        SchnyderWood S = compute_wood(T);
        save_json(wood_out, wood_to_json(T, S));
        std::cout << "computed wood on " << T.n() << " vertices\n";
        return 0;
    }

    if (*draw_cmd) {
        Triangulation T = load_triangulation(draw_in);
        SchnyderWood S = load_wood_checked(T, draw_wood);
        std::vector<Coord> w = draw_weights.empty()
                                   ? uniform_weights(T, 1)
                                   : weights_from_json(T, load_json(draw_weights));
        Drawing d = draw(T, S, w);
        save_json(draw_out, drawing_to_json(d));
        if (!draw_svg.empty()) {
            std::ofstream out(draw_svg);
            if (!out) throw IoError("cannot write " + draw_svg);
            out << svg_of_drawing(T, d);
        }
        std::cout << "W=" << d.W << " planar=" << (is_planar(T, d) ? "yes" : "no") << "\n";
        return 0;
    }

    if (*flips_cmd) {
        Triangulation T = load_triangulation(flips_in);
        SchnyderWood S = load_wood_checked(T, flips_wood);
        Json j{{"flippable", events_to_json(flippable_triangles(T, S))},
               {"floppable", events_to_json(floppable_triangles(T, S))}};
        if (flips_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            save_json(flips_out, j);
        return 0;
    }

    if (*seq) {
        Triangulation T = load_triangulation(seq_in);
        SchnyderWood A = load_wood_checked(T, seq_a);
        SchnyderWood B = load_wood_checked(T, seq_b);
        std::vector<FlipEvent> events = flip_sequence(T, A, B);
        Json j{{"length", events.size()}, {"events", events_to_json(events)}};
        if (seq_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            save_json(seq_out, j);
        return 0;
    }

    if (*morph) {
        Triangulation T = load_triangulation(mo_in);
        SchnyderWood A = load_wood_checked(T, mo_wa);
        SchnyderWood B = load_wood_checked(T, mo_wb);
        std::vector<Coord> wa = weights_from_json(T, load_json(mo_ww_a));
        std::vector<Coord> wb = weights_from_json(T, load_json(mo_ww_b));
        MorphPlan plan = plan_morph(T, A, wa, B, wb);
        save_json(mo_out, plan_to_json(T, plan));
        if (!mo_svg.empty()) {
            int frames = write_morph_svgs(T, plan, mo_svg, mo_samples);
            std::cout << "frames=" << frames << " ";
        }
        std::cout << "steps=" << plan.steps.size() << " W=" << plan.W << " certified=yes\n";
        return 0;
    }

    if (*verify) {
        LoadedPlan lp = plan_from_json(load_json(ver_plan));
        PlanReport report = verify_plan(lp.tri, lp.plan);
        if (!report.ok) {
            std::cerr << "plan rejected: " << report.problem << "\n";
            return 2;
        }
        std::cout << "plan verified: " << lp.plan.steps.size() << " steps, all planar\n";
        return 0;
    }

    if (*rec) {
        Triangulation T = load_triangulation(rec_in);
        Drawing d = drawing_from_json(load_json(rec_drawing));
        RecognitionResult r = recognize(T, d);
        Json j{{"verdict", to_string(r.verdict)}, {"detail", r.detail}};
        if (r.wood) j["wood"] = wood_to_json(T, *r.wood);
        if (!r.weights.empty()) {
            Json ws = Json::array();
            for (const Rational& q : r.weights) ws.push_back(rational_to_string(q));
            j["weights"] = std::move(ws);
        }
        if (rec_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            save_json(rec_out, j);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schnyder::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const schnyder::CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 2;
    } catch (const schnyder::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
