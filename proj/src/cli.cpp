#include "tripres/cli.hpp"

#include "tripres/groupalg.hpp"
#include "tripres/io.hpp"
#include "tripres/isomorphism.hpp"
#include "tripres/scab.hpp"
#include "tripres/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tripres {

namespace {

using Json = nlohmann::ordered_json;

constexpr int EXIT_OK = 0;
constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_USAGE = 2;

double round2(double v) { return std::round(v * 100.0) / 100.0; }

// Collects key/value output; prints either plain lines or one JSON object.
struct Reporter {
    bool json = false;
    Json obj = Json::object();

    template <class T>
    void set(const std::string& key, const T& value) {
        obj[key] = value;
    }

    static std::string plain(const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (const auto& e : v) {
                if (!s.empty()) s += ",";
                s += plain(e);
            }
            return s.empty() ? "none" : s;
        }
        if (v.is_number_float()) {
            std::ostringstream ss;
            ss << std::fixed << std::setprecision(2) << v.get<double>();
            return ss.str();
        }
        return v.dump();
    }

    void print(std::ostream& out) const {
        if (json) {
            out << obj.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : obj.items()) {
            if (value.is_array() && !value.empty() && value[0].is_object()) {
                for (const auto& row : value) {
                    out << key << ":";
                    for (const auto& [k2, v2] : row.items()) out << " " << k2 << "=" << plain(v2);
                    out << "\n";
                }
            } else {
                out << key << ": " << plain(value) << "\n";
            }
        }
    }
};

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw parse_error("bad index '" + tok + "' in list");
        }
    }
    if (out.empty()) throw parse_error("empty index list");
    return out;
}

struct LoadedPresentation {
    ProjectivePlane plane;
    PointLineCorrespondence lam;
    TrianglePresentation tri;
};

LoadedPresentation load_inputs(const std::string& plane_path, const std::string& lambda_path,
                               const std::string& tri_path) {
    LoadedPresentation in;
    in.plane = load_plane_file(plane_path);
    in.lam = make_correspondence(in.plane, read_lambda_file(lambda_path));
    if (!tri_path.empty()) in.tri = expand_reps(read_triples_file(tri_path));
    return in;
}

std::string verdict_name(VerifyReport::Verdict v) {
    switch (v) {
        case VerifyReport::Verdict::FULL: return "FULL";
        case VerifyReport::Verdict::PARTIAL: return "PARTIAL";
        default: return "INVALID";
    }
}

int cmd_verify_plane(const std::string& plane_path, Reporter& rep, std::ostream& out) {
    try {
        ProjectivePlane pl = load_plane_file(plane_path);
        rep.set("valid", true);
        rep.set("order", pl.q);
        rep.set("points", pl.n);
        rep.set("lines", pl.n);
        rep.print(out);
        return EXIT_OK;
    } catch (const invalid_plane_error& e) {
        rep.set("valid", false);
        rep.set("error", e.what());
        rep.print(out);
        return EXIT_CHECK_FAILED;
    }
}

int cmd_verify_presentation(const LoadedPresentation& in, Reporter& rep, std::ostream& out) {
    VerifyReport v = verify_presentation(in.plane, in.lam, in.tri);
    OrbitCounts oc = orbit_decomposition(in.tri);
    rep.set("verdict", verdict_name(v.verdict));
    rep.set("triples", v.triple_count);
    rep.set("orbits", oc.non_loop_orbits);
    rep.set("loops", oc.loops);
    if (!v.diagnostics.empty()) rep.set("diagnostics", v.diagnostics);
    rep.print(out);
    return v.verdict == VerifyReport::Verdict::INVALID ? EXIT_CHECK_FAILED : EXIT_OK;
}

int cmd_score(const LoadedPresentation& in, Reporter& rep, std::ostream& out) {
    CoverResult cover = estimated_score(in.plane, in.lam);
    rep.set("status", cover.status == CoverResult::Status::SUCCESS ? "SUCCESS" : "FAIL");
    rep.set("score", cover.score);
    rep.set("uncovered", cover.uncovered.size());
    rep.print(out);
    return EXIT_OK;
}

int cmd_census(const std::string& plane_path, std::size_t limit, Reporter& rep,
               std::ostream& out) {
    ProjectivePlane pl = load_plane_file(plane_path);
    std::vector<CensusRow> rows =
        correlation_census(pl, limit ? std::optional<std::size_t>(limit) : std::nullopt);
    Json classes = Json::array();
    long long total = 0, fails = 0;
    for (const CensusRow& r : rows) {
        classes.push_back(Json{{"a", r.a},
                               {"b", r.b},
                               {"exact", r.exact},
                               {"count", r.count},
                               {"mean_estimated", round2(r.mean_estimated)},
                               {"fails", r.fails}});
        total += r.count;
        fails += r.fails;
    }
    rep.set("class", classes);
    rep.set("total", total);
    rep.set("fails", fails);
    rep.print(out);
    return EXIT_OK;
}

struct SearchCliArgs {
    std::string plane_path, start_path, trace_path, checkpoint_path;
    std::string out_lambda_path, out_tri_path;
    std::string variant = "full";
    std::string badness_mode = "both";
    int target = 0;
    int worst = 5;
    long long max_steps = 1000;
    long long stall = 100;
    std::uint64_t seed = 0;
};

int cmd_search(const SearchCliArgs& a, Reporter& rep, std::ostream& out) {
    ProjectivePlane pl = load_plane_file(a.plane_path);
    SearchConfig config;
    config.target = a.target;
    config.variant = a.variant == "worst" ? SearchVariant::WORST_POINTS : SearchVariant::FULL_SCAN;
    config.worst_points = a.worst;
    config.max_steps = a.max_steps;
    config.restart_after_stall = a.stall;
    config.rng_seed = a.seed;
    config.badness_mode =
        a.badness_mode == "origin" ? BadnessMode::ORIGIN_ONLY : BadnessMode::BOTH_ENDPOINTS;

    // starting points: an explicit correspondence, or the plane's
    // correlations in enumeration order starting at seed mod count
    std::vector<PointLineCorrespondence> starts;
    if (!a.start_path.empty()) {
        starts.push_back(make_correspondence(pl, read_lambda_file(a.start_path)));
    } else {
        std::vector<Correlation> cors = enumerate_correlations(pl);
        if (cors.empty())
            throw precondition_error("plane has no correlations; provide a start with --start");
        std::size_t first = static_cast<std::size_t>(a.seed % cors.size());
        for (std::size_t i = 0; i < cors.size(); ++i)
            starts.push_back(correspondence_of(pl, cors[(first + i) % cors.size()]));
    }

    std::ofstream trace;
    if (!a.trace_path.empty()) {
        trace.open(a.trace_path);
        if (!trace) throw parse_error("cannot write " + a.trace_path);
        trace << "step,score\n";
    }

    long long remaining = a.max_steps, steps_total = 0, step_base = 0;
    int restarts = -1;
    std::size_t visited_total = 0;
    SearchOutcome best;
    bool found = false;
    for (const PointLineCorrespondence& start : starts) {
        ++restarts;
        config.max_steps = remaining;
        SearchOutcome res = run_search(pl, start, config);
        long long run_steps = static_cast<long long>(res.trace.size()) - 1;
        steps_total += run_steps;
        remaining -= std::max<long long>(run_steps, 1);  // a zero-step stall still spends budget
        visited_total += res.visited_count;
        if (trace.is_open())
            for (auto [step, score] : res.trace) trace << step_base + step << "," << score << "\n";
        step_base += run_steps + 1;
        if (res.status == SearchOutcome::Status::FOUND || res.best_score > best.best_score ||
            best.lam.image.empty())
            best = std::move(res);
        if (best.status == SearchOutcome::Status::FOUND) {
            found = true;
            break;
        }
        if (remaining <= 0) break;
    }

    rep.set("status", found ? "FOUND" : "STALLED");
    rep.set("best_score", best.best_score);
    rep.set("steps", steps_total);
    rep.set("restarts", std::max(restarts, 0));
    rep.set("visited", visited_total);
    if (found) {
        OrbitCounts oc = orbit_decomposition(best.tri);
        rep.set("triples", best.tri.size());
        rep.set("orbits", oc.non_loop_orbits);
        rep.set("loops", oc.loops);
    }
    if (!a.out_lambda_path.empty()) write_lambda_file(a.out_lambda_path, best.lam.image);
    if (found && !a.out_tri_path.empty()) write_triples_file(a.out_tri_path, best.tri);
    if (!a.checkpoint_path.empty()) {
        std::ofstream ck(a.checkpoint_path);
        if (!ck) throw parse_error("cannot write " + a.checkpoint_path);
        write_checkpoint(ck, best.lam.image, visited_total);
    }
    rep.print(out);
    return found ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_restrict_baer(const LoadedPresentation& in, const std::string& points,
                      const std::string& lines, const std::string& out_lambda_path,
                      const std::string& out_tri_path, Reporter& rep, std::ostream& out) {
    try {
        SubplaneEmbedding emb =
            is_baer_subplane(in.plane, parse_index_list(points), parse_index_list(lines));
        Restriction res = restrict_presentation(in.plane, in.lam, in.tri, emb);
        rep.set("sub_order", emb.sub_order);
        rep.set("baer", emb.baer);
        rep.set("points", res.plane.n);
        rep.set("triples", res.tri0.size());
        rep.set("orbits", orbit_decomposition(res.tri0).non_loop_orbits);
        rep.set("loops", orbit_decomposition(res.tri0).loops);
        if (!out_lambda_path.empty()) write_lambda_file(out_lambda_path, res.lam0.image);
        if (!out_tri_path.empty()) write_triples_file(out_tri_path, res.tri0);
        rep.print(out);
        return EXIT_OK;
    } catch (const subplane_error& e) {
        rep.set("error", e.what());
        rep.print(out);
        return EXIT_CHECK_FAILED;
    }
}

int cmd_abelianize(const std::string& tri_path, int generators, Reporter& rep,
                   std::ostream& out) {
    TrianglePresentation tri = expand_reps(read_triples_file(tri_path));
    for (const Triple& t : tri.triples)
        if (t.x < 0 || t.x >= generators || t.y < 0 || t.y >= generators || t.z < 0 ||
            t.z >= generators)
            throw precondition_error("triple index out of generator range");
    AbelianDecomposition dec = abelianization(tri, generators);
    Json factors = Json::array();
    for (const BigInt& d : dec.invariant_factors) factors.push_back(d.str());
    rep.set("invariant_factors", factors);
    rep.set("free_rank", dec.free_rank);
    rep.print(out);
    return EXIT_OK;
}

int cmd_check_parity(const LoadedPresentation& in, const std::string& lines, Reporter& rep,
                     std::ostream& out) {
    bool ok = check_parity(in.plane, in.tri, parse_index_list(lines));
    rep.set("parity", ok);
    rep.print(out);
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_scab_check(const LoadedPresentation& in, Reporter& rep, std::ostream& out) {
    VerifyReport v = verify_presentation(in.plane, in.lam, in.tri);
    if (v.verdict != VerifyReport::Verdict::FULL) {
        rep.set("error", "presentation is not full (" + verdict_name(v.verdict) + ", " +
                             std::to_string(v.triple_count) + " triples)");
        rep.print(out);
        return EXIT_CHECK_FAILED;
    }
    ChamberComplex complex = build_scab(in.plane, in.lam, in.tri);
    rep.set("chambers", complex.chambers.size());
    rep.set("edges", complex.edge_count());
    bool all_ok = true;
    for (int vertex = 1; vertex <= 3; ++vertex) {
        BipartiteGraph g = residue(complex, vertex);
        bool tri_ok = verify_generalized_triangle(g, in.plane.q);
        bool iso_ok = tri_ok && residue_plane_iso(g, in.plane).has_value();
        rep.set("residue_v" + std::to_string(vertex) + "_generalized_triangle", tri_ok);
        rep.set("residue_v" + std::to_string(vertex) + "_plane_iso", iso_ok);
        all_ok = all_ok && tri_ok && iso_ok;
    }
    rep.print(out);
    return all_ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_stats_random(const std::string& plane_path, long long samples, std::uint64_t seed,
                     Reporter& rep, std::ostream& out) {
    ProjectivePlane pl = load_plane_file(plane_path);
    SplitMix64 rng(seed);
    long long fails = 0;
    double sum = 0, sumsq = 0;
    int lo = 0, hi = 0;
    for (long long i = 0; i < samples; ++i) {
        CoverResult cover = estimated_score(pl, random_correspondence(pl, rng));
        if (cover.status == CoverResult::Status::FAIL) ++fails;
        sum += cover.score;
        sumsq += double(cover.score) * cover.score;
        lo = (i == 0) ? cover.score : std::min(lo, cover.score);
        hi = std::max(hi, cover.score);
    }
    double mean = sum / double(samples);
    double var = samples > 1 ? (sumsq - sum * mean) / double(samples - 1) : 0.0;
    rep.set("samples", samples);
    rep.set("mean", round2(mean));
    rep.set("stddev", round2(std::sqrt(std::max(var, 0.0))));
    rep.set("min", lo);
    rep.set("max", hi);
    rep.set("fails", fails);
    rep.print(out);
    return EXIT_OK;
}

int cmd_export(const std::string& tri_path, int generators, const std::string& format,
               const std::string& out_path, Reporter& rep, bool json, std::ostream& out) {
    TrianglePresentation tri = expand_reps(read_triples_file(tri_path));
    std::string text = export_group_presentation(
        tri, generators, format == "generic" ? ExportFormat::GENERIC : ExportFormat::GAP);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw parse_error("cannot write " + out_path);
        f << text;
    }
    if (json) {
        rep.set("generators", generators);
        rep.set("relators", orbit_reps(tri).size());
        rep.set("text", text);
        rep.print(out);
    } else if (out_path.empty()) {
        out << text;
    }
    return EXIT_OK;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Projective-plane incidence structures and triangle presentations"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand name
    bool json = false;
    app.add_flag("--json", json, "emit one JSON object instead of key: value lines");

    std::string plane_path, lambda_path, tri_path;
    std::string points_list, lines_list, out_lambda_path, out_tri_path, out_path;
    std::string format = "gap";
    std::size_t limit = 0;
    int generators = 0;
    long long samples = 1000;
    std::uint64_t seed = 0;
    SearchCliArgs search_args;

    auto* vp = app.add_subcommand("verify-plane", "check the plane axioms of an incidence table");
    vp->add_option("plane", plane_path, "plane file")->required();

    auto* vpr = app.add_subcommand("verify-presentation",
                                   "check a triangle presentation against a correspondence");
    vpr->add_option("plane", plane_path)->required();
    vpr->add_option("lambda", lambda_path)->required();
    vpr->add_option("presentation", tri_path)->required();

    auto* sc = app.add_subcommand("score", "greedy triangle-cover score of a correspondence");
    sc->add_option("plane", plane_path)->required();
    sc->add_option("lambda", lambda_path)->required();

    auto* cc = app.add_subcommand("census-correlations",
                                  "exact and greedy scores of the plane's correlations by class");
    cc->add_option("plane", plane_path)->required();
    cc->add_option("--limit", limit, "stop after this many correlations");

    auto* se = app.add_subcommand("search", "tabu swap search for a full-cover correspondence");
    se->add_option("plane", search_args.plane_path)->required();
    se->add_option("--start", search_args.start_path, "starting correspondence file");
    se->add_option("--target", search_args.target, "score goal (default: full cover)");
    se->add_option("--variant", search_args.variant, "full or worst")
        ->check(CLI::IsMember({"full", "worst"}));
    se->add_option("--worst-points", search_args.worst, "pool size for the worst variant")
        ->check(CLI::PositiveNumber);
    se->add_option("--max-steps", search_args.max_steps, "total swap-step budget");
    se->add_option("--seed", search_args.seed, "selects the starting correlation");
    se->add_option("--restart-after-stall", search_args.stall,
                   "steps without improvement before restarting");
    se->add_option("--badness", search_args.badness_mode, "both or origin")
        ->check(CLI::IsMember({"both", "origin"}));
    se->add_option("--trace", search_args.trace_path, "write a step,score CSV");
    se->add_option("--checkpoint", search_args.checkpoint_path,
                   "write the best correspondence plus visited count");
    se->add_option("--out-lambda", search_args.out_lambda_path, "write the best correspondence");
    se->add_option("--out-tri", search_args.out_tri_path, "write the found presentation");

    auto* rb = app.add_subcommand("restrict-baer",
                                  "restrict a presentation to a Baer subplane");
    rb->add_option("plane", plane_path)->required();
    rb->add_option("lambda", lambda_path)->required();
    rb->add_option("presentation", tri_path)->required();
    rb->add_option("--points", points_list, "subplane point indices, comma-separated")->required();
    rb->add_option("--lines", lines_list, "subplane line indices, comma-separated")->required();
    rb->add_option("--out-lambda", out_lambda_path, "write the restricted correspondence");
    rb->add_option("--out-tri", out_tri_path, "write the restricted presentation");

    auto* ab = app.add_subcommand("abelianize",
                                  "invariant factors of the presented group's abelianization");
    ab->add_option("presentation", tri_path)->required();
    ab->add_option("--generators", generators, "number of generators")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* cp = app.add_subcommand("check-parity",
                                  "parity of every triple against a union of lines");
    cp->add_option("plane", plane_path)->required();
    cp->add_option("presentation", tri_path)->required();
    cp->add_option("--lines", lines_list, "line indices, comma-separated")->required();

    auto* sb = app.add_subcommand("scab-check",
                                  "build the chamber complex and verify its residues");
    sb->add_option("plane", plane_path)->required();
    sb->add_option("lambda", lambda_path)->required();
    sb->add_option("presentation", tri_path)->required();

    auto* sr = app.add_subcommand("stats-random",
                                  "greedy-score statistics of random correspondences");
    sr->add_option("plane", plane_path)->required();
    sr->add_option("--samples", samples)->check(CLI::PositiveNumber);
    sr->add_option("--seed", seed);

    auto* eg = app.add_subcommand("export-gap", "emit the group presentation");
    eg->add_option("presentation", tri_path)->required();
    eg->add_option("--generators", generators, "number of generators")
        ->required()
        ->check(CLI::PositiveNumber);
    eg->add_option("--format", format, "gap or generic")
        ->check(CLI::IsMember({"gap", "generic"}));
    eg->add_option("--out", out_path, "write to a file instead of standard output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    Reporter rep;
    rep.json = json;
    try {
        if (vp->parsed()) return cmd_verify_plane(plane_path, rep, out);
        if (vpr->parsed())
            return cmd_verify_presentation(load_inputs(plane_path, lambda_path, tri_path), rep, out);
        if (sc->parsed()) return cmd_score(load_inputs(plane_path, lambda_path, ""), rep, out);
        if (cc->parsed()) return cmd_census(plane_path, limit, rep, out);
        if (se->parsed()) return cmd_search(search_args, rep, out);
        if (rb->parsed())
            return cmd_restrict_baer(load_inputs(plane_path, lambda_path, tri_path), points_list,
                                     lines_list, out_lambda_path, out_tri_path, rep, out);
        if (ab->parsed()) return cmd_abelianize(tri_path, generators, rep, out);
        if (cp->parsed()) {
            LoadedPresentation in;
            in.plane = load_plane_file(plane_path);
            in.tri = expand_reps(read_triples_file(tri_path));
            return cmd_check_parity(in, lines_list, rep, out);
        }
        if (sb->parsed()) return cmd_scab_check(load_inputs(plane_path, lambda_path, tri_path), rep, out);
        if (sr->parsed()) return cmd_stats_random(plane_path, samples, seed, rep, out);
        if (eg->parsed()) return cmd_export(tri_path, generators, format, out_path, rep, json, out);
        err << "no subcommand selected\n";
        return EXIT_USAGE;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

} // namespace tripres
