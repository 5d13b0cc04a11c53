#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgraph/ed.hpp"
#include "fgraph/enumerate.hpp"
#include "fgraph/filters.hpp"
#include "fgraph/homology.hpp"
#include "fgraph/json_io.hpp"
#include "fgraph/pairing.hpp"

using nlohmann::json;

namespace {

int run_check(const std::string& path, bool tsv) {
    fg::GraphPair pair = fg::pair_from_json(fg::load_json_file(path));
    fg::validate_map(pair.map1);
    fg::validate_map(pair.map2);
    fg::FilterReport rep = fg::run_battery(pair);
    if (tsv) {
        std::cout << "lemma\tstatus\twitness\n";
        for (const auto& v : rep.verdicts)
            std::cout << v.lemma_id << '\t' << fg::status_str(v.status) << '\t' << v.witness
                      << '\n';
    } else {
        std::cout << fg::report_to_json(rep).dump(2) << '\n';
    }
    return rep.accepted ? 0 : 1;
}

json survivor_record(const fg::SurvivorEntry& e) {
    return {{"code", e.code},
            {"shape1", e.shape1},
            {"shape2", e.shape2},
            {"jumping_number", e.pair.jumping_number},
            {"pair", fg::pair_to_json(e.pair)},
            {"report", fg::report_to_json(e.report)}};
}

int run_enumerate(const fg::SearchConfig& config, const std::string& out_path) {
    fg::SurvivorList sv = fg::search(config);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output path '" << out_path << "'\n";
            return 2;
        }
        out = &file;
    }
    for (const auto& e : sv.entries) *out << survivor_record(e).dump() << '\n';
    if (!out_path.empty())
        std::cout << "{\"survivors\": " << sv.entries.size() << "}\n";
    return 0;
}

int run_ed(const std::string& arg) {
    fg::CombinatorialMap m = fg::load_graph_argument(arg);
    fg::EdClasses ed = fg::ed_classes(m);
    json d = json::array();
    for (int s : ed.d_vector) d.push_back(s);
    std::cout << json{{"D", d}, {"classes", ed.classes.size()}}.dump() << '\n';
    return 0;
}

int run_homology(const std::string& path, bool mod2) {
    std::vector<std::vector<long long>> extra;
    int modulus = 0;
    fg::AbelianPresentation pres =
        fg::presentation_from_json(fg::load_json_file(path), &extra, &modulus);
    if (mod2) modulus = 2;
    fg::InvariantFactors inv = fg::presentation_quotient(pres, extra, modulus);
    json t = json::array();
    for (long long d : inv.torsion) t.push_back(d);
    std::cout << json{{"free_rank", inv.free_rank}, {"torsion", t}, {"modulus", modulus}}
                     .dump()
              << '\n';
    return 0;
}

int run_fixtures_diff(const std::string& survivors_path, const std::string& fixture_path) {
    fg::SurvivorList sv;
    std::ifstream in(survivors_path);
    if (!in) throw fg::MapError("MalformedDocument", "cannot open '" + survivors_path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.contains("shape1") || !rec.contains("shape2"))
            throw fg::MapError("MalformedDocument",
                               "survivor lines need shape1/shape2: " + survivors_path);
        fg::SurvivorEntry e;
        e.shape1 = rec.at("shape1").get<std::string>();
        e.shape2 = rec.at("shape2").get<std::string>();
        if (rec.contains("code")) e.code = rec.at("code").get<std::string>();
        sv.entries.push_back(std::move(e));
    }
    fg::FixtureDiff diff = fg::diff_fixture(sv, fg::load_json_file(fixture_path));
    json missing = json::array(), extra = json::array();
    for (const auto& k : diff.missing) missing.push_back(k);
    for (const auto& k : diff.extra) extra.push_back(k);
    std::cout << json{{"missing", missing}, {"extra", extra}}.dump(2) << '\n';
    return diff.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and enumeration engine for labeled torus intersection graphs"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "accepted and ignored; runs are deterministic");

    std::string check_path;
    bool check_tsv = false, check_json = false;
    auto* check = app.add_subcommand("check", "run the filter battery on a pair document");
    check->add_option("pair", check_path, "pair JSON document")->required();
    check->add_flag("--json", check_json, "JSON report (default)");
    check->add_flag("--tsv", check_tsv, "flat TSV report");

    fg::SearchConfig config;
    std::string out_path;
    auto* enumerate = app.add_subcommand("enumerate", "search small candidate pairs");
    enumerate->add_option("--delta", config.delta, "filling distance, 4 or 5")->required();
    enumerate->add_option("--n1", config.n1, "vertex count of the first graph")->required();
    enumerate->add_option("--n2", config.n2, "vertex count of the second graph")->required();
    enumerate->add_option("--disable", config.disabled, "filter id to disable (repeatable)");
    enumerate->add_option("--threads", config.threads, "worker cap (default FG_THREADS)");
    enumerate->add_option("--out", out_path, "survivor output path (JSON lines)");

    std::string ed_arg;
    auto* ed = app.add_subcommand("ed", "equidistance classes of one graph");
    ed->add_option("graph", ed_arg, "graph JSON document or shape:... literal")->required();

    std::string pres_path;
    bool mod2 = false;
    auto* hom = app.add_subcommand("homology", "invariant factors of a presentation quotient");
    hom->add_option("presentation", pres_path, "presentation JSON document")->required();
    hom->add_flag("--mod2", mod2, "work over the two-element field");

    auto* slopes = app.add_subcommand("slopes", "slope arithmetic");
    slopes->require_subcommand(1);
    std::string slope_a, slope_b, slope_r;
    long long tw_w = 1, tw_n = 0;
    auto* dist = slopes->add_subcommand("dist", "minimal geometric intersection number");
    dist->add_option("a", slope_a, "first slope p/q")->required();
    dist->add_option("b", slope_b, "second slope p/q")->required();
    auto* twist = slopes->add_subcommand("twist", "slope after n twists, linking w");
    twist->add_option("r0", slope_r, "starting slope p/q")->required();
    twist->add_option("--w", tw_w, "linking number")->required();
    twist->add_option("--n", tw_n, "twist count")->required();

    auto* fixtures = app.add_subcommand("fixtures", "fixture utilities");
    fixtures->require_subcommand(1);
    std::string sv_path, fx_path;
    auto* fdiff = fixtures->add_subcommand("diff", "survivor list vs fixture");
    fdiff->add_option("survivors", sv_path, "survivor JSON lines file")->required();
    fdiff->add_option("fixture", fx_path, "fixture JSON array")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(check_path, check_tsv && !check_json);
        if (*enumerate) return run_enumerate(config, out_path);
        if (*ed) return run_ed(ed_arg);
        if (*hom) return run_homology(pres_path, mod2);
        if (*dist) {
            std::cout << fg::slope_distance(fg::parse_slope(slope_a), fg::parse_slope(slope_b))
                      << '\n';
            return 0;
        }
        if (*twist) {
            std::cout << fg::slope_str(fg::twist_slope(fg::parse_slope(slope_r), tw_w, tw_n))
                      << '\n';
            return 0;
        }
        if (*fdiff) return run_fixtures_diff(sv_path, fx_path);
    } catch (const fg::MapError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
