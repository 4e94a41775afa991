/*
   Copyright 2026 The ellf2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end over the C interface of libellf2.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ellf2/ellf2.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

int report(ellf2_status status) {
    std::cerr << "ellf2: " << ellf2_status_name(status) << ": " << ellf2_last_error() << '\n';
    switch (status) {
        case ELLF2_INVALID_ARGUMENT:
        case ELLF2_PARSE:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    ellf2_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct ClassifyArgs {
    unsigned jobs = 1;
    std::string out;
    std::string csv;
    std::string cache;
    bool golden_check = false;
    bool trace = false;
};

int run_classify(const ClassifyArgs& args) {
    ellf2_search_options opts;
    ellf2_search_options_init(&opts);
    opts.worker_count = args.jobs;
    opts.output_path = args.out.c_str();
    opts.csv_path = args.csv.c_str();
    opts.cache_path = args.cache.c_str();
    opts.emit_trace = args.trace ? 1 : 0;
    ellf2_classification* c = nullptr;
    if (const ellf2_status s = ellf2_classify(&opts, &c); s != ELLF2_OK) return report(s);

    char* json = nullptr;
    if (const ellf2_status s = ellf2_classification_json(c, &json); s != ELLF2_OK) {
        ellf2_classification_free(c);
        return report(s);
    }
    const auto doc = nlohmann::json::parse(take(json));
    const auto& meta = doc["meta"];
    int nonzero = 0;
    int zero = 0;
    for (const auto& cls : doc["classes"]) (cls["j_zero"].get<bool>() ? zero : nonzero) += 1;
    std::cout << "space_size     " << meta["space_size"] << '\n'
              << "survivor_count " << meta["survivor_count"] << '\n'
              << "class_count    " << meta["class_count"] << "  (j != 0: " << nonzero << ", j = 0: " << zero << ")\n";
    for (const auto& cls : doc["classes"]) {
        std::string extra;
        const auto& places = cls["places"];
        for (std::size_t i = 3; i < places.size(); ++i)
            extra += "  " + places[i]["symbol"].get<std::string>() + "@" + places[i]["place"].get<std::string>();
        std::printf("  %-14s j=%-18s %s%s\n", cls["fibers"].get<std::string>().c_str(), cls["j"].get<std::string>().c_str(),
                    cls["equation"].get<std::string>().c_str(), extra.c_str());
    }

    int code = kExitOk;
    if (args.golden_check) {
        int bijection = 0;
        char* text = nullptr;
        if (const ellf2_status s = ellf2_classification_golden_check(c, &bijection, &text); s != ELLF2_OK) {
            ellf2_classification_free(c);
            return report(s);
        }
        std::cout << take(text);
        if (!bijection) code = kExitMismatch;
    }
    ellf2_classification_free(c);
    return code;
}

int run_analyze(const std::string& equation) {
    char* json = nullptr;
    if (const ellf2_status s = ellf2_analyze(equation.c_str(), &json); s != ELLF2_OK) return report(s);
    std::cout << take(json);
    return kExitOk;
}

int with_graph(const std::string& path, int (*body)(const ellf2_graph*)) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "ellf2: cannot read graph file '" << path << "'\n";
        return kExitUsage;
    }
    ellf2_graph* g = nullptr;
    if (const ellf2_status s = ellf2_graph_from_json(text.c_str(), &g); s != ELLF2_OK) return report(s);
    const int code = body(g);
    ellf2_graph_free(g);
    return code;
}

int print_det(const ellf2_graph* g) {
    int64_t det = 0;
    if (const ellf2_status s = ellf2_graph_det(g, &det); s != ELLF2_OK) return report(s);
    std::cout << det << '\n';
    return kExitOk;
}

int print_canonical(const ellf2_graph* g) {
    char* json = nullptr;
    if (const ellf2_status s = ellf2_graph_canonical(g, &json); s != ELLF2_OK) return report(s);
    for (const auto& c : nlohmann::json::parse(take(json))) {
        std::cout << c["symbol"].get<std::string>() << ":";
        for (std::size_t i = 0; i < c["vertices"].size(); ++i) {
            const int m = c["multiplicity"][i].get<int>();
            std::cout << ' ' << (m == 1 ? "" : std::to_string(m)) << c["vertices"][i].get<std::string>();
        }
        std::cout << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-one fibrations over the projective line over F_2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ellf2_version());

    ClassifyArgs classify;
    classify.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* cls = app.add_subcommand("classify", "Enumerate all 2^21 equations and classify the survivors");
    cls->add_option("--jobs,-j", classify.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    cls->add_option("--out,-o", classify.out, "Write the JSON result here");
    cls->add_option("--csv", classify.csv, "Write the class table as CSV here");
    cls->add_option("--cache", classify.cache, "Filter cache file (read if complete, else rebuilt)");
    cls->add_flag("--golden-check", classify.golden_check, "Compare classes with the tabulated rows");
    cls->add_flag("--trace", classify.trace, "Progress on stderr");

    std::string equation;
    auto* analyze = app.add_subcommand("analyze", "Report fibers, filters and point census of one equation");
    analyze->add_option("equation", equation, "e.g. \"y^2+txy=x^3+t^5\"")->required();

    auto* lattice = app.add_subcommand("lattice", "Dual graphs and height pairings");
    lattice->require_subcommand(1);
    std::string graph_path;
    auto* det = lattice->add_subcommand("det", "Determinant of the intersection matrix");
    det->add_option("--graph", graph_path, "Graph JSON file")->required();
    auto* canonical = lattice->add_subcommand("canonical", "Curves of canonical type in a graph");
    canonical->add_option("--graph", graph_path, "Graph JSON file")->required();
    std::string target;
    std::string fibers;
    int po_max = 3;
    int torsion = 0;
    auto* height = lattice->add_subcommand("height", "Solve target = 2 + 2(P.O) - sum of contributions");
    height->add_option("--target", target, "Height, e.g. 1/12")->required();
    height->add_option("--fibers", fibers, "Comma-separated symbols, e.g. IV,I1*")->required();
    height->add_option("--po-max", po_max, "Largest intersection with the zero section")->check(CLI::Range(0, 64));
    height->add_option("--torsion", torsion, "Require a torsion section of this order")->check(CLI::Range(0, 64));
    std::string lattice_name;
    auto* mw = lattice->add_subcommand("mw", "Mordell-Weil group for a trivial lattice");
    mw->add_option("--lattice", lattice_name, "e.g. A2+D5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*cls) return run_classify(classify);
    if (*analyze) return run_analyze(equation);
    if (*det) return with_graph(graph_path, print_det);
    if (*canonical) return with_graph(graph_path, print_canonical);
    if (*height) {
        char* json = nullptr;
        if (const ellf2_status s = ellf2_height_solve(target.c_str(), fibers.c_str(), po_max, torsion, &json); s != ELLF2_OK)
            return report(s);
        const auto solutions = nlohmann::json::parse(take(json));
        for (const auto& sol : solutions) {
            std::cout << "P.O=" << sol["po"].get<int>() << "  contributions";
            for (const auto& c : sol["contributions"]) std::cout << ' ' << c.get<std::string>();
            std::cout << '\n';
        }
        std::cout << solutions.size() << (solutions.size() == 1 ? " solution\n" : " solutions\n");
        return kExitOk;
    }
    if (*mw) {
        char* out = nullptr;
        if (const ellf2_status s = ellf2_mw_lookup(lattice_name.c_str(), &out); s != ELLF2_OK) return report(s);
        std::cout << take(out) << '\n';
        return kExitOk;
    }
    return kExitUsage;
}
