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

#include "ellf2/ellf2.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ellf2/census.hpp"
#include "ellf2/lattice.hpp"
#include "ellf2/search.hpp"
#include "ellf2/weierstrass.hpp"
#include "json.hpp"

struct ellf2_equation {
    ellf2::WeierstrassEq eq;
};

struct ellf2_classification {
    ellf2::ClassificationResult result;
};

struct ellf2_graph {
    ellf2::DualGraph graph;
};

namespace {

thread_local std::string last_error;

ellf2_status fail(ellf2_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
ellf2_status guarded(F&& body) {
    try {
        body();
        return ELLF2_OK;
    } catch (const ellf2::ParseError& e) {
        return fail(ELLF2_PARSE, e.what());
    } catch (const ellf2::SingularEquation& e) {
        return fail(ELLF2_SINGULAR, e.what());
    } catch (const ellf2::NotEmbedded& e) {
        return fail(ELLF2_NOT_EMBEDDED, e.what());
    } catch (const ellf2::IoError& e) {
        return fail(ELLF2_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ELLF2_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ELLF2_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(ELLF2_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ELLF2_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ELLF2_INTERNAL, e.what());
    } catch (...) {
        return fail(ELLF2_INTERNAL, "unknown exception");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

std::string optional_text(const char* s) { return s == nullptr ? std::string() : std::string(s); }

}  // namespace

extern "C" {

const char* ellf2_version(void) { return ELLF2_VERSION_STRING; }

const char* ellf2_status_name(ellf2_status status) {
    switch (status) {
        case ELLF2_OK: return "ok";
        case ELLF2_INVALID_ARGUMENT: return "invalid argument";
        case ELLF2_PARSE: return "parse error";
        case ELLF2_SINGULAR: return "singular equation";
        case ELLF2_IO: return "i/o error";
        case ELLF2_NOT_EMBEDDED: return "not embedded";
        case ELLF2_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ellf2_last_error(void) { return last_error.c_str(); }

void ellf2_string_free(char* s) { std::free(s); }

ellf2_status ellf2_equation_parse(const char* text, ellf2_equation** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new ellf2_equation{ellf2::parse_equation(text)};
    });
}

ellf2_status ellf2_equation_from_code(uint32_t code, ellf2_equation** out) {
    return guarded([&] {
        require(out, "out");
        if (code >= ellf2::kSpaceSize) throw std::invalid_argument("code must be below 2^21");
        *out = new ellf2_equation{ellf2::decode(code)};
    });
}

void ellf2_equation_free(ellf2_equation* e) { delete e; }

ellf2_status ellf2_equation_code(const ellf2_equation* e, uint32_t* out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = ellf2::encode(e->eq);
    });
}

ellf2_status ellf2_equation_canonical_code(const ellf2_equation* e, uint32_t* out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = ellf2::canonical_code(e->eq);
    });
}

ellf2_status ellf2_equation_text(const ellf2_equation* e, char** out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = duplicate(ellf2::to_string(e->eq));
    });
}

ellf2_status ellf2_equation_discriminant(const ellf2_equation* e, char** out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = duplicate(ellf2::to_string(ellf2::discriminant(e->eq)));
    });
}

ellf2_status ellf2_equation_j_invariant(const ellf2_equation* e, char** out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = duplicate(ellf2::to_string(ellf2::j_invariant(e->eq)));
    });
}

ellf2_status ellf2_equation_fibers(const ellf2_equation* e, char** out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = duplicate(ellf2::rational_fibers_text(ellf2::reduction_summary(e->eq)));
    });
}

ellf2_status ellf2_equation_filter_mask(const ellf2_equation* e, uint8_t* out) {
    return guarded([&] {
        require(e, "equation");
        require(out, "out");
        *out = ellf2::filter_digest(e->eq).failure_mask;
    });
}

ellf2_status ellf2_analyze(const char* text, char** json_out) {
    return guarded([&] {
        require(text, "text");
        require(json_out, "json_out");
        *json_out = duplicate(ellf2::to_json(ellf2::analyze_one(text)));
    });
}

void ellf2_search_options_init(ellf2_search_options* options) {
    if (options == nullptr) return;
    options->worker_count = 1;
    options->output_path = nullptr;
    options->csv_path = nullptr;
    options->cache_path = nullptr;
    options->emit_trace = 0;
}

ellf2_status ellf2_classify(const ellf2_search_options* options, ellf2_classification** out) {
    return guarded([&] {
        require(options, "options");
        require(out, "out");
        ellf2::SearchConfig cfg;
        cfg.worker_count = options->worker_count;
        cfg.output_path = optional_text(options->output_path);
        cfg.csv_path = optional_text(options->csv_path);
        if (options->cache_path != nullptr && options->cache_path[0] != '\0') cfg.cache_path = options->cache_path;
        cfg.emit_trace = options->emit_trace != 0;
        *out = new ellf2_classification{ellf2::run_classification(cfg)};
    });
}

void ellf2_classification_free(ellf2_classification* c) { delete c; }

ellf2_status ellf2_classification_survivor_count(const ellf2_classification* c, uint32_t* out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = c->result.survivor_count;
    });
}

ellf2_status ellf2_classification_class_count(const ellf2_classification* c, size_t* out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = c->result.classes.size();
    });
}

ellf2_status ellf2_classification_class_code(const ellf2_classification* c, size_t index, uint32_t* out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = c->result.classes.at(index).canonical_code;
    });
}

ellf2_status ellf2_classification_json(const ellf2_classification* c, char** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = duplicate(ellf2::to_json(c->result));
    });
}

ellf2_status ellf2_classification_csv(const ellf2_classification* c, char** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = duplicate(ellf2::to_csv(c->result));
    });
}

ellf2_status ellf2_classification_golden_check(const ellf2_classification* c, int* bijection, char** report_text) {
    return guarded([&] {
        require(c, "classification");
        require(bijection, "bijection");
        const ellf2::GoldenReport report = ellf2::verify_against_golden(c->result.classes);
        *bijection = report.bijection() ? 1 : 0;
        if (report_text != nullptr) *report_text = duplicate(ellf2::to_text(report, c->result.classes));
    });
}

ellf2_status ellf2_graph_from_json(const char* json, ellf2_graph** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new ellf2_graph{ellf2::DualGraph::from_json(json)};
    });
}

void ellf2_graph_free(ellf2_graph* g) { delete g; }

ellf2_status ellf2_graph_det(const ellf2_graph* g, int64_t* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = ellf2::gram_det(g->graph);
    });
}

ellf2_status ellf2_graph_canonical(const ellf2_graph* g, char** json_out) {
    return guarded([&] {
        require(g, "graph");
        require(json_out, "json_out");
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const ellf2::CanonicalCurve& c : ellf2::canonical_type_subcurves(g->graph)) {
            nlohmann::ordered_json entry;
            entry["symbol"] = ellf2::to_string(c.symbol);
            entry["vertices"] = nlohmann::ordered_json::array();
            for (const int v : c.vertices) entry["vertices"].push_back(g->graph.names()[static_cast<std::size_t>(v)]);
            entry["multiplicity"] = c.multiplicity;
            doc.push_back(std::move(entry));
        }
        *json_out = duplicate(doc.dump());
    });
}

ellf2_status ellf2_height_solve(const char* target, const char* fibers, int po_max, int torsion_order, char** json_out) {
    return guarded([&] {
        require(target, "target");
        require(fibers, "fibers");
        require(json_out, "json_out");
        if (torsion_order < 0) throw std::invalid_argument("torsion_order must be non-negative");
        ellf2::HeightProblem p;
        p.target = ellf2::parse_rational(target);
        p.po_max = po_max;
        if (torsion_order > 0) p.torsion_order = torsion_order;
        const std::string list(fibers);
        std::size_t start = 0;
        while (start <= list.size()) {
            const std::size_t comma = std::min(list.find(',', start), list.size());
            const std::string item = list.substr(start, comma - start);
            if (item.empty()) throw ellf2::ParseError("empty fiber in list", start);
            p.fibers.push_back({ellf2::parse_kodaira(item), {}});
            start = comma + 1;
        }
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const ellf2::HeightSolution& s : ellf2::height_solve(p)) {
            nlohmann::ordered_json entry;
            entry["po"] = s.po;
            entry["contributions"] = nlohmann::ordered_json::array();
            for (const ellf2::Rational& r : s.contributions) entry["contributions"].push_back(ellf2::to_string(r));
            doc.push_back(std::move(entry));
        }
        *json_out = duplicate(doc.dump());
    });
}

ellf2_status ellf2_mw_lookup(const char* trivial_lattice, char** mw_out) {
    return guarded([&] {
        require(trivial_lattice, "trivial_lattice");
        require(mw_out, "mw_out");
        *mw_out = duplicate(ellf2::mw_lookup(trivial_lattice).mw);
    });
}

}  // extern "C"
