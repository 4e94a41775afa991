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

#include "ellf2/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ellf2/lattice.hpp"
#include "json.hpp"

namespace ellf2 {

void enumerate_space(const std::function<void(std::uint32_t code, const WeierstrassEq&)>& visit) {
    for (std::uint32_t code = 0; code < kSpaceSize; ++code) visit(code, decode(code));
}

namespace {

constexpr std::uint32_t kBlockSize = std::uint32_t{1} << 14;
constexpr std::size_t kCacheRecordSize = 8;

std::uint8_t symbol_tag(const KodairaSymbol& s) {
    return static_cast<std::uint8_t>((static_cast<unsigned>(s.family) << 5) | static_cast<unsigned>(std::min(s.n, 31)));
}

std::string fiber_text(const LocalReduction& r) {
    if (r.symbol.is_smooth() && r.smooth_fiber) return "E" + std::to_string(classify_smooth_fiber(*r.smooth_fiber).curve_class);
    return r.symbol_text();
}

PlaceRecord place_record(const LocalReduction& r) {
    return {r.place.to_string(), fiber_text(r), r.v_delta, r.r_geom, r.r_rational, r.split};
}

nlohmann::ordered_json to_json_value(const PlaceRecord& p) {
    return {{"place", p.place},   {"symbol", p.symbol},         {"v_delta", p.v_delta},
            {"r_geom", p.r_geom}, {"r_rational", p.r_rational}, {"split", p.split}};
}

void trace(const SearchConfig& cfg, const std::string& line) {
    if (!cfg.emit_trace) return;
    static std::mutex mu;
    const std::lock_guard lock(mu);
    std::cerr << "[classify] " << line << '\n';
}

// Runs `work(block_begin, block_end)` over contiguous blocks of the space.
template <class Work>
void for_each_block(unsigned workers, const SearchConfig& cfg, Work work) {
    const std::uint32_t blocks = kSpaceSize / kBlockSize;
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint32_t> done{0};
    const auto run = [&]() {
        for (std::uint32_t b = next++; b < blocks; b = next++) {
            work(b * kBlockSize, (b + 1) * kBlockSize);
            const std::uint32_t d = ++done;
            if (d % 16 == 0) trace(cfg, std::to_string(d) + "/" + std::to_string(blocks) + " blocks");
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

bool load_cache(const std::string& path, std::vector<std::uint8_t>& pass) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::vector<unsigned char> raw(static_cast<std::size_t>(kSpaceSize) * kCacheRecordSize);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()) || in.peek() != std::char_traits<char>::eof()) return false;
    for (std::uint32_t code = 0; code < kSpaceSize; ++code) {
        const unsigned char* rec = raw.data() + static_cast<std::size_t>(code) * kCacheRecordSize;
        const std::uint32_t stored = static_cast<std::uint32_t>(rec[0]) | static_cast<std::uint32_t>(rec[1]) << 8 |
                                     static_cast<std::uint32_t>(rec[2]) << 16 | static_cast<std::uint32_t>(rec[3]) << 24;
        if (stored != code) return false;
        pass[code] = rec[4] == 0 ? 1 : 0;
    }
    return true;
}

void write_cache(const std::string& path, const std::vector<std::array<unsigned char, kCacheRecordSize>>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open cache file '" + path + "' for writing");
    for (const auto& rec : records) out.write(reinterpret_cast<const char*>(rec.data()), kCacheRecordSize);
    if (!out) throw IoError("failed writing cache file '" + path + "'");
}

std::vector<std::uint8_t> survivor_flags(const SearchConfig& cfg) {
    std::vector<std::uint8_t> pass(kSpaceSize, 0);
    if (cfg.cache_path && load_cache(*cfg.cache_path, pass)) {
        trace(cfg, "loaded cache " + *cfg.cache_path);
        return pass;
    }
    if (!cfg.cache_path) {
        for_each_block(cfg.worker_count, cfg, [&](std::uint32_t begin, std::uint32_t end) {
            for (std::uint32_t code = begin; code < end; ++code) pass[code] = passes_filters(decode(code)) ? 1 : 0;
        });
        return pass;
    }
    std::vector<std::array<unsigned char, kCacheRecordSize>> records(kSpaceSize);
    for_each_block(cfg.worker_count, cfg, [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t code = begin; code < end; ++code) {
            const FilterDigest d = filter_digest(decode(code));
            pass[code] = d.failure_mask == 0 ? 1 : 0;
            records[code] = {static_cast<unsigned char>(code), static_cast<unsigned char>(code >> 8),
                             static_cast<unsigned char>(code >> 16), static_cast<unsigned char>(code >> 24),
                             d.failure_mask, symbol_tag(d.worst), 0, 0};
        }
    });
    write_cache(*cfg.cache_path, records);
    trace(cfg, "wrote cache " + *cfg.cache_path);
    return pass;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string mobius_text(Mobius m) {
    const auto linear = [](int a, int b) -> std::string {
        if (a && b) return "(t+1)";
        if (a) return "t";
        return b ? "1" : "0";
    };
    const std::string num = linear(m.a, m.b);
    const std::string den = linear(m.c, m.d);
    return "t -> " + (den == "1" ? num : num + "/" + den);
}

}  // namespace

SurvivorRecord class_record(const WeierstrassEq& e) {
    const WeierstrassEq rep = canonical_form(e);
    const FiberConfiguration config = reduction_summary(rep);
    SurvivorRecord r;
    r.code = encode(rep);
    r.canonical_code = r.code;
    r.equation = to_string(rep);
    r.fibers = rational_fibers_text(config);
    for (const LocalReduction& red : config.reductions) r.places.push_back(place_record(red));
    const RationalFunction j = j_invariant(rep);
    r.j = to_string(j);
    r.j_zero = j.is_zero();
    return r;
}

ClassificationResult run_classification(const SearchConfig& cfg) {
    if (cfg.worker_count == 0) throw std::invalid_argument("run_classification: worker_count must be at least 1");
    trace(cfg, "filtering " + std::to_string(kSpaceSize) + " equations with " + std::to_string(cfg.worker_count) +
                   " workers");
    const std::vector<std::uint8_t> pass = survivor_flags(cfg);

    ClassificationResult result;
    for (std::uint32_t code = 0; code < kSpaceSize; ++code)
        if (pass[code]) result.survivors.push_back(code);
    result.survivor_count = static_cast<std::uint32_t>(result.survivors.size());
    trace(cfg, std::to_string(result.survivor_count) + " survivors");

    // Each new survivor marks its whole orbit, so only one orbit scan per class.
    std::vector<std::int32_t> class_of(kSpaceSize, -1);
    struct Orbit {
        std::uint32_t least = kSpaceSize;
        std::uint32_t size = 0;
        std::uint32_t survivors = 0;
    };
    std::vector<Orbit> orbits;
    for (const std::uint32_t code : result.survivors) {
        if (class_of[code] < 0) {
            const auto id = static_cast<std::int32_t>(orbits.size());
            Orbit o;
            for_each_orbit_image(decode(code), [&](const WeierstrassEq& img) {
                const std::uint32_t c = encode(img);
                if (class_of[c] == id) return;
                class_of[c] = id;
                ++o.size;
                o.least = std::min(o.least, c);
            });
            orbits.push_back(o);
        }
        ++orbits[static_cast<std::size_t>(class_of[code])].survivors;
    }
    for (const Orbit& o : orbits) {
        SurvivorRecord r = class_record(decode(o.least));
        r.survivor_count = o.survivors;
        r.orbit_size = o.size;
        result.classes.push_back(std::move(r));
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const SurvivorRecord& a, const SurvivorRecord& b) { return a.canonical_code < b.canonical_code; });
    trace(cfg, std::to_string(result.classes.size()) + " classes");

    if (!cfg.output_path.empty()) write_file(cfg.output_path, to_json(result));
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, to_csv(result));
    return result;
}

std::string to_json(const ClassificationResult& result) {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"space_size", result.space_size},
                   {"survivor_count", result.survivor_count},
                   {"class_count", result.classes.size()}};
    doc["classes"] = nlohmann::ordered_json::array();
    for (const SurvivorRecord& r : result.classes) {
        nlohmann::ordered_json c;
        c["code"] = r.code;
        c["canonical_code"] = r.canonical_code;
        c["equation"] = r.equation;
        c["fibers"] = r.fibers;
        c["j"] = r.j;
        c["j_zero"] = r.j_zero;
        c["survivor_count"] = r.survivor_count;
        c["orbit_size"] = r.orbit_size;
        c["places"] = nlohmann::ordered_json::array();
        for (const PlaceRecord& p : r.places) c["places"].push_back(to_json_value(p));
        doc["classes"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string to_csv(const ClassificationResult& result) {
    std::ostringstream out;
    out << "equation,fiber_t0,fiber_t1,fiber_inf,j\n";
    for (const SurvivorRecord& r : result.classes)
        out << '"' << r.equation << "\"," << r.places[0].symbol << ',' << r.places[1].symbol << ',' << r.places[2].symbol
            << ",\"" << r.j << "\"\n";
    return out.str();
}

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows{
        {"y^2+txy+t^2y=x^3+tx^2+t^4x+t^5(1+t)", "I1*+E4+I4", "t^4"},
        {"y^2+txy=x^3+t^3x+t^5(1+t)", "III*+E4+E4", "t^2/(1+t+t^2)"},
        {"y^2+txy=x^3+t^3x", "III*+E4+I2", "t^2"},
        {"y^2+txy=x^3+t^2x^2+t^3x", "III*+E2+I~2", "t^2"},
        {"y^2+txy=x^3+t^5", "II*+E4+I1", "t"},
        {"y^2+txy=x^3+t^2x^2+t^5", "II*+E2+I~1", "t"},
        {"y^2+txy=x^3+tx^2+t^4x", "I4*+E4+E2", "1"},
        {"y^2+txy+ty=x^3+tx^2+tx", "III+E4+I8", "t^8"},
        {"y^2+t^2y=x^3+tx^2", "I1*+E5+IV", "0"},
        {"y^2+t^2y=x^3+t^3x", "IV*+E5+III", "0"},
        {"y^2+t^2y=x^3", "IV*+E3+IV", "0"},
    };
    return rows;
}

GoldenReport verify_against_golden(const std::vector<SurvivorRecord>& classes, const std::vector<GoldenRow>& rows) {
    GoldenReport report;
    std::vector<bool> class_used(classes.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool found = false;
        try {
            const std::uint32_t code = canonical_code(parse_equation(rows[i].equation));
            const RationalFunction j = parse_rational_function(rows[i].j);
            for (std::size_t k = 0; k < classes.size() && !found; ++k) {
                if (class_used[k] || classes[k].canonical_code != code) continue;
                for (const Mobius m : Mobius::all()) {
                    const WeierstrassEq img = apply_mobius(decode(classes[k].code), m);
                    if (discriminant(img).is_zero()) break;
                    if (rational_fibers_text(reduction_summary(img)) != rows[i].fibers || !(j_invariant(img) == j)) continue;
                    report.matched.push_back({i, k, m});
                    class_used[k] = true;
                    found = true;
                    break;
                }
            }
        } catch (const ParseError&) {
            found = false;
        }
        if (!found) report.unmatched_rows.push_back(i);
    }
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (!class_used[k]) report.unmatched_classes.push_back(k);
    return report;
}

std::string to_text(const GoldenReport& report, const std::vector<SurvivorRecord>& classes,
                    const std::vector<GoldenRow>& rows) {
    std::ostringstream out;
    for (const GoldenMatch& m : report.matched)
        out << "match     " << rows[m.row].fibers << "  j=" << rows[m.row].j << "  " << rows[m.row].equation << "  <->  "
            << classes[m.class_index].equation << "  (" << mobius_text(m.relabeling) << ")\n";
    for (const std::size_t i : report.unmatched_rows)
        out << "unmatched row    " << rows[i].fibers << "  j=" << rows[i].j << "  " << rows[i].equation << '\n';
    for (const std::size_t k : report.unmatched_classes)
        out << "unmatched class  " << classes[k].fibers << "  j=" << classes[k].j << "  " << classes[k].equation << '\n';
    out << (report.bijection() ? "golden check: bijection\n" : "golden check: MISMATCH\n");
    return out.str();
}

AnalysisReport analyze_one(std::string_view text) {
    const WeierstrassEq e = parse_equation(text);
    AnalysisReport r;
    r.code = encode(e);
    r.equation = to_string(e);
    const BitPoly delta = discriminant(e);
    r.discriminant = to_string(delta);
    r.filters = apply_filters(e);
    if (delta.is_zero()) {
        r.singular = true;
        return r;
    }
    r.config = reduction_summary(e);
    r.j = to_string(j_invariant(e));
    r.globally_minimal = std::all_of(r.config->reductions.begin(), r.config->reductions.end(),
                                     [](const LocalReduction& red) { return red.minimal; });
    for (int point = 0; point < 3; ++point) {
        const LocalReduction& red = r.config->rational(point);
        RationalFiberCensus c;
        c.place = red.place.to_string();
        c.fiber = fiber_text(red);
        c.n_value = n_value(rational_fiber_class(*r.config, point));
        const F2Curve fiber = fiber_at(e, red.place);
        if (red.symbol.is_smooth() && is_smooth(fiber)) c.brute_force_points = count_points(fiber);
        r.total_points += c.n_value;
        r.census.push_back(std::move(c));
    }
    r.trivial_lattice = trivial_lattice(*r.config);
    return r;
}

std::string to_json(const AnalysisReport& r) {
    nlohmann::ordered_json doc;
    doc["code"] = r.code;
    doc["equation"] = r.equation;
    doc["discriminant"] = r.discriminant;
    doc["singular"] = r.singular;
    nlohmann::ordered_json filters;
    filters["passed"] = r.filters.passed;
    filters["failures"] = nlohmann::ordered_json::array();
    for (const FilterTag t : r.filters.failures) filters["failures"].push_back(std::string(to_string(t)));
    if (r.singular) {
        doc["filters"] = std::move(filters);
        return doc.dump(2) + "\n";
    }
    doc["j"] = r.j;
    doc["globally_minimal"] = r.globally_minimal;
    doc["euler_number"] = r.config->euler_number();
    doc["fibers"] = rational_fibers_text(*r.config);
    doc["places"] = nlohmann::ordered_json::array();
    for (const LocalReduction& red : r.config->reductions) doc["places"].push_back(to_json_value(place_record(red)));
    doc["filters"] = std::move(filters);
    doc["census"] = nlohmann::ordered_json::array();
    for (const RationalFiberCensus& c : r.census) {
        nlohmann::ordered_json entry{{"place", c.place}, {"fiber", c.fiber}, {"n", c.n_value}};
        if (c.brute_force_points) entry["brute_force_points"] = *c.brute_force_points;
        doc["census"].push_back(std::move(entry));
    }
    doc["total_points"] = r.total_points;
    doc["trivial_lattice"] = r.trivial_lattice;
    try {
        const MWTableRow row = mw_lookup(r.trivial_lattice);
        doc["mordell_weil"] = row.mw;
    } catch (const NotEmbedded&) {
        doc["mordell_weil"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

}  // namespace ellf2
