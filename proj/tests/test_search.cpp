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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "ellf2/field.hpp"
#include "ellf2/search.hpp"

using namespace ellf2;

namespace {

const ClassificationResult& full_run() {
    static const ClassificationResult result = [] {
        SearchConfig cfg;
        cfg.worker_count = 1;
        return run_classification(cfg);
    }();
    return result;
}

std::vector<std::string> tokens(const std::string& fibers) {
    std::vector<std::string> out;
    std::stringstream in(fibers);
    for (std::string part; std::getline(in, part, '+');) out.push_back(part);
    std::sort(out.begin(), out.end());
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ellf2_test_" + std::to_string(::getpid()) + "_" + name);
}

FieldElement evaluate(const Field& f, BitPoly p, FieldElement t) {
    FieldElement acc = f.zero();
    for (int i = p.degree(); i >= 0; --i) {
        acc = f.mul(acc, t);
        if (p.coeff(i)) acc = f.add(acc, f.one());
    }
    return acc;
}

// Projective points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the field.
long cubic_points(const Field& f, const std::array<FieldElement, 5>& a) {
    long n = 1;
    const auto all = f.elements();
    for (const FieldElement x : all) {
        const FieldElement x2 = f.mul(x, x);
        const FieldElement rhs = f.add(f.add(f.add(f.mul(x2, x), f.mul(a[1], x2)), f.mul(a[3], x)), a[4]);
        for (const FieldElement y : all) {
            const FieldElement lhs = f.add(f.add(f.mul(y, y), f.mul(a[0], f.mul(x, y))), f.mul(a[2], y));
            if (lhs == rhs) ++n;
        }
    }
    return n;
}

// Points on a reducible fiber whose components are defined over F_2 unless
// the fiber is non-split multiplicative.
long reducible_points(const LocalReduction& r, int k, long q) {
    const int rg = r.r_geom;
    if (r.symbol.is_semistable()) {
        const bool split = r.split || (k / r.place.degree()) % 2 == 0;
        if (split) return rg * q;
        return rg % 2 == 1 ? q + 2 : 2 * q + 2;
    }
    return rg * q + 1;
}

// #J(F_q) summed fiber by fiber, brute force wherever the fiber is irreducible.
long surface_points(const WeierstrassEq& e, int k) {
    const Field f(FieldSpec::standard(k));
    const long q = static_cast<long>(f.order());
    const FiberConfiguration c = reduction_summary(e);
    const std::array<BitPoly, 5> coeffs{e.a1, e.a2, e.a3, e.a4, e.a6};
    long total = 0;
    for (const FieldElement t : f.elements()) {
        const LocalReduction* bad = nullptr;
        for (const LocalReduction& r : c.reductions)
            if (!r.place.is_infinity() && evaluate(f, r.place.prime(), t).is_zero()) bad = &r;
        if (bad != nullptr && bad->r_geom > 1) {
            if (bad->place.degree() > k || k % bad->place.degree() != 0) continue;
            total += reducible_points(*bad, k, q);
            continue;
        }
        std::array<FieldElement, 5> a;
        for (std::size_t i = 0; i < 5; ++i) a[i] = evaluate(f, coeffs[i], t);
        total += cubic_points(f, a);
    }
    const LocalReduction& inf = c.rational(2);
    if (inf.r_geom > 1) {
        total += reducible_points(inf, k, q);
    } else {
        const WeierstrassEq m = infinity_model(e);
        const std::array<BitPoly, 5> at_inf{m.a1, m.a2, m.a3, m.a4, m.a6};
        std::array<FieldElement, 5> a;
        for (std::size_t i = 0; i < 5; ++i) a[i] = evaluate(f, at_inf[i], f.zero());
        total += cubic_points(f, a);
    }
    return total;
}

}  // namespace

TEST_CASE("enumeration covers the space in order") {
    std::uint32_t count = 0;
    bool ordered = true;
    bool round_trip = true;
    enumerate_space([&](std::uint32_t code, const WeierstrassEq& e) {
        if (code != count) ordered = false;
        if ((code & 0x3FF) == 0 && encode(e) != code) round_trip = false;
        ++count;
    });
    CHECK(count == 2097152);
    CHECK(ordered);
    CHECK(round_trip);
    CHECK(decode(0).a1.is_zero());
    CHECK(discriminant(decode(0)).is_zero());
}

TEST_CASE("classification of the full space") {
    const ClassificationResult& r = full_run();
    CHECK(r.space_size == 2097152);
    CHECK(r.survivor_count == 20736);
    CHECK(r.survivors.size() == 20736);
    CHECK(std::is_sorted(r.survivors.begin(), r.survivors.end()));
    CHECK(r.classes.size() == 14);
    const auto zero = std::count_if(r.classes.begin(), r.classes.end(), [](const SurvivorRecord& s) { return s.j_zero; });
    CHECK(zero == 3);
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const SurvivorRecord& s = r.classes[i];
        CAPTURE(s.equation);
        CHECK(s.canonical_code == s.code);
        CHECK(s.canonical_code == canonical_code(decode(s.code)));
        if (i > 0) CHECK(r.classes[i - 1].canonical_code < s.canonical_code);
        CHECK(s.survivor_count == s.orbit_size);
        CHECK(kGroupOrder % s.orbit_size == 0);
        total += s.survivor_count;
        const SurvivorRecord again = class_record(decode(s.code));
        CHECK(again.fibers == s.fibers);
        CHECK(again.j == s.j);
        CHECK(again.equation == s.equation);
    }
    CHECK(total == r.survivor_count);
}

TEST_CASE("survivors are closed under the group") {
    const ClassificationResult& r = full_run();
    std::vector<bool> is_survivor(kSpaceSize, false);
    for (const std::uint32_t c : r.survivors) is_survivor[c] = true;
    std::vector<bool> covered(kSpaceSize, false);
    std::uint32_t covered_count = 0;
    for (const SurvivorRecord& s : r.classes) {
        for_each_orbit_image(decode(s.code), [&](const WeierstrassEq& img) {
            const std::uint32_t c = encode(img);
            CHECK(is_survivor[c]);
            if (!covered[c]) {
                covered[c] = true;
                ++covered_count;
            }
        });
    }
    CHECK(covered_count == r.survivor_count);
}

TEST_CASE("survivor properties") {
    const ClassificationResult& r = full_run();
    int lacking_large_unstable = 0;
    for (const SurvivorRecord& s : r.classes) {
        CAPTURE(s.equation);
        const WeierstrassEq e = decode(s.code);
        CHECK(is_globally_minimal(e));
        const FiberConfiguration c = reduction_summary(e);
        CHECK(total_points(c) == 25);
        CHECK(c.euler_number() == 12);
        bool six = false;
        bool reducible_unstable = false;
        bool large_unstable = false;
        int unstable_places = 0;
        int unstable_components = 0;
        for (const LocalReduction& red : c.reductions) {
            if (red.symbol.is_additive()) {
                ++unstable_places;
                unstable_components = red.r_geom;
            }
            if (!red.place.is_rational()) continue;
            if (red.r_geom >= 6) six = true;
            if (red.symbol.is_additive() && red.r_geom >= 2) reducible_unstable = true;
            if (red.symbol.is_additive() && red.r_geom >= 6) large_unstable = true;
        }
        CHECK(six);
        CHECK(reducible_unstable);
        if (!large_unstable) {
            ++lacking_large_unstable;
            CHECK(tokens(s.fibers) == tokens("III+E4+I8"));
        }
        if (!s.j_zero) {
            CHECK(unstable_places == 1);
            if (unstable_components <= 5) CHECK(tokens(s.fibers) == tokens("III+E4+I8"));
        }
    }
    CHECK(lacking_large_unstable == 1);
}

TEST_CASE("survivor classes satisfy the point count of a constant Picard scheme") {
    for (const SurvivorRecord& s : full_run().classes) {
        CAPTURE(s.equation);
        const WeierstrassEq e = decode(s.code);
        for (int k = 1; k <= 6; ++k) {
            const long q = 1L << k;
            CAPTURE(q);
            CHECK(surface_points(e, k) == 1 + 10 * q + q * q);
        }
    }
}

TEST_CASE("golden tables") {
    const ClassificationResult& r = full_run();
    const GoldenReport report = verify_against_golden(r.classes);
    CHECK(report.matched.size() == 11);
    CHECK(report.unmatched_rows.empty());
    CHECK(report.unmatched_classes.size() == 3);
    CHECK(!report.bijection());
    CHECK(golden_rows().size() == 11);
    for (const GoldenMatch& m : report.matched) {
        const SurvivorRecord& cls = r.classes[m.class_index];
        const GoldenRow& row = golden_rows()[m.row];
        CHECK(canonical_code(parse_equation(row.equation)) == cls.canonical_code);
        CHECK(tokens(row.fibers) == tokens(cls.fibers));
    }
    for (const std::size_t i : report.unmatched_classes) {
        const std::string f = r.classes[i].fibers;
        const bool twisted = f.find('~') != std::string::npos;
        CHECK(twisted);
    }
    const auto find_row = [&](const std::string& fibers) {
        for (const GoldenMatch& m : report.matched)
            if (golden_rows()[m.row].fibers == fibers) return m;
        FAIL("row not matched: " << fibers);
        return GoldenMatch{};
    };
    const GoldenMatch ii = find_row("II*+E4+I1");
    CHECK(golden_rows()[ii.row].j == "t");
    CHECK(r.classes[ii.class_index].canonical_code == canonical_code(parse_equation("y^2+txy=x^3+t^5")));
    const GoldenMatch iv = find_row("IV*+E5+III");
    CHECK(r.classes[iv.class_index].j_zero);
    CHECK(!to_text(report, r.classes).empty());
}

TEST_CASE("shuffled golden data is reported") {
    const ClassificationResult& r = full_run();
    std::vector<GoldenRow> rows = golden_rows();
    std::swap(rows[0].fibers, rows[4].fibers);
    std::swap(rows[8].j, rows[2].j);
    const GoldenReport report = verify_against_golden(r.classes, rows);
    CHECK(report.unmatched_rows == std::vector<std::size_t>{0, 2, 4, 8});
    CHECK(report.matched.size() == 7);
    CHECK(report.unmatched_classes.size() == 7);
}

TEST_CASE("output is independent of workers and cache") {
    const std::string reference = to_json(full_run());
    for (const unsigned workers : {4U, 8U}) {
        SearchConfig cfg;
        cfg.worker_count = workers;
        CHECK(to_json(run_classification(cfg)) == reference);
    }
    const auto cache = temp_path("cache.bin");
    const auto out = temp_path("out.json");
    const auto csv = temp_path("out.csv");
    std::filesystem::remove(cache);
    SearchConfig cfg;
    cfg.worker_count = 2;
    cfg.cache_path = cache.string();
    cfg.output_path = out.string();
    cfg.csv_path = csv.string();
    CHECK(to_json(run_classification(cfg)) == reference);
    CHECK(std::filesystem::file_size(cache) == std::uintmax_t{8} * kSpaceSize);
    CHECK(slurp(out) == reference);
    CHECK(slurp(csv) == to_csv(full_run()));
    CHECK(slurp(csv).rfind("equation,fiber_t0,fiber_t1,fiber_inf,j\n", 0) == 0);
    const std::string bytes = slurp(cache);
    CHECK(static_cast<unsigned char>(bytes[8 * 5 + 0]) == 5);
    CHECK(bytes[8 * 5 + 6] == 0);
    CHECK(to_json(run_classification(cfg)) == reference);
    std::filesystem::resize_file(cache, 1000);
    CHECK(to_json(run_classification(cfg)) == reference);
    CHECK(std::filesystem::file_size(cache) == std::uintmax_t{8} * kSpaceSize);
    std::filesystem::remove(cache);
    std::filesystem::remove(out);
    std::filesystem::remove(csv);
}

TEST_CASE("search configuration errors") {
    SearchConfig zero;
    zero.worker_count = 0;
    CHECK_THROWS_AS(run_classification(zero), std::invalid_argument);
    SearchConfig bad;
    bad.output_path = "/nonexistent-dir/ellf2/out.json";
    CHECK_THROWS_AS(run_classification(bad), IoError);
}

TEST_CASE("analyze examples") {
    const AnalysisReport a = analyze_one("y^2+txy+ty=x^3+tx^2+tx");
    REQUIRE(a.config.has_value());
    CHECK(rational_fibers_text(*a.config) == "III+E4+I8");
    CHECK(a.filters.passed);
    CHECK(a.total_points == 25);
    CHECK(a.globally_minimal);
    CHECK(a.census.size() == 3);

    const AnalysisReport b = analyze_one("y^2+y=x^3");
    CHECK(b.discriminant == "1");
    CHECK(!b.singular);
    REQUIRE(b.config.has_value());
    for (const LocalReduction& r : b.config->reductions) CHECK(r.symbol.is_smooth());
    CHECK(!b.filters.passed);
    CHECK(std::find(b.filters.failures.begin(), b.filters.failures.end(), FilterTag::SumPoints25) != b.filters.failures.end());
    CHECK(b.j == "0");
    for (const RationalFiberCensus& c : b.census) CHECK(c.n_value == 3);
    REQUIRE(b.census[0].brute_force_points.has_value());
    CHECK(*b.census[0].brute_force_points == 3);
    CHECK(*b.census[1].brute_force_points == 3);
    // The given model reduces to a cusp at infinity; the smooth fiber belongs to the minimal model.
    CHECK(!b.census[2].brute_force_points.has_value());
    CHECK(!b.globally_minimal);
    CHECK(b.total_points == 9);

    const AnalysisReport c = analyze_one("y^2=x^3");
    CHECK(c.singular);
    CHECK(!c.config.has_value());
    CHECK(!c.filters.passed);
    CHECK(to_json(c).find("\"singular\": true") != std::string::npos);

    CHECK_THROWS_AS(analyze_one("y^2+q=x^3"), ParseError);
    CHECK(to_json(a).find("III") != std::string::npos);
}
