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

#ifndef ELLF2_SEARCH_HPP
#define ELLF2_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ellf2/census.hpp"
#include "ellf2/tate.hpp"
#include "ellf2/weierstrass.hpp"

namespace ellf2 {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Calls `visit` on every equation of the space in ascending code order.
void enumerate_space(const std::function<void(std::uint32_t code, const WeierstrassEq&)>& visit);

struct SearchConfig {
    unsigned worker_count = 1;
    /// JSON result file; nothing is written when empty.
    std::string output_path;
    /// CSV table file; nothing is written when empty.
    std::string csv_path;
    /// Progress lines on stderr.
    bool emit_trace = false;
    /// Flat file of 8-byte records; read if complete, otherwise rebuilt.
    std::optional<std::string> cache_path;
};

struct PlaceRecord {
    std::string place;
    std::string symbol;
    int v_delta = 0;
    int r_geom = 1;
    int r_rational = 1;
    bool split = false;
};

/// One isomorphism class of survivors, represented by its least code.
struct SurvivorRecord {
    std::uint32_t code = 0;
    std::uint32_t canonical_code = 0;
    std::string equation;
    /// "III*+E4+I2" over t = 0, 1, infinity.
    std::string fibers;
    /// Rational places first, then the other bad places.
    std::vector<PlaceRecord> places;
    std::string j;
    bool j_zero = false;
    /// Survivors in the class, and distinct equations in the orbit.
    std::uint32_t survivor_count = 0;
    std::uint32_t orbit_size = 0;
};

struct ClassificationResult {
    std::uint32_t space_size = kSpaceSize;
    std::uint32_t survivor_count = 0;
    /// Ascending canonical code.
    std::vector<SurvivorRecord> classes;
    /// Every surviving code, ascending.
    std::vector<std::uint32_t> survivors;
};

/// Throws std::invalid_argument for worker_count == 0, IoError on file errors.
ClassificationResult run_classification(const SearchConfig& cfg);

/// Summary record of the class containing `e`, computed from its canonical
/// form. survivor_count and orbit_size are filled in by run_classification.
SurvivorRecord class_record(const WeierstrassEq& e);

/// {meta: {space_size, survivor_count, class_count}, classes: [...]}
std::string to_json(const ClassificationResult& result);
/// equation, fibers over t = 0, 1, infinity, j.
std::string to_csv(const ClassificationResult& result);

struct GoldenRow {
    std::string equation;
    std::string fibers;
    std::string j;
};

/// The eleven tabulated classes, eight with j != 0 followed by three with j = 0.
const std::vector<GoldenRow>& golden_rows();

struct GoldenMatch {
    std::size_t row = 0;
    std::size_t class_index = 0;
    /// Relabeling of t that carries the class representative to the row.
    Mobius relabeling;
};

struct GoldenReport {
    std::vector<GoldenMatch> matched;
    std::vector<std::size_t> unmatched_rows;
    std::vector<std::size_t> unmatched_classes;

    bool bijection() const { return unmatched_rows.empty() && unmatched_classes.empty(); }
};

/// A row matches a class when its equation lies in the class and, under one
/// of the six relabelings of {0, 1, infinity}, the representative has the
/// row's fiber triple and j-invariant.
GoldenReport verify_against_golden(const std::vector<SurvivorRecord>& classes,
                                   const std::vector<GoldenRow>& rows = golden_rows());

std::string to_text(const GoldenReport& report, const std::vector<SurvivorRecord>& classes,
                    const std::vector<GoldenRow>& rows = golden_rows());

struct RationalFiberCensus {
    std::string place;
    std::string fiber;
    int n_value = 0;
    /// Affine points plus one, for smooth fibers only.
    std::optional<int> brute_force_points;
};

struct AnalysisReport {
    std::uint32_t code = 0;
    std::string equation;
    std::string discriminant;
    bool singular = false;
    std::optional<FiberConfiguration> config;
    FilterReport filters;
    std::string j;
    std::vector<RationalFiberCensus> census;
    int total_points = 0;
    bool globally_minimal = false;
    std::string trivial_lattice;
};

/// Throws ParseError. A vanishing discriminant is reported with singular = true.
AnalysisReport analyze_one(std::string_view text);
std::string to_json(const AnalysisReport& report);

}  // namespace ellf2

#endif  // ELLF2_SEARCH_HPP
