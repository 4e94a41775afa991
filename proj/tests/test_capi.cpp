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

// Exercises libellf2 through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "ellf2/ellf2.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    ellf2_string_free(s);
    return out;
}

struct Equation {
    ellf2_equation* e = nullptr;
    explicit Equation(const char* text) { REQUIRE(ellf2_equation_parse(text, &e) == ELLF2_OK); }
    ~Equation() { ellf2_equation_free(e); }
    Equation(const Equation&) = delete;
    Equation& operator=(const Equation&) = delete;
};

}  // namespace

TEST_CASE("library metadata") {
    CHECK(std::string(ellf2_version()) == ELLF2_VERSION_STRING);
    CHECK(std::string(ellf2_status_name(ELLF2_OK)) == "ok");
    for (int s = ELLF2_OK; s <= ELLF2_INTERNAL; ++s) CHECK(std::strlen(ellf2_status_name(static_cast<ellf2_status>(s))) > 0);
    CHECK(ELLF2_SPACE_SIZE == 2097152U);
}

TEST_CASE("equation handles") {
    Equation e("y^2+txy=x^3+t^5");
    uint32_t code = 0;
    REQUIRE(ellf2_equation_code(e.e, &code) == ELLF2_OK);
    ellf2_equation* again = nullptr;
    REQUIRE(ellf2_equation_from_code(code, &again) == ELLF2_OK);
    char* text = nullptr;
    REQUIRE(ellf2_equation_text(again, &text) == ELLF2_OK);
    CHECK(take(text) == "y^2 + t x y = x^3 + t^5");
    ellf2_equation_free(again);

    char* s = nullptr;
    REQUIRE(ellf2_equation_fibers(e.e, &s) == ELLF2_OK);
    CHECK(take(s) == "II*+E4+I1");
    REQUIRE(ellf2_equation_j_invariant(e.e, &s) == ELLF2_OK);
    CHECK(take(s) == "t");
    REQUIRE(ellf2_equation_discriminant(e.e, &s) == ELLF2_OK);
    CHECK(!take(s).empty());
    uint8_t mask = 0xFF;
    REQUIRE(ellf2_equation_filter_mask(e.e, &mask) == ELLF2_OK);
    CHECK(mask == 0);
    uint32_t canonical = 0;
    REQUIRE(ellf2_equation_canonical_code(e.e, &canonical) == ELLF2_OK);
    CHECK(canonical <= code);
}

TEST_CASE("error statuses") {
    ellf2_equation* e = nullptr;
    CHECK(ellf2_equation_parse("y^2+z=x^3", &e) == ELLF2_PARSE);
    CHECK(e == nullptr);
    CHECK(std::strlen(ellf2_last_error()) > 0);
    CHECK(ellf2_equation_parse(nullptr, &e) == ELLF2_INVALID_ARGUMENT);
    CHECK(ellf2_equation_parse("y^2=x^3", nullptr) == ELLF2_INVALID_ARGUMENT);
    CHECK(ellf2_equation_from_code(ELLF2_SPACE_SIZE, &e) == ELLF2_INVALID_ARGUMENT);
    uint32_t code = 0;
    CHECK(ellf2_equation_code(nullptr, &code) == ELLF2_INVALID_ARGUMENT);

    Equation singular("y^2=x^3");
    char* s = nullptr;
    CHECK(ellf2_equation_fibers(singular.e, &s) == ELLF2_SINGULAR);
    CHECK(ellf2_equation_j_invariant(singular.e, &s) != ELLF2_OK);
    uint8_t mask = 0;
    REQUIRE(ellf2_equation_filter_mask(singular.e, &mask) == ELLF2_OK);
    CHECK(mask == 1);

    char* json = nullptr;
    REQUIRE(ellf2_analyze("y^2=x^3", &json) == ELLF2_OK);
    CHECK(nlohmann::json::parse(take(json))["singular"] == true);
    CHECK(ellf2_analyze("y^2+q=x^3", &json) == ELLF2_PARSE);

    char* mw = nullptr;
    CHECK(ellf2_mw_lookup("E8", &mw) == ELLF2_NOT_EMBEDDED);
    REQUIRE(ellf2_mw_lookup("D7", &mw) == ELLF2_OK);
    CHECK(take(mw) == "<1/4>");

    ellf2_search_options opts;
    ellf2_search_options_init(&opts);
    opts.worker_count = 0;
    ellf2_classification* c = nullptr;
    CHECK(ellf2_classify(&opts, &c) == ELLF2_INVALID_ARGUMENT);
    opts.worker_count = 1;
    opts.output_path = "/nonexistent-dir/ellf2/out.json";
    CHECK(ellf2_classify(&opts, &c) == ELLF2_IO);
    CHECK(c == nullptr);

    ellf2_string_free(nullptr);
    ellf2_equation_free(nullptr);
    ellf2_graph_free(nullptr);
    ellf2_classification_free(nullptr);
}

TEST_CASE("graphs and heights") {
    const char* json =
        "{\"vertices\": [\"A\", \"B\", \"C\"], \"edges\": [[\"A\", \"B\", 1], [\"B\", \"C\", 1], [\"C\", \"A\", 1]]}";
    ellf2_graph* g = nullptr;
    REQUIRE(ellf2_graph_from_json(json, &g) == ELLF2_OK);
    int64_t det = 1;
    REQUIRE(ellf2_graph_det(g, &det) == ELLF2_OK);
    CHECK(det == 0);
    char* out = nullptr;
    REQUIRE(ellf2_graph_canonical(g, &out) == ELLF2_OK);
    const auto curves = nlohmann::json::parse(take(out));
    REQUIRE(curves.size() == 1);
    CHECK(curves[0]["symbol"] == "I3");
    ellf2_graph_free(g);
    CHECK(ellf2_graph_from_json("{\"vertices\": 3}", &g) == ELLF2_PARSE);

    REQUIRE(ellf2_height_solve("1/12", "IV,I1*", 3, 0, &out) == ELLF2_OK);
    const auto sol = nlohmann::json::parse(take(out));
    REQUIRE(sol.size() == 1);
    CHECK(sol[0]["po"] == 0);
    CHECK(sol[0]["contributions"] == nlohmann::json::array({"2/3", "5/4"}));
    CHECK(ellf2_height_solve("1/12", "IV,,I1*", 3, 0, &out) == ELLF2_PARSE);
    CHECK(ellf2_height_solve("x", "IV", 3, 0, &out) == ELLF2_PARSE);
    CHECK(ellf2_height_solve("0", "IV", 3, -1, &out) == ELLF2_INVALID_ARGUMENT);
}

TEST_CASE("classification through the C interface") {
    ellf2_search_options opts;
    ellf2_search_options_init(&opts);
    opts.worker_count = 2;
    ellf2_classification* c = nullptr;
    REQUIRE(ellf2_classify(&opts, &c) == ELLF2_OK);
    uint32_t survivors = 0;
    REQUIRE(ellf2_classification_survivor_count(c, &survivors) == ELLF2_OK);
    CHECK(survivors == 20736);
    size_t classes = 0;
    REQUIRE(ellf2_classification_class_count(c, &classes) == ELLF2_OK);
    CHECK(classes == 14);
    uint32_t code = 0;
    REQUIRE(ellf2_classification_class_code(c, 0, &code) == ELLF2_OK);
    CHECK(ellf2_classification_class_code(c, classes, &code) == ELLF2_INVALID_ARGUMENT);
    char* json = nullptr;
    REQUIRE(ellf2_classification_json(c, &json) == ELLF2_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["meta"]["class_count"] == 14);
    CHECK(doc["classes"][0]["canonical_code"] == code);
    char* csv = nullptr;
    REQUIRE(ellf2_classification_csv(c, &csv) == ELLF2_OK);
    CHECK(take(csv).rfind("equation,fiber_t0,fiber_t1,fiber_inf,j\n", 0) == 0);
    int bijection = 1;
    char* report = nullptr;
    REQUIRE(ellf2_classification_golden_check(c, &bijection, &report) == ELLF2_OK);
    CHECK(bijection == 0);
    CHECK(!take(report).empty());
    ellf2_classification_free(c);
}
