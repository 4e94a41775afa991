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
#include <random>

#include "doctest.h"
#include "ellf2/census.hpp"

using namespace ellf2;

namespace {

WeierstrassEq E(const char* s) { return parse_equation(s); }

bool has_failure(const FilterReport& r, FilterTag t) {
    return std::find(r.failures.begin(), r.failures.end(), t) != r.failures.end();
}

// Projective points of the cubic by direct enumeration of F_2^2.
int oracle_points(const F2Curve& c) {
    int n = 1;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y) {
            const int lhs = y * y + c[0] * x * y + c[2] * y;
            const int rhs = x * x * x + c[1] * x * x + c[3] * x + c[4];
            if ((lhs + rhs) % 2 == 0) ++n;
        }
    return n;
}

F2Curve curve_from_bits(unsigned bits) {
    F2Curve c{};
    for (std::size_t i = 0; i < 5; ++i) c[i] = ((bits >> i) & 1U) != 0;
    return c;
}

}  // namespace

TEST_CASE("the five elliptic curves over F_2") {
    const std::vector<std::pair<const char*, int>> curves{
        {"y^2+y=x^3+x^2+1", 1}, {"y^2+xy=x^3+x^2+x", 2}, {"y^2+y=x^3", 3}, {"y^2+xy=x^3+x", 4}, {"y^2+y=x^3+x^2", 5}};
    for (const auto& [eq, count] : curves) {
        CAPTURE(eq);
        for (const Place& p : {Place::zero(), Place::one()}) {
            const SmoothFiberClass c = count_points_smooth(E(eq), p);
            CHECK(c.curve_class == count);
            CHECK(c.supersingular == (count % 2 == 1));
        }
    }
    CHECK_THROWS_AS(count_points_smooth(E("y^2+t y=x^3"), Place::zero()), std::domain_error);
}

TEST_CASE("point counts agree with brute force on every cubic over F_2") {
    for (unsigned bits = 0; bits < 32; ++bits) {
        const F2Curve c = curve_from_bits(bits);
        CHECK(count_points(c) == oracle_points(c));
        WeierstrassEq e;
        e.a1 = BitPoly{c[0] ? 1U : 0U};
        e.a2 = BitPoly{c[1] ? 1U : 0U};
        e.a3 = BitPoly{c[2] ? 1U : 0U};
        e.a4 = BitPoly{c[3] ? 1U : 0U};
        e.a6 = BitPoly{c[4] ? 1U : 0U};
        CHECK(is_smooth(c) == !discriminant(e).is_zero());
        if (is_smooth(c)) {
            const SmoothFiberClass s = classify_smooth_fiber(c);
            CHECK(s.curve_class == oracle_points(c));
            CHECK(s.supersingular == !c[0]);
            CHECK(s.supersingular == (s.curve_class % 2 == 1));
        }
    }
}

TEST_CASE("fiber point formulas") {
    CHECK(fiber_points(RationalFiberClass::semistable(2, false), 2) == 4);
    CHECK(fiber_points(RationalFiberClass::semistable(2, true), 2) == 6);
    CHECK(fiber_points(RationalFiberClass::semistable(1, true), 2) == 4);
    CHECK(fiber_points(RationalFiberClass::unstable(9), 2) == 19);
    CHECK_THROWS(fiber_points(RationalFiberClass::smooth(4, false), 2));
    CHECK(n_value(RationalFiberClass::unstable(6)) == 13);
    CHECK(n_value(RationalFiberClass::smooth(4, false)) == 4);
    CHECK(n_value(RationalFiberClass::semistable(2, true)) == 6);
    for (int r = 1; r <= 9; ++r) {
        CHECK(n_value(RationalFiberClass::semistable(r, false)) == fiber_points(RationalFiberClass::semistable(r, false), 2));
        CHECK(n_value(RationalFiberClass::unstable(r)) == fiber_points(RationalFiberClass::unstable(r), 2));
    }
    CHECK_THROWS_AS(RationalFiberClass::smooth(3, false), std::invalid_argument);
    CHECK_THROWS_AS(RationalFiberClass::smooth(6, false), std::invalid_argument);
}

TEST_CASE("total points of tabulated configurations") {
    CHECK(total_points(reduction_summary(E("y^2+txy=x^3+t^5"))) == 25);
    CHECK(total_points(reduction_summary(E("y^2+t^2y=x^3+tx^2"))) == 25);
    const FiberConfiguration c = reduction_summary(E("y^2+txy=x^3+t^2x^2+t^3x"));
    CHECK(n_value(rational_fiber_class(c, 0)) == 17);
    CHECK(n_value(rational_fiber_class(c, 1)) == 2);
    CHECK(n_value(rational_fiber_class(c, 2)) == 6);
    CHECK(rational_fiber_class(c, 2).twisted);
}

TEST_CASE("filter examples") {
    const FilterReport ok = apply_filters(E("y^2+txy=x^3+t^5"));
    CHECK(ok.passed);
    CHECK(ok.failures.empty());
    const FilterReport constant = apply_filters(E("y^2+y=x^3"));
    CHECK(!constant.passed);
    CHECK(has_failure(constant, FilterTag::SumPoints25));
    const FilterReport singular = apply_filters(E("y^2=x^3"));
    CHECK(singular.failures == std::vector<FilterTag>{FilterTag::NonzeroDiscriminant});
    CHECK(singular.failure_mask() == 1);

    bool found = false;
    for (std::uint32_t code = 0; code < kSpaceSize && !found; ++code) {
        const WeierstrassEq e = decode(code);
        if (discriminant(e).is_zero()) continue;
        if (tate_algorithm(e, Place::zero()).symbol != KodairaSymbol::Istar(0)) continue;
        found = true;
        CAPTURE(to_string(e));
        CHECK(has_failure(apply_filters(e), FilterTag::NoI0Star));
    }
    CHECK(found);
}

TEST_CASE("filter tags") {
    for (const FilterTag t : kAllFilterTags) CHECK(parse_filter_tag(to_string(t)) == t);
    CHECK(to_string(FilterTag::NoI0Star) == "no_I0star");
    CHECK_THROWS_AS(parse_filter_tag("bogus"), ParseError);
}

TEST_CASE("short-circuit filters agree with the full report") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20000; ++i) {
        const WeierstrassEq e = decode(static_cast<std::uint32_t>(rng() % kSpaceSize));
        const FilterReport full = apply_filters(e);
        CAPTURE(to_string(e));
        CHECK(passes_filters(e) == full.passed);
        CHECK(filter_digest(e).failure_mask == full.failure_mask());
        bool i0star = false;
        if (!discriminant(e).is_zero())
            for (const LocalReduction& r : reduction_summary(e).reductions)
                if (r.symbol == KodairaSymbol::Istar(0)) i0star = true;
        CHECK(has_failure(full, FilterTag::NoI0Star) == i0star);
    }
}

TEST_CASE("survivors of a sample satisfy the census identities") {
    std::mt19937_64 rng(42);
    int seen = 0;
    for (std::uint32_t code = 0; code < kSpaceSize; code += 1 + static_cast<std::uint32_t>(rng() % 64)) {
        const WeierstrassEq e = decode(code);
        if (!passes_filters(e)) continue;
        ++seen;
        const FiberConfiguration c = reduction_summary(e);
        CHECK(total_points(c) == 25);
        CHECK(c.euler_number() == 12);
        for (int p = 0; p < 3; ++p) {
            const LocalReduction& r = c.rational(p);
            if (!r.symbol.is_smooth()) continue;
            const F2Curve fiber = fiber_at(e, r.place);
            REQUIRE(is_smooth(fiber));
            CHECK(oracle_points(fiber) == classify_smooth_fiber(*r.smooth_fiber).curve_class);
        }
    }
    CHECK(seen > 100);
}
