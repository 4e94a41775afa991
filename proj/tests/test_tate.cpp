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

#include <random>

#include "doctest.h"
#include "ellf2/tate.hpp"

using namespace ellf2;

namespace {

WeierstrassEq E(const char* s) { return parse_equation(s); }
BitPoly P(const char* s) { return parse_poly(s); }

WeierstrassEq random_nonsingular(std::mt19937_64& rng) {
    for (;;) {
        const WeierstrassEq e = decode(static_cast<std::uint32_t>(rng() % kSpaceSize));
        if (!discriminant(e).is_zero()) return e;
    }
}

void check_same(const LocalReduction& a, const LocalReduction& b) {
    CHECK(a.symbol == b.symbol);
    CHECK(a.v_delta == b.v_delta);
    CHECK(a.r_geom == b.r_geom);
    CHECK(a.r_rational == b.r_rational);
    CHECK(a.split == b.split);
    CHECK(a.twisted == b.twisted);
    CHECK(a.minimal == b.minimal);
    CHECK(a.smooth_fiber == b.smooth_fiber);
}

}  // namespace

TEST_CASE("places") {
    CHECK(Place::infinity().is_rational());
    CHECK(Place::zero().to_string() == "t");
    CHECK(Place::one().to_string() == "1+t");
    CHECK(Place::infinity().to_string() == "inf");
    CHECK(Place::finite(P("1+t+t^2")).degree() == 2);
    CHECK_THROWS_AS(Place::finite(P("1+t^2")), std::invalid_argument);
}

TEST_CASE("tate examples") {
    const LocalReduction a = tate_algorithm(E("y^2+txy=x^3+t^5"), Place::zero());
    CHECK(a.symbol == KodairaSymbol::of(KodairaFamily::IIstar));
    CHECK(a.r_geom == 9);
    CHECK(a.v_delta == 11);

    const LocalReduction b = tate_algorithm(E("y^2+txy=x^3+t^2x^2+t^3x"), Place::infinity());
    CHECK(b.symbol == KodairaSymbol::I(2));
    CHECK(b.twisted);
    CHECK(!b.split);
    CHECK(b.r_rational == 2);
    CHECK(b.symbol_text() == "I~2");

    const LocalReduction c = tate_algorithm(E("y^2+txy=x^3+t^3x+t^5(1+t)"), Place::finite(P("1+t+t^2")));
    CHECK(c.symbol == KodairaSymbol::I(1));
    CHECK(c.v_delta == 1);

    for (const BitPoly p : irreducibles_up_to(4)) CHECK(tate_algorithm(E("y^2+y=x^3"), Place::finite(p)).symbol.is_smooth());
    CHECK_THROWS_AS(tate_algorithm(E("y^2=x^3+x^2"), Place::zero()), SingularEquation);
}

TEST_CASE("reduction summary examples") {
    CHECK(rational_fibers_text(reduction_summary(E("y^2+txy=x^3+tx^2+t^4x"))) == "I4*+E2+E4");
    CHECK(rational_fibers_text(reduction_summary(E("y^2+t^2y=x^3"))) == "IV*+E3+IV");
    CHECK(rational_fibers_text(reduction_summary(E("y^2+txy+ty=x^3+tx^2+tx"))) == "III+E4+I8");
    const FiberConfiguration c = reduction_summary(E("y^2+txy=x^3+t^3x+t^5(1+t)"));
    REQUIRE(c.reductions.size() == 4);
    CHECK(c.reductions[3].place == Place::finite(P("1+t+t^2")));
    CHECK(c.at(Place::finite(P("1+t+t^2"))).symbol == KodairaSymbol::I(1));
    CHECK(c.euler_number() == 12);
    CHECK(c.smooth_rational_fiber(1)->curve_class == 4);
    CHECK(!c.smooth_rational_fiber(0));
}

TEST_CASE("tabulated equations are minimal with the tabulated fibers") {
    const std::vector<std::pair<const char*, const char*>> rows{
        {"y^2+txy+t^2y=x^3+tx^2+t^4x+t^5(1+t)", "I1*+E4+I4"},
        {"y^2+txy=x^3+t^3x+t^5(1+t)", "III*+E4+E4"},
        {"y^2+txy=x^3+t^3x", "III*+E4+I2"},
        {"y^2+txy=x^3+t^2x^2+t^3x", "III*+E2+I~2"},
        {"y^2+txy=x^3+t^5", "II*+E4+I1"},
        {"y^2+txy=x^3+t^2x^2+t^5", "II*+E2+I~1"},
        {"y^2+txy+ty=x^3+tx^2+tx", "III+E4+I8"},
        {"y^2+t^2y=x^3+tx^2", "I1*+E5+IV"},
        {"y^2+t^2y=x^3+t^3x", "IV*+E5+III"},
        {"y^2+t^2y=x^3", "IV*+E3+IV"},
    };
    for (const auto& [eq, fibers] : rows) {
        CAPTURE(eq);
        const WeierstrassEq e = E(eq);
        CHECK(is_globally_minimal(e));
        const FiberConfiguration c = reduction_summary(e);
        CHECK(rational_fibers_text(c) == fibers);
        CHECK(c.euler_number() == 12);
    }
}

TEST_CASE("minimality") {
    CHECK(!is_globally_minimal(E("y^2+t^3y=x^3")));
    const LocalReduction r = tate_algorithm(E("y^2+t^3y=x^3"), Place::zero());
    CHECK(!r.minimal);
    CHECK(r.symbol.is_smooth());
    CHECK(r.v_delta == 0);
    // The chart at infinity of y^2+y=x^3 is y^2+s^3y=x^3.
    CHECK(!is_globally_minimal(E("y^2+y=x^3")));
    CHECK(!tate_algorithm(E("y^2+y=x^3"), Place::infinity()).minimal);
    CHECK(tate_algorithm(E("y^2+y=x^3"), Place::zero()).minimal);
}

TEST_CASE("infinity agrees with t = 0 of the flipped model") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3000; ++i) {
        const WeierstrassEq e = random_nonsingular(rng);
        CAPTURE(to_string(e));
        check_same(tate_algorithm(e, Place::infinity()), tate_algorithm(infinity_model(e), Place::zero()));
    }
}

TEST_CASE("t = 1 agrees with t = 0 of the shifted model") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 3000; ++i) {
        const WeierstrassEq e = random_nonsingular(rng);
        CAPTURE(to_string(e));
        check_same(tate_algorithm(e, Place::one()), tate_algorithm(apply_mobius(e, Mobius::shift()), Place::zero()));
    }
}

TEST_CASE("local invariants on random equations") {
    std::mt19937_64 rng(33);
    int minimal_count = 0;
    for (int i = 0; i < 3000; ++i) {
        const WeierstrassEq e = random_nonsingular(rng);
        CAPTURE(to_string(e));
        const FiberConfiguration c = reduction_summary(e);
        bool minimal = true;
        for (const LocalReduction& r : c.reductions) {
            CHECK(r.r_rational <= r.r_geom);
            CHECK(r.r_geom == r.symbol.components());
            if (!r.minimal) minimal = false;
            if (r.symbol.is_smooth()) CHECK(r.v_delta == 0);
            if (r.symbol.is_semistable()) {
                CHECK(r.v_delta == r.symbol.n);
                CHECK(r.r_geom == r.symbol.n);
                if (r.split) CHECK(r.r_rational == r.r_geom);
                if (!r.split && r.symbol.n >= 3) CHECK(r.r_rational < r.r_geom);
                if (!r.split && r.symbol.n <= 2) {
                    CHECK(r.r_rational == r.r_geom);
                    CHECK(r.twisted);
                }
            } else {
                CHECK(!r.twisted);
            }
            if (r.place.is_rational() && r.symbol.is_smooth()) CHECK(r.smooth_fiber.has_value());
        }
        for (const PolyFactor& f : poly_factor(c.discriminant))
            if (f.multiplicity == 1) CHECK(c.at(Place::finite(f.prime)).symbol == KodairaSymbol::I(1));
        CHECK(minimal == is_globally_minimal(e));
        if (minimal) {
            ++minimal_count;
            CHECK((c.euler_number() == 12 || c.euler_number() == 0));
        }
    }
    CHECK(minimal_count > 1000);
}

TEST_CASE("smooth fiber classes") {
    CHECK(classify_smooth_fiber({false, true, true, false, true}).curve_class == 1);
    CHECK(classify_smooth_fiber({true, false, false, true, false}).curve_class == 4);
    const SmoothFiberClass e5 = classify_smooth_fiber({false, true, true, false, false});
    CHECK(e5.curve_class == 5);
    CHECK(e5.supersingular);
    CHECK_THROWS(classify_smooth_fiber({false, false, false, false, false}));
}
