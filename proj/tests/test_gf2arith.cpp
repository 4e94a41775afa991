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
#include <map>
#include <random>

#include "doctest.h"
#include "ellf2/bitpoly.hpp"
#include "ellf2/field.hpp"

using namespace ellf2;

namespace {

BitPoly P(const char* s) { return parse_poly(s); }

// Schoolbook product on coefficient vectors.
BitPoly oracle_mul(BitPoly f, BitPoly g) {
    std::uint64_t out = 0;
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            if (f.coeff(i) && g.coeff(j)) out ^= std::uint64_t{1} << (i + j);
    return BitPoly{out};
}

// Irreducible iff no polynomial of degree 1..deg/2 divides it.
bool oracle_irreducible(BitPoly f) {
    if (f.degree() < 1) return false;
    for (std::uint64_t g = 2; BitPoly{g}.degree() * 2 <= f.degree(); ++g)
        if (poly_mod(f, BitPoly{g}).is_zero()) return false;
    return true;
}

BitPoly random_poly(std::mt19937_64& rng, int max_degree) {
    return BitPoly{rng() & ((std::uint64_t{1} << (max_degree + 1)) - 1)};
}

BitPoly product(const std::vector<PolyFactor>& factors) {
    BitPoly out = BitPoly::one();
    for (const PolyFactor& f : factors) out = out * poly_pow(f.prime, static_cast<unsigned>(f.multiplicity));
    return out;
}

}  // namespace

TEST_CASE("poly_mul examples") {
    CHECK(P("t+1") * P("t+1") == P("1+t^2"));
    CHECK(P("1+t+t^5") * BitPoly::zero() == BitPoly::zero());
    CHECK(P("t") * P("t^2+t+1") == P("t^3+t^2+t"));
}

TEST_CASE("poly_mul agrees with schoolbook product and degrees add") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const BitPoly f = random_poly(rng, 30);
        const BitPoly g = random_poly(rng, 30);
        const BitPoly h = f * g;
        CHECK(h == oracle_mul(f, g));
        if (!f.is_zero() && !g.is_zero()) CHECK(h.degree() == f.degree() + g.degree());
    }
    CHECK_THROWS_AS(BitPoly::monomial(40) * BitPoly::monomial(30), std::overflow_error);
}

TEST_CASE("poly_divrem examples") {
    const DivRem a = poly_divrem(P("t^3"), P("t"));
    CHECK(a.quotient == P("t^2"));
    CHECK(a.remainder.is_zero());
    const DivRem b = poly_divrem(P("t^2+t+1"), P("t+1"));
    CHECK(b.quotient == P("t"));
    CHECK(b.remainder == BitPoly::one());
    const BitPoly f = P("1+t^3+t^7");
    CHECK(poly_divrem(f, BitPoly::one()).quotient == f);
    CHECK(poly_divrem(f, BitPoly::one()).remainder.is_zero());
    CHECK_THROWS_AS(poly_divrem(f, BitPoly::zero()), std::domain_error);
}

TEST_CASE("divrem round trip") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
        const BitPoly f = random_poly(rng, 40);
        BitPoly g = random_poly(rng, 15);
        if (g.is_zero()) g = BitPoly::one();
        const DivRem d = poly_divrem(f, g);
        CHECK(d.quotient * g + d.remainder == f);
        CHECK(d.remainder.degree() < g.degree());
    }
}

TEST_CASE("squaring is additive") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const BitPoly f = random_poly(rng, 20);
        const BitPoly g = random_poly(rng, 20);
        CHECK(poly_square(f + g) == poly_square(f) + poly_square(g));
        CHECK(poly_square(f) == f * f);
    }
}

TEST_CASE("irreducible enumeration matches trial-division sieve") {
    const std::vector<int> expected{2, 1, 2, 3, 6, 9};
    std::map<int, int> counts;
    for (const BitPoly p : irreducibles_up_to(6)) ++counts[p.degree()];
    for (int d = 1; d <= 6; ++d) CHECK(counts[d] == expected[static_cast<std::size_t>(d - 1)]);
    for (std::uint64_t bits = 2; bits < (std::uint64_t{1} << 11); ++bits)
        CHECK(is_irreducible(BitPoly{bits}) == oracle_irreducible(BitPoly{bits}));
    const auto& list = irreducibles_up_to(6);
    CHECK(std::is_sorted(list.begin(), list.end(), [](BitPoly a, BitPoly b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    }));
}

TEST_CASE("poly_factor examples") {
    const auto f = poly_factor(P("t^10") * P("t^2+t+1"));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == PolyFactor{P("t"), 10});
    CHECK(f[1] == PolyFactor{P("1+t+t^2"), 1});
    CHECK(poly_factor(BitPoly::one()).empty());
    const auto g = poly_factor(P("t^2+1"));
    REQUIRE(g.size() == 1);
    CHECK(g[0] == PolyFactor{P("1+t"), 2});
    CHECK_THROWS_AS(poly_factor(BitPoly::zero()), std::domain_error);
}

TEST_CASE("poly_factor is multiplicative and complete") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        BitPoly f = random_poly(rng, 12);
        BitPoly g = random_poly(rng, 12);
        if (f.is_zero()) f = BitPoly::one();
        if (g.is_zero()) g = BitPoly::one();
        const auto ff = poly_factor(f);
        const auto fg = poly_factor(g);
        const auto both = poly_factor(f * g);
        CHECK(product(both) == f * g);
        for (const PolyFactor& p : both) CHECK(oracle_irreducible(p.prime));
        std::map<std::uint64_t, int> expected;
        for (const auto& p : ff) expected[p.prime.bits()] += p.multiplicity;
        for (const auto& p : fg) expected[p.prime.bits()] += p.multiplicity;
        std::map<std::uint64_t, int> got;
        for (const auto& p : both) got[p.prime.bits()] += p.multiplicity;
        CHECK(got == expected);
    }
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const BitPoly f = random_poly(rng, 25);
        CHECK(parse_poly(to_string(f)) == f);
    }
    CHECK(to_string(P("t^5*(1+t)")) == "t^5+t^6");
    CHECK(to_string(BitPoly::zero()) == "0");
    CHECK_THROWS_AS(parse_poly("t^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x+1"), ParseError);
}

TEST_CASE("field examples") {
    const Field f4(FieldSpec::from_modulus(P("1+t+t^2")));
    const FieldElement u = f4.element(P("t"));
    CHECK(f4.mul(u, f4.add(u, f4.one())) == f4.one());
    for (const FieldElement x : f4.elements()) CHECK(f4.frobenius(f4.frobenius(x)) == x);
    const Field f8(FieldSpec::standard(3));
    const auto all = f8.elements();
    CHECK(all.size() == 8);
    CHECK(std::count_if(all.begin(), all.end(), [](FieldElement x) { return !x.is_zero(); }) == 7);
    CHECK_THROWS_AS(f8.inv(f8.zero()), std::domain_error);
    CHECK_THROWS_AS(Field(FieldSpec{2, P("1+t^2")}), std::invalid_argument);
}

TEST_CASE("field axioms for every standard degree") {
    std::mt19937_64 rng(16);
    for (int k = 1; k <= kMaxExtensionDegree; ++k) {
        const Field f(FieldSpec::standard(k));
        CHECK(is_irreducible(f.spec().modulus));
        CHECK(f.elements().size() == f.order());
        const auto pick = [&]() { return FieldElement{static_cast<std::uint32_t>(rng() % f.order())}; };
        for (int i = 0; i < 300; ++i) {
            const FieldElement x = pick();
            const FieldElement y = pick();
            const FieldElement z = pick();
            CHECK(f.mul(x, y) == f.mul(y, x));
            CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            CHECK(f.square(f.sqrt(x)) == x);
            CHECK(f.pow(x, f.order()) == x);
            CHECK(f.trace(x) == f.trace(f.square(x)));
            if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == f.one());
            // T^2 + bT + c has a root iff some element is one.
            if (k <= 6) {
                bool root = false;
                for (const FieldElement r : f.elements())
                    if (f.add(f.add(f.square(r), f.mul(x, r)), y).is_zero()) root = true;
                CHECK(f.quadratic_has_root(x, y) == root);
            }
        }
    }
}
