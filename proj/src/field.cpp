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

#include "ellf2/field.hpp"

#include <array>
#include <stdexcept>

namespace ellf2 {

namespace {

// Conway polynomials C_{2,k}, bit i = coefficient of u^i.
constexpr std::array<std::uint64_t, kMaxExtensionDegree + 1> kConway = {
    0,
    0b11,                // u + 1
    0b111,               // u^2 + u + 1
    0b1011,              // u^3 + u + 1
    0b10011,             // u^4 + u + 1
    0b100101,            // u^5 + u^2 + 1
    0b1011011,           // u^6 + u^4 + u^3 + u + 1
    0b10000011,          // u^7 + u + 1
    0b100011101,         // u^8 + u^4 + u^3 + u^2 + 1
    0b1000010001,        // u^9 + u^4 + 1
    0b10001101111,       // u^10 + u^6 + u^5 + u^3 + u^2 + u + 1
    0b100000000101,      // u^11 + u^2 + 1
    0b1000011101011,     // u^12 + u^7 + u^6 + u^5 + u^3 + u + 1
};

}  // namespace

FieldSpec FieldSpec::standard(int k) {
    if (k < 1 || k > kMaxExtensionDegree) throw std::invalid_argument("FieldSpec: degree must lie in 1..12");
    return {k, BitPoly{kConway[static_cast<std::size_t>(k)]}};
}

FieldSpec FieldSpec::from_modulus(BitPoly modulus) {
    if (!is_irreducible(modulus)) throw std::invalid_argument("FieldSpec: modulus " + to_string(modulus) + " is reducible");
    return {modulus.degree(), modulus};
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.k < 1 || spec_.k > kMaxExtensionDegree) throw std::invalid_argument("Field: degree must lie in 1..12");
    if (spec_.modulus.degree() != spec_.k || !is_irreducible(spec_.modulus))
        throw std::invalid_argument("Field: modulus must be irreducible of degree k");
}

FieldElement Field::element(BitPoly representative) const {
    return {static_cast<std::uint32_t>(poly_mod(representative, spec_.modulus).bits())};
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
    std::uint32_t acc = 0;
    std::uint32_t a = x.repr;
    std::uint32_t b = y.repr;
    while (b != 0) {
        if (b & 1U) acc ^= a;
        b >>= 1;
        a <<= 1;
    }
    const int k = spec_.k;
    const auto m = static_cast<std::uint32_t>(spec_.modulus.bits());
    for (int i = 2 * k - 2; i >= k; --i)
        if ((acc >> i) & 1U) acc ^= m << (i - k);
    return {acc};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = one();
    while (e != 0) {
        if (e & 1U) result = mul(result, x);
        x = square(x);
        e >>= 1;
    }
    return result;
}

FieldElement Field::inv(FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("Field::inv: zero has no inverse");
    return pow(x, order() - 2);
}

FieldElement Field::sqrt(FieldElement x) const {
    // x^(2^(k-1)) inverts the Frobenius.
    for (int i = 1; i < spec_.k; ++i) x = square(x);
    return x;
}

int Field::trace(FieldElement x) const {
    FieldElement acc = x;
    FieldElement cur = x;
    for (int i = 1; i < spec_.k; ++i) {
        cur = square(cur);
        acc = add(acc, cur);
    }
    return static_cast<int>(acc.repr & 1U);
}

bool Field::quadratic_has_root(FieldElement b, FieldElement c) const {
    if (b.is_zero()) return true;  // T^2 = c always has its square root
    // T = b Z turns the equation into Z^2 + Z = c / b^2.
    return trace(div(c, square(b))) == 0;
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (std::uint32_t r = 0; r < order(); ++r) out.push_back({r});
    return out;
}

}  // namespace ellf2
