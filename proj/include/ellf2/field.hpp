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

#ifndef ELLF2_FIELD_HPP
#define ELLF2_FIELD_HPP

#include <cstdint>
#include <vector>

#include "ellf2/bitpoly.hpp"

namespace ellf2 {

inline constexpr int kMaxExtensionDegree = 12;

/// F_2[u]/(modulus) with deg modulus = k.
struct FieldSpec {
    int k = 1;
    BitPoly modulus{3};

    /// Fixed Conway polynomial for F_{2^k}, 1 <= k <= 12.
    static FieldSpec standard(int k);
    /// Residue field of the place `modulus`; throws if not irreducible.
    static FieldSpec from_modulus(BitPoly modulus);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of a Field, stored as the bit pattern of its reduced
/// representative. Only meaningful together with the Field it came from.
struct FieldElement {
    std::uint32_t repr = 0;

    bool is_zero() const { return repr == 0; }
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
   public:
    /// Throws std::invalid_argument unless 1 <= k <= 12 and the modulus is
    /// irreducible of degree k.
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return spec_.k; }
    std::uint32_t order() const { return std::uint32_t{1} << spec_.k; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return {1}; }
    /// Reduces an arbitrary polynomial into the field.
    FieldElement element(BitPoly representative) const;
    BitPoly representative(FieldElement x) const { return BitPoly{x.repr}; }

    FieldElement add(FieldElement x, FieldElement y) const { return {x.repr ^ y.repr}; }
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement square(FieldElement x) const { return mul(x, x); }
    FieldElement pow(FieldElement x, std::uint64_t e) const;
    /// Throws std::domain_error on zero.
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    FieldElement frobenius(FieldElement x) const { return square(x); }
    /// Unique square root (the field is perfect).
    FieldElement sqrt(FieldElement x) const;
    /// Absolute trace to F_2, returned as 0 or 1.
    int trace(FieldElement x) const;

    /// Does T^2 + b*T + c have a root in the field?
    bool quadratic_has_root(FieldElement b, FieldElement c) const;

    /// All 2^k elements in encoding order.
    std::vector<FieldElement> elements() const;

   private:
    FieldSpec spec_;
};

}  // namespace ellf2

#endif  // ELLF2_FIELD_HPP
