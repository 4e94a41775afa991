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

#ifndef ELLF2_WEIERSTRASS_HPP
#define ELLF2_WEIERSTRASS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ellf2/bitpoly.hpp"

namespace ellf2 {

/// Number of equations with deg a_i <= i, i.e. 2^(2+3+4+5+7).
inline constexpr std::uint32_t kSpaceSize = std::uint32_t{1} << 21;

/// Thrown by operations that need a smooth generic fiber.
class SingularEquation : public std::domain_error {
   public:
    SingularEquation() : std::domain_error("discriminant vanishes: generic fiber is singular") {}
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_2[t] with deg a_i <= i.
struct WeierstrassEq {
    BitPoly a1, a2, a3, a4, a6;

    /// Validating constructor; throws std::invalid_argument on a degree violation.
    static WeierstrassEq make(BitPoly a1, BitPoly a2, BitPoly a3, BitPoly a4, BitPoly a6);

    bool satisfies_degree_bounds() const;

    friend bool operator==(const WeierstrassEq&, const WeierstrassEq&) = default;
};

/// Bit layout: a1 in bits 0-1, a2 in 2-4, a3 in 5-8, a4 in 9-13, a6 in 14-20,
/// each coefficient list lowest degree first.
std::uint32_t encode(const WeierstrassEq& e);
WeierstrassEq decode(std::uint32_t code);

struct BInvariants {
    BitPoly b2, b4, b6, b8;
    friend bool operator==(const BInvariants&, const BInvariants&) = default;
};

BInvariants b_invariants(const WeierstrassEq& e);

/// b2^2 b8 + b6^2 + b2 b4 b6; degree at most 12.
BitPoly discriminant(const WeierstrassEq& e);

/// Element of F_2(t) as a reduced fraction with nonzero denominator.
struct RationalFunction {
    BitPoly num;
    BitPoly den = BitPoly::one();

    static RationalFunction reduced(BitPoly num, BitPoly den);
    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// "0", "t", "t^2/(1+t+t^2)".
std::string to_string(const RationalFunction& f);
/// Inverse of to_string; also accepts unparenthesized single-term parts.
RationalFunction parse_rational_function(std::string_view text);

/// a1^12 / discriminant in lowest terms. Throws SingularEquation if the
/// discriminant vanishes.
RationalFunction j_invariant(const WeierstrassEq& e);

/// The model in the chart s = 1/t: a_i'(s) = s^i a_i(1/s). An involution.
WeierstrassEq infinity_model(const WeierstrassEq& e);

/// Element of PGL_2(F_2) = GL_2(F_2) acting by t -> (a t + b) / (c t + d)
/// on weight-i coefficients: f -> (c t + d)^i f((a t + b)/(c t + d)).
struct Mobius {
    std::uint8_t a = 1, b = 0, c = 0, d = 1;

    static const std::array<Mobius, 6>& all();
    static Mobius identity() { return {}; }
    /// t -> t + 1, t -> 1/t
    static Mobius shift() { return {1, 1, 0, 1}; }
    static Mobius invert() { return {0, 1, 1, 0}; }

    /// Applies the weight-`weight` action; requires deg f <= weight.
    BitPoly act(BitPoly f, int weight) const;
    /// Image of a point of P^1(F_2) encoded 0, 1, 2 (= infinity) under the
    /// inverse map, i.e. where the fiber at `point` of the original lands.
    int moved_point(int point) const;

    /// The action of compose(m, n) equals acting with m, then with n.
    friend Mobius compose(Mobius m, Mobius n);
    friend Mobius inverse(Mobius m);
    friend bool operator==(Mobius, Mobius) = default;
};

WeierstrassEq apply_mobius(const WeierstrassEq& e, Mobius m);

/// x = x' + r, y = y' + s x' + w (unit u = 1) followed by the Mobius action.
/// Degree caps deg r <= 2, deg s <= 1, deg w <= 3 keep the bounded space.
struct IsoTransform {
    BitPoly r, s, w;
    Mobius mobius;

    static IsoTransform identity() { return {}; }
    /// 0 <= index < 512 enumerates the coordinate changes: r in bits 0-2,
    /// s in bits 3-4, w in bits 5-8.
    static IsoTransform coordinate_change(unsigned index, Mobius m = Mobius::identity());
    bool satisfies_degree_caps() const;

    friend bool operator==(const IsoTransform&, const IsoTransform&) = default;
};

inline constexpr unsigned kCoordinateChanges = 512;
inline constexpr unsigned kGroupOrder = kCoordinateChanges * 6;

/// Characteristic-2 substitution formulas, valid over any commutative ring
/// of characteristic 2 (polynomials, truncated power series).
template <class R>
void change_coordinates(R& a1, R& a2, R& a3, R& a4, R& a6, const R& r, const R& s, const R& w) {
    const R n2 = a2 + s * a1 + r + s * s;
    const R n3 = a3 + r * a1;
    const R n4 = a4 + s * a3 + (w + r * s) * a1 + r * r;
    const R n6 = a6 + r * a4 + r * r * a2 + r * r * r + w * a3 + w * w + r * w * a1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
}

WeierstrassEq apply_coordinate_change(const WeierstrassEq& e, BitPoly r, BitPoly s, BitPoly w);
WeierstrassEq apply_transform(const WeierstrassEq& e, const IsoTransform& g);

/// apply_transform(apply_transform(e, g), h) == apply_transform(e, compose(g, h)).
IsoTransform compose(const IsoTransform& g, const IsoTransform& h);
IsoTransform inverse(const IsoTransform& g);

/// Calls `visit` on all 3072 group images (with repetitions).
void for_each_orbit_image(const WeierstrassEq& e, const std::function<void(const WeierstrassEq&)>& visit);

/// Equation with the least 21-bit code in the orbit.
WeierstrassEq canonical_form(const WeierstrassEq& e);
std::uint32_t canonical_code(const WeierstrassEq& e);

/// "y^2 + t x y + t^2 y = x^3 + x^2 + (1+t) x + t^5"; zero terms omitted.
std::string to_string(const WeierstrassEq& e);

/// Accepts juxtaposition ("txy", "t^5(1+t)"), explicit '*', and terms on
/// either side of '='. Throws ParseError with the failing position.
WeierstrassEq parse_equation(std::string_view text);

/// Curve over F_2 from constant coefficients; a[i] is (a1, a2, a3, a4, a6)[i].
using F2Curve = std::array<bool, 5>;

bool is_smooth(const F2Curve& c);
/// Projective F_2-points, including the point at infinity.
int count_points(const F2Curve& c);

}  // namespace ellf2

#endif  // ELLF2_WEIERSTRASS_HPP
