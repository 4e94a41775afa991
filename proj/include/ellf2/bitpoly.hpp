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

#ifndef ELLF2_BITPOLY_HPP
#define ELLF2_BITPOLY_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ellf2 {

/// Raised by every text parser in the library. `position` is the 0-based
/// byte offset of the offending character.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Polynomial over F_2 in the variable t, packed into one machine word:
/// bit i is the coefficient of t^i. Degrees up to 63 are representable;
/// products that would exceed that throw std::overflow_error.
class BitPoly {
   public:
    static constexpr int kMaxDegree = 63;

    constexpr BitPoly() = default;
    constexpr explicit BitPoly(std::uint64_t bits) : bits_(bits) {}

    static constexpr BitPoly zero() { return BitPoly{}; }
    static constexpr BitPoly one() { return BitPoly{1}; }
    static constexpr BitPoly t() { return BitPoly{2}; }
    static constexpr BitPoly monomial(int k) { return BitPoly{std::uint64_t{1} << k}; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    constexpr bool is_one() const { return bits_ == 1; }

    /// -1 for the zero polynomial.
    constexpr int degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr bool coeff(int i) const { return i >= 0 && i < 64 && ((bits_ >> i) & 1U) != 0; }

    /// Value at t = 0 and t = 1.
    constexpr bool at_zero() const { return (bits_ & 1U) != 0; }
    constexpr bool at_one() const { return (std::popcount(bits_) & 1) != 0; }

    friend constexpr BitPoly operator+(BitPoly f, BitPoly g) { return BitPoly{f.bits_ ^ g.bits_}; }
    friend constexpr BitPoly operator-(BitPoly f, BitPoly g) { return BitPoly{f.bits_ ^ g.bits_}; }
    constexpr BitPoly& operator+=(BitPoly g) {
        bits_ ^= g.bits_;
        return *this;
    }
    friend BitPoly operator*(BitPoly f, BitPoly g);
    BitPoly& operator*=(BitPoly g) { return *this = *this * g; }

    friend constexpr bool operator==(BitPoly, BitPoly) = default;
    friend constexpr auto operator<=>(BitPoly f, BitPoly g) { return f.bits_ <=> g.bits_; }

   private:
    std::uint64_t bits_ = 0;
};

/// Exact product. Throws std::overflow_error if deg f + deg g > 63.
BitPoly poly_mul(BitPoly f, BitPoly g);

/// f^2 by coefficient spreading; requires deg f <= 31.
BitPoly poly_square(BitPoly f);

BitPoly poly_pow(BitPoly f, unsigned e);

struct DivRem {
    BitPoly quotient;
    BitPoly remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error when g = 0.
DivRem poly_divrem(BitPoly f, BitPoly g);

BitPoly poly_mod(BitPoly f, BitPoly g);
BitPoly poly_gcd(BitPoly f, BitPoly g);

/// (f * g) mod m without intermediate overflow. Requires deg m <= 63.
BitPoly poly_mulmod(BitPoly f, BitPoly g, BitPoly m);

/// Largest k with p^k | f. Requires f != 0 and deg p >= 1.
int poly_valuation(BitPoly f, BitPoly p);

/// f(t + 1).
BitPoly poly_shift_by_one(BitPoly f);

/// t^n * f(1/t); requires deg f <= n.
BitPoly poly_reverse(BitPoly f, int n);

/// Rabin's test. Constants are not irreducible.
bool is_irreducible(BitPoly f);

/// All irreducible polynomials of degree 1..max_degree sorted by
/// (degree, encoding). Supports max_degree <= 12.
const std::vector<BitPoly>& irreducibles_up_to(int max_degree);

struct PolyFactor {
    BitPoly prime;
    int multiplicity = 0;
    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization by trial division over enumerated irreducibles,
/// sorted by (degree, encoding). Handles every input of degree <= 25;
/// the zero polynomial throws std::domain_error.
std::vector<PolyFactor> poly_factor(BitPoly f);

/// Ascending-degree text, e.g. "1+t+t^2", "t^5+t^6", "0".
std::string to_string(BitPoly f);

/// Parses sums of products of 0, 1, t, parenthesized subexpressions and
/// integer powers: "t^5+t^6", "t^5*(1+t)", "(t+1)^2".
BitPoly parse_poly(std::string_view text);

}  // namespace ellf2

#endif  // ELLF2_BITPOLY_HPP
