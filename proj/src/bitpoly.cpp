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

#include "ellf2/bitpoly.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "text_cursor.hpp"

namespace ellf2 {

namespace {

// Carry-less product of two words whose degrees sum to at most 63.
constexpr std::uint64_t clmul_low(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b != 0) {
        const int i = std::countr_zero(b);
        acc ^= a << i;
        b &= b - 1;
    }
    return acc;
}

constexpr int kFactorTableDegree = 12;

}  // namespace

BitPoly operator*(BitPoly f, BitPoly g) { return poly_mul(f, g); }

BitPoly poly_mul(BitPoly f, BitPoly g) {
    if (f.is_zero() || g.is_zero()) return BitPoly::zero();
    if (f.degree() + g.degree() > BitPoly::kMaxDegree)
        throw std::overflow_error("poly_mul: product degree exceeds 63");
    // Iterate over the sparser operand.
    if (std::popcount(f.bits()) < std::popcount(g.bits())) std::swap(f, g);
    return BitPoly{clmul_low(f.bits(), g.bits())};
}

BitPoly poly_square(BitPoly f) {
    if (f.degree() > 31) throw std::overflow_error("poly_square: degree exceeds 31");
    std::uint64_t x = f.bits() & 0xFFFFFFFFULL;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return BitPoly{x};
}

BitPoly poly_pow(BitPoly f, unsigned e) {
    BitPoly result = BitPoly::one();
    for (unsigned i = 0; i < e; ++i) result = result * f;
    return result;
}

DivRem poly_divrem(BitPoly f, BitPoly g) {
    if (g.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    const int dg = g.degree();
    std::uint64_t r = f.bits();
    std::uint64_t q = 0;
    for (int dr = f.degree(); dr >= dg; dr = BitPoly{r}.degree()) {
        const int shift = dr - dg;
        q |= std::uint64_t{1} << shift;
        r ^= g.bits() << shift;
    }
    return {BitPoly{q}, BitPoly{r}};
}

BitPoly poly_mod(BitPoly f, BitPoly g) { return poly_divrem(f, g).remainder; }

BitPoly poly_gcd(BitPoly f, BitPoly g) {
    while (!g.is_zero()) {
        const BitPoly r = poly_mod(f, g);
        f = g;
        g = r;
    }
    return f;
}

BitPoly poly_mulmod(BitPoly f, BitPoly g, BitPoly m) {
    if (m.is_zero()) throw std::domain_error("poly_mulmod: zero modulus");
    const int dm = m.degree();
    f = poly_mod(f, m);
    g = poly_mod(g, m);
    std::uint64_t acc = 0;
    std::uint64_t cur = f.bits();
    std::uint64_t rest = g.bits();
    const std::uint64_t top = dm == 0 ? 0 : std::uint64_t{1} << dm;
    while (rest != 0) {
        if (rest & 1U) acc ^= cur;
        rest >>= 1;
        // cur := cur * t mod m, keeping degree below dm.
        const bool carry = dm > 0 && ((cur >> (dm - 1)) & 1U) != 0;
        cur = (cur << 1) & (top - 1);
        if (carry) cur ^= m.bits() & (top - 1);
    }
    return BitPoly{acc};
}

int poly_valuation(BitPoly f, BitPoly p) {
    if (f.is_zero()) throw std::domain_error("poly_valuation: zero polynomial");
    if (p.degree() < 1) throw std::domain_error("poly_valuation: prime must have positive degree");
    int v = 0;
    for (;;) {
        const DivRem qr = poly_divrem(f, p);
        if (!qr.remainder.is_zero()) return v;
        f = qr.quotient;
        ++v;
    }
}

BitPoly poly_shift_by_one(BitPoly f) {
    // Horner in the shifted variable.
    BitPoly result;
    const BitPoly t_plus_one{3};
    for (int i = f.degree(); i >= 0; --i) {
        result = result * t_plus_one;
        if (f.coeff(i)) result += BitPoly::one();
    }
    return result;
}

BitPoly poly_reverse(BitPoly f, int n) {
    if (f.degree() > n) throw std::invalid_argument("poly_reverse: degree exceeds reversal length");
    std::uint64_t r = 0;
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i)) r |= std::uint64_t{1} << (n - i);
    return BitPoly{r};
}

bool is_irreducible(BitPoly f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    // t^(2^k) mod f by repeated squaring.
    auto frob_power = [&](int k) {
        BitPoly x = BitPoly::t();
        for (int i = 0; i < k; ++i) x = poly_mulmod(x, x, f);
        return x;
    };
    if (frob_power(n) != poly_mod(BitPoly::t(), f)) return false;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
        if (!prime) continue;
        const BitPoly h = frob_power(n / p) + BitPoly::t();
        if (!poly_gcd(f, h).is_one()) return false;
    }
    return true;
}

const std::vector<BitPoly>& irreducibles_up_to(int max_degree) {
    if (max_degree < 1 || max_degree > kFactorTableDegree)
        throw std::invalid_argument("irreducibles_up_to: degree must lie in 1..12");
    static const std::array<std::vector<BitPoly>, kFactorTableDegree + 1> tables = [] {
        std::array<std::vector<BitPoly>, kFactorTableDegree + 1> out;
        std::vector<BitPoly> all;
        for (int d = 1; d <= kFactorTableDegree; ++d) {
            for (std::uint64_t b = std::uint64_t{1} << d; b < (std::uint64_t{2} << d); ++b)
                if (is_irreducible(BitPoly{b})) all.push_back(BitPoly{b});
            out[static_cast<std::size_t>(d)] = all;
        }
        return out;
    }();
    return tables[static_cast<std::size_t>(max_degree)];
}

std::vector<PolyFactor> poly_factor(BitPoly f) {
    if (f.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
    if (f.degree() > 2 * kFactorTableDegree + 1)
        throw std::domain_error("poly_factor: degree above 25 is not supported");
    std::vector<PolyFactor> factors;
    if (f.degree() <= 0) return factors;
    const auto& primes = irreducibles_up_to(std::max(1, std::min(kFactorTableDegree, f.degree() / 2)));
    for (const BitPoly p : primes) {
        if (2 * p.degree() > f.degree()) break;
        int m = 0;
        for (DivRem qr = poly_divrem(f, p); qr.remainder.is_zero(); qr = poly_divrem(f, p)) {
            f = qr.quotient;
            ++m;
        }
        if (m > 0) factors.push_back({p, m});
    }
    // No factor of degree <= deg/2 remains, so the cofactor is prime.
    if (f.degree() >= 1) {
        auto it = std::find_if(factors.begin(), factors.end(), [&](const PolyFactor& pf) { return pf.prime == f; });
        if (it != factors.end())
            ++it->multiplicity;
        else
            factors.push_back({f, 1});
    }
    std::sort(factors.begin(), factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.prime.degree() != b.prime.degree()) return a.prime.degree() < b.prime.degree();
        return a.prime < b.prime;
    });
    return factors;
}

std::string to_string(BitPoly f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 't';
        else
            out += "t^" + std::to_string(i);
    }
    return out;
}

namespace detail {

namespace {

BitPoly parse_poly_power(TextCursor& cur) {
    BitPoly base;
    const char c = cur.peek();
    if (c == '0') {
        cur.advance();
    } else if (c == '1') {
        cur.advance();
        base = BitPoly::one();
    } else if (c == 't') {
        cur.advance();
        base = BitPoly::t();
    } else if (c == '(') {
        cur.advance();
        base = parse_poly_expr(cur);
        cur.expect(')');
    } else {
        cur.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
    if (cur.consume('^')) {
        const std::size_t at = cur.position();
        const unsigned e = cur.read_exponent();
        if (base.degree() * static_cast<int>(e) > BitPoly::kMaxDegree) throw ParseError("power too large", at);
        base = poly_pow(base, e);
    }
    return base;
}

BitPoly parse_poly_term(TextCursor& cur) {
    BitPoly value = parse_poly_power(cur);
    for (;;) {
        if (cur.consume('*')) {
            value = value * parse_poly_power(cur);
            continue;
        }
        const char c = cur.peek();
        if (c == '0' || c == '1' || c == 't' || c == '(') {
            value = value * parse_poly_power(cur);
            continue;
        }
        return value;
    }
}

}  // namespace

BitPoly parse_poly_expr(TextCursor& cur) {
    BitPoly value = parse_poly_term(cur);
    while (cur.consume('+')) value += parse_poly_term(cur);
    return value;
}

}  // namespace detail

BitPoly parse_poly(std::string_view text) {
    detail::TextCursor cur(text);
    const BitPoly value = detail::parse_poly_expr(cur);
    if (!cur.at_end()) cur.fail("trailing input");
    return value;
}

}  // namespace ellf2
