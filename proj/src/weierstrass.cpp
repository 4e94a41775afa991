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

#include "ellf2/weierstrass.hpp"

#include <map>
#include <utility>

#include "text_cursor.hpp"

namespace ellf2 {

namespace {

constexpr std::array<int, 5> kWeights = {1, 2, 3, 4, 6};
constexpr std::array<int, 5> kOffsets = {0, 2, 5, 9, 14};

std::array<BitPoly, 5> coefficients(const WeierstrassEq& e) { return {e.a1, e.a2, e.a3, e.a4, e.a6}; }

WeierstrassEq from_coefficients(const std::array<BitPoly, 5>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }

// Places 0, 1, infinity as (numerator, denominator) pairs over F_2.
std::pair<int, int> point_coords(int point) { return point == 2 ? std::pair{1, 0} : std::pair{point, 1}; }

int coords_point(int num, int den) {
    if (den == 0) return 2;
    return num;
}

}  // namespace

WeierstrassEq WeierstrassEq::make(BitPoly a1, BitPoly a2, BitPoly a3, BitPoly a4, BitPoly a6) {
    WeierstrassEq e{a1, a2, a3, a4, a6};
    if (!e.satisfies_degree_bounds()) throw std::invalid_argument("WeierstrassEq: coefficient a_i must have degree <= i");
    return e;
}

bool WeierstrassEq::satisfies_degree_bounds() const {
    const auto a = coefficients(*this);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].degree() > kWeights[i]) return false;
    return true;
}

std::uint32_t encode(const WeierstrassEq& e) {
    if (!e.satisfies_degree_bounds()) throw std::invalid_argument("encode: degree bounds violated");
    const auto a = coefficients(e);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < a.size(); ++i) code |= static_cast<std::uint32_t>(a[i].bits()) << kOffsets[i];
    return code;
}

WeierstrassEq decode(std::uint32_t code) {
    if (code >= kSpaceSize) throw std::invalid_argument("decode: code exceeds 21 bits");
    std::array<BitPoly, 5> a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint32_t mask = (std::uint32_t{1} << (kWeights[i] + 1)) - 1;
        a[i] = BitPoly{(code >> kOffsets[i]) & mask};
    }
    return from_coefficients(a);
}

BInvariants b_invariants(const WeierstrassEq& e) {
    return {
        e.a1 * e.a1,
        e.a1 * e.a3,
        e.a3 * e.a3,
        e.a1 * e.a1 * e.a6 + e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 + e.a4 * e.a4,
    };
}

BitPoly discriminant(const WeierstrassEq& e) {
    const BInvariants b = b_invariants(e);
    return b.b2 * b.b2 * b.b8 + b.b6 * b.b6 + b.b2 * b.b4 * b.b6;
}

RationalFunction RationalFunction::reduced(BitPoly num, BitPoly den) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num.is_zero()) return {};
    const BitPoly g = poly_gcd(num, den);
    return {poly_divrem(num, g).quotient, poly_divrem(den, g).quotient};
}

std::string to_string(const RationalFunction& f) {
    if (f.den.is_one()) return to_string(f.num);
    auto wrap = [](BitPoly p) {
        const std::string s = to_string(p);
        return std::popcount(p.bits()) > 1 ? "(" + s + ")" : s;
    };
    return wrap(f.num) + "/" + wrap(f.den);
}

RationalFunction parse_rational_function(std::string_view text) {
    detail::TextCursor cur(text);
    const BitPoly num = detail::parse_poly_expr(cur);
    BitPoly den = BitPoly::one();
    if (cur.consume('/')) den = detail::parse_poly_expr(cur);
    if (!cur.at_end()) cur.fail("trailing input");
    if (den.is_zero()) throw ParseError("zero denominator", text.size());
    return RationalFunction::reduced(num, den);
}

RationalFunction j_invariant(const WeierstrassEq& e) {
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) throw SingularEquation();
    const BitPoly a1_4 = poly_square(poly_square(e.a1));
    return RationalFunction::reduced(a1_4 * a1_4 * a1_4, delta);
}

WeierstrassEq infinity_model(const WeierstrassEq& e) {
    auto a = coefficients(e);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = poly_reverse(a[i], kWeights[i]);
    return from_coefficients(a);
}

const std::array<Mobius, 6>& Mobius::all() {
    static const std::array<Mobius, 6> elements = {
        Mobius{1, 0, 0, 1}, Mobius{1, 1, 0, 1}, Mobius{0, 1, 1, 0},
        Mobius{0, 1, 1, 1}, Mobius{1, 0, 1, 1}, Mobius{1, 1, 1, 0},
    };
    return elements;
}

BitPoly Mobius::act(BitPoly f, int weight) const {
    if (f.degree() > weight) throw std::invalid_argument("Mobius::act: degree exceeds weight");
    const BitPoly num{static_cast<std::uint64_t>(a) << 1 | b};
    const BitPoly den{static_cast<std::uint64_t>(c) << 1 | d};
    BitPoly result;
    for (int k = 0; k <= f.degree(); ++k)
        if (f.coeff(k)) result += poly_pow(num, static_cast<unsigned>(k)) * poly_pow(den, static_cast<unsigned>(weight - k));
    return result;
}

int Mobius::moved_point(int point) const {
    const Mobius m = inverse(*this);
    const auto [x, z] = point_coords(point);
    return coords_point((m.a * x + m.b * z) & 1, (m.c * x + m.d * z) & 1);
}

Mobius compose(Mobius m, Mobius n) {
    return Mobius{static_cast<std::uint8_t>((m.a * n.a + m.b * n.c) & 1), static_cast<std::uint8_t>((m.a * n.b + m.b * n.d) & 1),
                  static_cast<std::uint8_t>((m.c * n.a + m.d * n.c) & 1), static_cast<std::uint8_t>((m.c * n.b + m.d * n.d) & 1)};
}

Mobius inverse(Mobius m) { return Mobius{m.d, m.b, m.c, m.a}; }

WeierstrassEq apply_mobius(const WeierstrassEq& e, Mobius m) {
    auto a = coefficients(e);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.act(a[i], kWeights[i]);
    return from_coefficients(a);
}

IsoTransform IsoTransform::coordinate_change(unsigned index, Mobius m) {
    if (index >= kCoordinateChanges) throw std::invalid_argument("IsoTransform: index must be below 512");
    return {BitPoly{index & 7U}, BitPoly{(index >> 3) & 3U}, BitPoly{(index >> 5) & 15U}, m};
}

bool IsoTransform::satisfies_degree_caps() const { return r.degree() <= 2 && s.degree() <= 1 && w.degree() <= 3; }

WeierstrassEq apply_coordinate_change(const WeierstrassEq& e, BitPoly r, BitPoly s, BitPoly w) {
    WeierstrassEq out = e;
    change_coordinates(out.a1, out.a2, out.a3, out.a4, out.a6, r, s, w);
    return out;
}

WeierstrassEq apply_transform(const WeierstrassEq& e, const IsoTransform& g) {
    if (!g.satisfies_degree_caps()) throw std::invalid_argument("apply_transform: degree caps violated");
    return apply_mobius(apply_coordinate_change(e, g.r, g.s, g.w), g.mobius);
}

IsoTransform compose(const IsoTransform& g, const IsoTransform& h) {
    // Pull h's coordinate change back through g's Mobius factor.
    const Mobius back = inverse(g.mobius);
    const BitPoly r2 = back.act(h.r, 2);
    const BitPoly s2 = back.act(h.s, 1);
    const BitPoly w2 = back.act(h.w, 3);
    return {g.r + r2, g.s + s2, g.w + w2 + g.s * r2, compose(g.mobius, h.mobius)};
}

IsoTransform inverse(const IsoTransform& g) {
    const Mobius m = g.mobius;
    return {m.act(g.r, 2), m.act(g.s, 1), m.act(g.w + g.s * g.r, 3), inverse(m)};
}

void for_each_orbit_image(const WeierstrassEq& e, const std::function<void(const WeierstrassEq&)>& visit) {
    for (unsigned idx = 0; idx < kCoordinateChanges; ++idx) {
        const IsoTransform c = IsoTransform::coordinate_change(idx);
        const WeierstrassEq moved = apply_coordinate_change(e, c.r, c.s, c.w);
        for (const Mobius& m : Mobius::all()) visit(apply_mobius(moved, m));
    }
}

WeierstrassEq canonical_form(const WeierstrassEq& e) { return decode(canonical_code(e)); }

std::uint32_t canonical_code(const WeierstrassEq& e) {
    std::uint32_t best = encode(e);
    for_each_orbit_image(e, [&](const WeierstrassEq& image) { best = std::min(best, encode(image)); });
    return best;
}

namespace {

std::string coefficient_prefix(BitPoly c) {
    if (c.is_one()) return "";
    const std::string s = to_string(c);
    return (std::popcount(c.bits()) > 1 ? "(" + s + ")" : s) + " ";
}

}  // namespace

std::string to_string(const WeierstrassEq& e) {
    std::string lhs = "y^2";
    if (!e.a1.is_zero()) lhs += " + " + coefficient_prefix(e.a1) + "x y";
    if (!e.a3.is_zero()) lhs += " + " + coefficient_prefix(e.a3) + "y";
    std::string rhs = "x^3";
    if (!e.a2.is_zero()) rhs += " + " + coefficient_prefix(e.a2) + "x^2";
    if (!e.a4.is_zero()) rhs += " + " + coefficient_prefix(e.a4) + "x";
    if (!e.a6.is_zero()) rhs += " + " + to_string(e.a6);
    return lhs + " = " + rhs;
}

namespace {

struct Monomial {
    BitPoly coeff = BitPoly::one();
    int x = 0;
    int y = 0;
};

Monomial parse_factor(detail::TextCursor& cur) {
    Monomial m;
    const std::size_t at = cur.position();
    const char c = cur.peek();
    switch (c) {
        case '0':
            cur.advance();
            m.coeff = BitPoly::zero();
            break;
        case '1':
            cur.advance();
            break;
        case 't':
            cur.advance();
            m.coeff = BitPoly::t();
            break;
        case 'x':
            cur.advance();
            m.x = 1;
            break;
        case 'y':
            cur.advance();
            m.y = 1;
            break;
        case '(':
            cur.advance();
            m.coeff = detail::parse_poly_expr(cur);
            cur.expect(')');
            break;
        default:
            cur.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
    if (cur.consume('^')) {
        const unsigned e = cur.read_exponent();
        if (m.coeff.degree() * static_cast<int>(e) > BitPoly::kMaxDegree || e > 64) throw ParseError("power too large", at);
        m.coeff = poly_pow(m.coeff, e);
        m.x *= static_cast<int>(e);
        m.y *= static_cast<int>(e);
    }
    return m;
}

Monomial parse_term(detail::TextCursor& cur) {
    Monomial term = parse_factor(cur);
    for (;;) {
        const bool explicit_star = cur.consume('*');
        if (!explicit_star && !detail::starts_factor(cur.peek())) return term;
        const Monomial f = parse_factor(cur);
        term.coeff = term.coeff * f.coeff;
        term.x += f.x;
        term.y += f.y;
    }
}

void parse_side(detail::TextCursor& cur, std::map<std::pair<int, int>, BitPoly>& acc) {
    do {
        const Monomial m = parse_term(cur);
        acc[{m.x, m.y}] += m.coeff;
    } while (cur.consume('+'));
}

}  // namespace

WeierstrassEq parse_equation(std::string_view text) {
    detail::TextCursor cur(text);
    std::map<std::pair<int, int>, BitPoly> terms;
    parse_side(cur, terms);
    cur.expect('=');
    // Characteristic 2: moving a term across '=' does not change its sign.
    parse_side(cur, terms);
    if (!cur.at_end()) cur.fail("trailing input");

    WeierstrassEq e;
    bool has_y2 = false;
    bool has_x3 = false;
    for (const auto& [mono, coeff] : terms) {
        if (coeff.is_zero()) continue;
        const auto [xd, yd] = mono;
        if (xd == 0 && yd == 2) {
            has_y2 = coeff.is_one();
            if (!has_y2) throw ParseError("coefficient of y^2 must be 1", text.size());
        } else if (xd == 3 && yd == 0) {
            has_x3 = coeff.is_one();
            if (!has_x3) throw ParseError("coefficient of x^3 must be 1", text.size());
        } else if (xd == 1 && yd == 1) {
            e.a1 = coeff;
        } else if (xd == 0 && yd == 1) {
            e.a3 = coeff;
        } else if (xd == 2 && yd == 0) {
            e.a2 = coeff;
        } else if (xd == 1 && yd == 0) {
            e.a4 = coeff;
        } else if (xd == 0 && yd == 0) {
            e.a6 = coeff;
        } else {
            throw ParseError("monomial x^" + std::to_string(xd) + " y^" + std::to_string(yd) + " is not of Weierstrass form",
                             text.size());
        }
    }
    if (!has_y2 || !has_x3) throw ParseError("equation needs y^2 and x^3 terms", text.size());
    if (!e.satisfies_degree_bounds()) throw ParseError("coefficient degree exceeds deg(a_i) <= i", text.size());
    return e;
}

bool is_smooth(const F2Curve& c) {
    const bool a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3], a6 = c[4];
    // Constant discriminant; over F_2 squares are identities.
    const bool b8 = (a1 && a6) ^ (a1 && a3 && a4) ^ (a2 && a3) ^ a4;
    const bool delta = (a1 && b8) ^ a3 ^ (a1 && a3);
    return delta;
}

int count_points(const F2Curve& c) {
    const int a1 = c[0], a2 = c[1], a3 = c[2], a4 = c[3], a6 = c[4];
    int count = 1;  // point at infinity
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int lhs = y * y + a1 * x * y + a3 * y;
            const int rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (((lhs ^ rhs) & 1) == 0) ++count;
        }
    return count;
}

}  // namespace ellf2
