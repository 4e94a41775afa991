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

#include "ellf2/tate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ellf2/field.hpp"
#include "local_ring.hpp"
#include "tate_internal.hpp"

namespace ellf2 {

Place Place::finite(BitPoly prime) {
    if (!is_irreducible(prime)) throw std::invalid_argument("Place: " + ellf2::to_string(prime) + " is not irreducible");
    return Place{prime};
}

std::string Place::to_string() const { return is_infinity() ? "inf" : ellf2::to_string(prime_); }

std::string LocalReduction::symbol_text() const {
    if (twisted) return "I~" + std::to_string(symbol.n);
    return ellf2::to_string(symbol);
}

namespace {

template <class Ring>
struct Model {
    using S = typename Ring::Series;
    S a1, a2, a3, a4, a6;

    void change(const S& r, const S& s, const S& w) { change_coordinates(a1, a2, a3, a4, a6, r, s, w); }
};

// Runs the reduction loop on a model whose coefficients are expansions in the
// uniformizer; v_delta is the valuation of the discriminant of that model.
template <class Ring>
LocalReduction run_tate(const Ring& R, Model<Ring> m, int v_delta) {
    using S = typename Ring::Series;
    using E = typename Ring::Residue;
    const S zero = R.zero();
    LocalReduction out;

    for (;;) {
        if (v_delta == 0) {
            out.symbol = KodairaSymbol::I(0);
            out.v_delta = 0;
            out.r_geom = out.r_rational = 1;
            if constexpr (Ring::kRational) {
                out.smooth_fiber = F2Curve{R.coeff(m.a1, 0) != 0, R.coeff(m.a2, 0) != 0, R.coeff(m.a3, 0) != 0,
                                           R.coeff(m.a4, 0) != 0, R.coeff(m.a6, 0) != 0};
            }
            return out;
        }
        out.v_delta = v_delta;

        const E a1_0 = R.coeff(m.a1, 0);
        E x0, y0;
        if (!R.is_zero(a1_0)) {
            const E inv = R.inv(a1_0);
            x0 = R.mul(R.coeff(m.a3, 0), inv);
            y0 = R.mul(R.add(R.mul(x0, x0), R.coeff(m.a4, 0)), inv);
        } else {
            x0 = R.sqrt(R.coeff(m.a4, 0));
            const E x2 = R.mul(x0, x0);
            E rhs = R.mul(x2, x0);
            rhs = R.add(rhs, R.mul(R.coeff(m.a2, 0), x2));
            rhs = R.add(rhs, R.mul(R.coeff(m.a4, 0), x0));
            rhs = R.add(rhs, R.coeff(m.a6, 0));
            y0 = R.sqrt(rhs);
        }
        m.change(R.lift(x0, 0), zero, R.lift(y0, 0));
        if (!R.divisible(m.a3, 1) || !R.divisible(m.a4, 1) || !R.divisible(m.a6, 1))
            throw std::logic_error("tate: singular point not moved to the origin");

        if (!R.is_zero(a1_0)) {
            const int n = v_delta;
            const E a1 = R.coeff(m.a1, 0);
            const E ratio = R.mul(R.coeff(m.a2, 0), R.inv(R.mul(a1, a1)));
            out.symbol = KodairaSymbol::I(n);
            out.r_geom = n;
            out.split = R.trace(ratio) == 0;
            out.r_rational = out.split ? n : (n % 2 == 1 ? 1 : 2);
            out.twisted = !out.split && n <= 2;
            return out;
        }

        if (!R.divisible(m.a6, 2)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::II);
            out.r_geom = out.r_rational = 1;
            return out;
        }
        const S b8 = m.a1 * m.a1 * m.a6 + m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 + m.a4 * m.a4;
        if (!R.divisible(b8, 3)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::III);
            out.r_geom = out.r_rational = 2;
            return out;
        }
        if (!R.divisible(m.a3 * m.a3, 3)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::IV);
            out.r_geom = 3;
            out.r_rational = R.quadratic_has_root(R.coeff(m.a3, 1), R.coeff(m.a6, 2)) ? 3 : 1;
            return out;
        }

        m.change(zero, R.lift(R.sqrt(R.coeff(m.a2, 0)), 0), zero);
        m.change(zero, zero, R.lift(R.sqrt(R.coeff(m.a6, 2)), 1));
        if (!R.divisible(m.a1, 1) || !R.divisible(m.a2, 1) || !R.divisible(m.a3, 2) || !R.divisible(m.a4, 2) ||
            !R.divisible(m.a6, 3))
            throw std::logic_error("tate: normalization before the cubic failed");

        const E b = R.coeff(m.a2, 1);
        const E c = R.coeff(m.a4, 2);
        const E e = R.coeff(m.a6, 3);
        const auto cubic = [&](E x) { return R.add(R.mul(R.add(R.mul(R.add(x, b), x), c), x), e); };
        const bool triple = c == R.mul(b, b) && e == R.mul(R.mul(b, b), b);
        const E sqrt_c = R.sqrt(c);
        const bool double_root = !triple && R.is_zero(cubic(sqrt_c));

        if (!triple && !double_root) {
            int roots = 0;
            for (const E x : R.residue_elements())
                if (R.is_zero(cubic(x))) ++roots;
            out.symbol = KodairaSymbol::Istar(0);
            out.r_geom = 5;
            out.r_rational = 2 + roots;
            return out;
        }

        if (double_root) {
            m.change(R.lift(sqrt_c, 1), zero, zero);
            for (int n = 1;; ++n) {
                const int k = (n + 1) / 2;
                if (n % 2 == 1) {
                    const E B = R.coeff(m.a3, k + 1);
                    const E C = R.coeff(m.a6, 2 * k + 2);
                    if (!R.is_zero(B)) {
                        out.symbol = KodairaSymbol::Istar(n);
                        out.r_geom = n + 5;
                        out.r_rational = R.quadratic_has_root(B, C) ? n + 5 : n + 3;
                        return out;
                    }
                    m.change(zero, zero, R.lift(R.sqrt(C), k + 1));
                } else {
                    const E A = R.coeff(m.a2, 1);
                    const E B = R.coeff(m.a4, k + 2);
                    const E C = R.coeff(m.a6, 2 * k + 3);
                    if (!R.is_zero(B)) {
                        out.symbol = KodairaSymbol::Istar(n);
                        out.r_geom = n + 5;
                        const E Binv = R.inv(B);
                        const E t = R.mul(R.mul(A, C), R.mul(Binv, Binv));
                        out.r_rational = R.trace(t) == 0 ? n + 5 : n + 3;
                        return out;
                    }
                    m.change(R.lift(R.sqrt(R.mul(C, R.inv(A))), k + 1), zero, zero);
                }
                if (n > 4 * Ring::kPrecision) throw PrecisionError("tate: I_n* loop did not terminate");
            }
        }

        m.change(R.lift(b, 1), zero, zero);
        if (!R.divisible(m.a2, 2) || !R.divisible(m.a4, 3) || !R.divisible(m.a6, 4))
            throw std::logic_error("tate: triple root not moved to the origin");
        const E a3_2 = R.coeff(m.a3, 2);
        const E a6_4 = R.coeff(m.a6, 4);
        if (!R.is_zero(a3_2)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::IVstar);
            out.r_geom = 7;
            out.r_rational = R.quadratic_has_root(a3_2, a6_4) ? 7 : 5;
            return out;
        }
        m.change(zero, zero, R.lift(R.sqrt(a6_4), 2));
        if (!R.divisible(m.a4, 4)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::IIIstar);
            out.r_geom = out.r_rational = 8;
            return out;
        }
        if (!R.divisible(m.a6, 6)) {
            out.symbol = KodairaSymbol::of(KodairaFamily::IIstar);
            out.r_geom = out.r_rational = 9;
            return out;
        }
        out.minimal = false;
        m.a1 = R.divide(m.a1, 1);
        m.a2 = R.divide(m.a2, 2);
        m.a3 = R.divide(m.a3, 3);
        m.a4 = R.divide(m.a4, 4);
        m.a6 = R.divide(m.a6, 6);
        v_delta -= 12;
        if (v_delta < 0) throw std::logic_error("tate: negative discriminant valuation");
    }
}

// The rational place moved to t = 0.
WeierstrassEq chart_at(const WeierstrassEq& e, const Place& place) {
    if (place.is_infinity()) return infinity_model(e);
    if (place.prime() == BitPoly::t()) return e;
    return WeierstrassEq{poly_shift_by_one(e.a1), poly_shift_by_one(e.a2), poly_shift_by_one(e.a3),
                         poly_shift_by_one(e.a4), poly_shift_by_one(e.a6)};
}

int delta_valuation(BitPoly delta, const Place& place) {
    if (place.is_infinity()) return 12 - delta.degree();
    return poly_valuation(delta, place.prime());
}

LocalReduction reduce_rational(const WeierstrassEq& e, const Place& place, int v_delta) {
    const detail::BinaryLocalRing R;
    const WeierstrassEq c = chart_at(e, place);
    Model<detail::BinaryLocalRing> m{R.embed(c.a1), R.embed(c.a2), R.embed(c.a3), R.embed(c.a4), R.embed(c.a6)};
    return run_tate(R, m, v_delta);
}

LocalReduction reduce_extension(const WeierstrassEq& e, const Place& place, int v_delta) {
    const Field field(FieldSpec::from_modulus(place.prime()));
    const detail::ExtLocalRing R(field);
    Model<detail::ExtLocalRing> m{R.embed(e.a1), R.embed(e.a2), R.embed(e.a3), R.embed(e.a4), R.embed(e.a6)};
    return run_tate(R, m, v_delta);
}

}  // namespace

LocalReduction detail::tate_with_discriminant(const WeierstrassEq& e, const Place& place, BitPoly delta) {
    const int v = delta_valuation(delta, place);
    LocalReduction out = place.is_rational() ? reduce_rational(e, place, v) : reduce_extension(e, place, v);
    out.place = place;
    return out;
}

LocalReduction tate_algorithm(const WeierstrassEq& e, const Place& place) {
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) throw SingularEquation{};
    return detail::tate_with_discriminant(e, place, delta);
}

SmoothFiberClass classify_smooth_fiber(const F2Curve& c) {
    if (!is_smooth(c)) throw std::invalid_argument("classify_smooth_fiber: fiber is singular");
    const int count = count_points(c);
    const bool supersingular = !c[0];
    if (supersingular != (count % 2 == 1)) throw std::logic_error("classify_smooth_fiber: supersingularity tests disagree");
    return {count, supersingular};
}

const LocalReduction& FiberConfiguration::at(const Place& place) const {
    for (const auto& r : reductions)
        if (r.place == place) return r;
    throw std::out_of_range("FiberConfiguration: no data at place " + place.to_string());
}

const LocalReduction& FiberConfiguration::rational(int point) const {
    if (point < 0 || point > 2) throw std::out_of_range("FiberConfiguration: rational point must be 0, 1 or 2");
    return reductions.at(static_cast<std::size_t>(point));
}

std::optional<SmoothFiberClass> FiberConfiguration::smooth_rational_fiber(int point) const {
    const LocalReduction& r = rational(point);
    if (!r.symbol.is_smooth() || !r.smooth_fiber) return std::nullopt;
    return classify_smooth_fiber(*r.smooth_fiber);
}

int FiberConfiguration::euler_number() const {
    int sum = 0;
    for (const auto& r : reductions) sum += r.v_delta * r.place.degree();
    return sum;
}

FiberConfiguration reduction_summary(const WeierstrassEq& e) {
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) throw SingularEquation{};
    FiberConfiguration config;
    config.equation = e;
    config.discriminant = delta;
    for (const Place& p : {Place::zero(), Place::one(), Place::infinity()}) {
        LocalReduction r = reduce_rational(e, p, delta_valuation(delta, p));
        r.place = p;
        config.reductions.push_back(r);
    }
    for (const PolyFactor& f : poly_factor(delta)) {
        if (f.prime.degree() < 2) continue;
        const Place p = Place::finite(f.prime);
        LocalReduction r = reduce_extension(e, p, f.multiplicity);
        r.place = p;
        config.reductions.push_back(r);
    }
    return config;
}

bool is_globally_minimal(const WeierstrassEq& e) {
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) throw SingularEquation{};
    for (const Place& p : {Place::zero(), Place::one(), Place::infinity()}) {
        const int v = delta_valuation(delta, p);
        if (v >= 12 && !reduce_rational(e, p, v).minimal) return false;
    }
    return true;
}

std::string rational_fibers_text(const FiberConfiguration& config) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i > 0) out += '+';
        if (const auto smooth = config.smooth_rational_fiber(i))
            out += "E" + std::to_string(smooth->curve_class);
        else
            out += config.rational(i).symbol_text();
    }
    return out;
}

}  // namespace ellf2
