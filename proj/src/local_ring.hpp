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

#ifndef ELLF2_SRC_LOCAL_RING_HPP
#define ELLF2_SRC_LOCAL_RING_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "ellf2/bitpoly.hpp"
#include "ellf2/field.hpp"
#include "ellf2/tate.hpp"

namespace ellf2::detail {

inline constexpr int kSeriesPrecision = 16;

/// F_2[[u]] truncated at u^16 with tracked precision; bit i is the
/// coefficient of u^i.
struct BinarySeries {
    std::uint32_t bits = 0;
    int prec = kSeriesPrecision;

    int valuation() const {
        const std::uint32_t known = bits & ((std::uint32_t{1} << prec) - 1);
        return known == 0 ? prec : std::countr_zero(known);
    }

    friend BinarySeries operator+(const BinarySeries& x, const BinarySeries& y) {
        const int p = std::min(x.prec, y.prec);
        return {(x.bits ^ y.bits) & ((std::uint32_t{1} << p) - 1), p};
    }
    friend BinarySeries operator*(const BinarySeries& x, const BinarySeries& y) {
        const int p = std::min({x.prec + y.valuation(), y.prec + x.valuation(), kSeriesPrecision});
        std::uint32_t acc = 0;
        std::uint32_t a = x.bits;
        const std::uint32_t mask = (std::uint32_t{1} << p) - 1;
        for (std::uint32_t b = y.bits & mask; a != 0 && b != 0; b >>= 1, a <<= 1)
            if (b & 1u) acc ^= a;
        return {acc & mask, p};
    }
};

/// The completion at a rational place moved to t = 0.
class BinaryLocalRing {
   public:
    using Series = BinarySeries;
    using Residue = std::uint32_t;
    static constexpr bool kRational = true;
    static constexpr int kPrecision = kSeriesPrecision;

    Series zero() const { return {}; }
    Series embed(BitPoly f) const {
        return {static_cast<std::uint32_t>(f.bits() & ((std::uint64_t{1} << kPrecision) - 1)), kPrecision};
    }
    Series lift(Residue a, int k) const {
        if (k >= kPrecision) throw PrecisionError("local ring: lift beyond precision");
        return {(a & 1u) << k, kPrecision};
    }
    Residue coeff(const Series& x, int k) const {
        if (k >= x.prec) throw PrecisionError("local ring: coefficient beyond known precision");
        return (x.bits >> k) & 1u;
    }
    bool divisible(const Series& x, int k) const {
        if (k > x.prec) throw PrecisionError("local ring: divisibility test beyond known precision");
        return (x.bits & ((std::uint32_t{1} << k) - 1)) == 0;
    }
    Series divide(const Series& x, int k) const {
        if (!divisible(x, k)) throw std::logic_error("local ring: inexact division");
        return {x.bits >> k, x.prec - k};
    }

    bool is_zero(Residue a) const { return a == 0; }
    Residue add(Residue a, Residue b) const { return a ^ b; }
    Residue mul(Residue a, Residue b) const { return a & b; }
    Residue inv(Residue a) const {
        if (a == 0) throw std::domain_error("local ring: inverse of zero");
        return 1;
    }
    Residue sqrt(Residue a) const { return a; }
    int trace(Residue a) const { return static_cast<int>(a); }
    bool quadratic_has_root(Residue b, Residue c) const { return b == 0 || c == 0; }
    const std::vector<Residue>& residue_elements() const {
        static const std::vector<Residue> all{0, 1};
        return all;
    }
};

/// F_{2^d}[[u]] truncated at u^16 with tracked precision.
struct ExtSeries {
    const Field* field = nullptr;
    std::array<FieldElement, kSeriesPrecision> c{};
    int prec = kSeriesPrecision;

    int valuation() const {
        for (int i = 0; i < prec; ++i)
            if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
        return prec;
    }

    friend ExtSeries operator+(const ExtSeries& x, const ExtSeries& y) {
        ExtSeries out{x.field ? x.field : y.field, {}, std::min(x.prec, y.prec)};
        for (int i = 0; i < out.prec; ++i) {
            const auto k = static_cast<std::size_t>(i);
            out.c[k] = {x.c[k].repr ^ y.c[k].repr};
        }
        return out;
    }
    friend ExtSeries operator*(const ExtSeries& x, const ExtSeries& y) {
        const Field* f = x.field ? x.field : y.field;
        const int vx = x.valuation();
        const int vy = y.valuation();
        ExtSeries out{f, {}, std::min({x.prec + vy, y.prec + vx, kSeriesPrecision})};
        for (int i = vx; i < x.prec && i < out.prec; ++i) {
            const FieldElement xi = x.c[static_cast<std::size_t>(i)];
            if (xi.is_zero()) continue;
            for (int j = vy; j < y.prec && i + j < out.prec; ++j) {
                const FieldElement yj = y.c[static_cast<std::size_t>(j)];
                if (yj.is_zero()) continue;
                auto& slot = out.c[static_cast<std::size_t>(i + j)];
                slot = f->add(slot, f->mul(xi, yj));
            }
        }
        return out;
    }
};

/// The completion of F_2[t] at a place of degree d, as F_{2^d}[[u]] with
/// uniformizer u = prime(t).
class ExtLocalRing {
   public:
    using Series = ExtSeries;
    using Residue = FieldElement;
    static constexpr bool kRational = false;
    static constexpr int kPrecision = kSeriesPrecision;

    explicit ExtLocalRing(const Field& field) : field_(&field), elements_(field.elements()) {
        // t = theta + sum c_i u^i, solved by the fixed-point iteration
        // T <- T + (prime(T) - u) / prime'(theta).
        const BitPoly prime = field.spec().modulus;
        BitPoly derivative;
        for (int i = 1; i <= prime.degree(); i += 2)
            if (prime.coeff(i)) derivative = derivative + BitPoly::monomial(i - 1);
        const FieldElement theta = field.element(BitPoly::t());
        FieldElement d_theta = field.zero();
        for (int i = derivative.degree(); i >= 0; --i)
            d_theta = field.add(field.mul(d_theta, theta), derivative.coeff(i) ? field.one() : field.zero());
        const FieldElement scale = field.inv(d_theta);
        t_ = constant(theta);
        Series u = zero();
        u.c[1] = field.one();
        for (int iter = 0; iter < kPrecision; ++iter) {
            Series err = evaluate(prime, t_) + u;
            for (auto& x : err.c) x = field.mul(x, scale);
            t_ = t_ + err;
        }
    }

    Series zero() const { return Series{field_, {}, kPrecision}; }
    Series constant(FieldElement a) const {
        Series s = zero();
        s.c[0] = a;
        return s;
    }
    Series embed(BitPoly f) const { return evaluate(f, t_); }
    Series lift(Residue a, int k) const {
        if (k >= kPrecision) throw PrecisionError("local ring: lift beyond precision");
        Series s = zero();
        s.c[static_cast<std::size_t>(k)] = a;
        return s;
    }
    Residue coeff(const Series& x, int k) const {
        if (k >= x.prec) throw PrecisionError("local ring: coefficient beyond known precision");
        return x.c[static_cast<std::size_t>(k)];
    }
    bool divisible(const Series& x, int k) const {
        if (k > x.prec) throw PrecisionError("local ring: divisibility test beyond known precision");
        for (int i = 0; i < k; ++i)
            if (!x.c[static_cast<std::size_t>(i)].is_zero()) return false;
        return true;
    }
    Series divide(const Series& x, int k) const {
        if (!divisible(x, k)) throw std::logic_error("local ring: inexact division");
        Series out{field_, {}, x.prec - k};
        for (int i = 0; i < out.prec; ++i) out.c[static_cast<std::size_t>(i)] = x.c[static_cast<std::size_t>(i + k)];
        return out;
    }

    bool is_zero(Residue a) const { return a.is_zero(); }
    Residue add(Residue a, Residue b) const { return field_->add(a, b); }
    Residue mul(Residue a, Residue b) const { return field_->mul(a, b); }
    Residue inv(Residue a) const { return field_->inv(a); }
    Residue sqrt(Residue a) const { return field_->sqrt(a); }
    int trace(Residue a) const { return field_->trace(a); }
    bool quadratic_has_root(Residue b, Residue c) const { return field_->quadratic_has_root(b, c); }
    const std::vector<Residue>& residue_elements() const { return elements_; }

   private:
    Series evaluate(BitPoly f, const Series& x) const {
        Series acc = zero();
        for (int i = f.degree(); i >= 0; --i) {
            acc = acc * x;
            if (f.coeff(i)) acc.c[0] = field_->add(acc.c[0], field_->one());
        }
        return acc;
    }

    const Field* field_;
    std::vector<FieldElement> elements_;
    Series t_;
};

}  // namespace ellf2::detail

#endif  // ELLF2_SRC_LOCAL_RING_HPP
