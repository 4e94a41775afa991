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

#include "ellf2/census.hpp"

#include <stdexcept>

#include "tate_internal.hpp"

namespace ellf2 {

RationalFiberClass RationalFiberClass::smooth(int i, bool supersingular) {
    if (i < 1 || i > 5) throw std::invalid_argument("RationalFiberClass: curve class must be in 1..5");
    if (supersingular != (i % 2 == 1))
        throw std::invalid_argument("RationalFiberClass: E_" + std::to_string(i) + " has the wrong supersingular flag");
    RationalFiberClass c;
    c.kind = FiberKind::Smooth;
    c.curve_class = i;
    c.supersingular = supersingular;
    return c;
}

RationalFiberClass RationalFiberClass::semistable(int r, bool twisted) {
    if (r < 1) throw std::invalid_argument("RationalFiberClass: semistable fiber needs r >= 1");
    RationalFiberClass c;
    c.kind = FiberKind::Semistable;
    c.components = r;
    c.twisted = twisted;
    return c;
}

RationalFiberClass RationalFiberClass::unstable(int r) {
    if (r < 1) throw std::invalid_argument("RationalFiberClass: unstable fiber needs r >= 1");
    RationalFiberClass c;
    c.kind = FiberKind::Unstable;
    c.components = r;
    return c;
}

F2Curve fiber_at(const WeierstrassEq& e, const Place& place) {
    if (!place.is_rational()) throw std::invalid_argument("fiber_at: place " + place.to_string() + " is not rational");
    const std::array<BitPoly, 5> a{e.a1, e.a2, e.a3, e.a4, e.a6};
    constexpr std::array<int, 5> weight{1, 2, 3, 4, 6};
    F2Curve c{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (place.is_infinity())
            c[i] = a[i].coeff(weight[i]);
        else if (place.prime() == BitPoly::t())
            c[i] = a[i].at_zero();
        else
            c[i] = a[i].at_one();
    }
    return c;
}

SmoothFiberClass count_points_smooth(const WeierstrassEq& e, const Place& place) {
    const F2Curve c = fiber_at(e, place);
    if (!is_smooth(c)) throw std::domain_error("count_points_smooth: fiber at " + place.to_string() + " is singular");
    return classify_smooth_fiber(c);
}

std::int64_t fiber_points(const RationalFiberClass& c, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("fiber_points: q must be a prime power >= 2");
    switch (c.kind) {
        case FiberKind::Smooth:
            throw std::invalid_argument("fiber_points: smooth fibers are counted directly");
        case FiberKind::Semistable:
            if (!c.twisted) return c.components * q;
            return c.components % 2 == 1 ? q + 2 : 2 * q + 2;
        case FiberKind::Unstable:
            return c.components * q + 1;
    }
    return 0;
}

int n_value(const RationalFiberClass& c) {
    switch (c.kind) {
        case FiberKind::Smooth: return c.curve_class;
        case FiberKind::Semistable: return c.twisted ? 2 * c.components + 2 : 2 * c.components;
        case FiberKind::Unstable: return 2 * c.components + 1;
    }
    return 0;
}

namespace {

RationalFiberClass classify(const LocalReduction& r) {
    if (r.symbol.is_smooth()) {
        if (!r.smooth_fiber) throw std::logic_error("rational_fiber_class: smooth fiber without reduction data");
        const SmoothFiberClass s = classify_smooth_fiber(*r.smooth_fiber);
        return RationalFiberClass::smooth(s.curve_class, s.supersingular);
    }
    if (r.symbol.is_semistable()) return RationalFiberClass::semistable(r.r_geom, !r.split);
    return RationalFiberClass::unstable(r.r_geom);
}

// Checks shared by the full and the short-circuit paths on the rational
// places; returns the failure mask over kAllFilterTags.
struct RationalVerdict {
    bool minimal = true;
    bool no_i0star = true;
    bool galois_trivial = true;
    int ss_count = 0;
    int points = 0;
};

RationalVerdict rational_verdict(const std::array<const LocalReduction*, 3>& places) {
    RationalVerdict v;
    for (const LocalReduction* r : places) {
        if (!r->minimal) v.minimal = false;
        if (r->symbol == KodairaSymbol::Istar(0)) v.no_i0star = false;
        if (r->r_rational != r->r_geom) v.galois_trivial = false;
        const RationalFiberClass c = classify(*r);
        if (c.kind == FiberKind::Semistable || (c.kind == FiberKind::Smooth && c.supersingular)) ++v.ss_count;
        v.points += n_value(c);
    }
    return v;
}

bool small_nonrational(const LocalReduction& r) {
    return r.symbol.is_smooth() || r.symbol == KodairaSymbol::I(1) || r.symbol.family == KodairaFamily::II;
}

FilterReport finish(std::uint32_t code, const std::vector<FilterTag>& failures) {
    FilterReport report;
    report.code = code;
    for (const FilterTag t : kAllFilterTags)
        for (const FilterTag f : failures)
            if (f == t) {
                report.failures.push_back(t);
                break;
            }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace

RationalFiberClass rational_fiber_class(const FiberConfiguration& config, int point) {
    return classify(config.rational(point));
}

int total_points(const FiberConfiguration& config) {
    if (config.reductions.size() < 3) throw std::invalid_argument("total_points: configuration lacks rational places");
    int sum = 0;
    for (int p = 0; p < 3; ++p) sum += n_value(rational_fiber_class(config, p));
    return sum;
}

std::string_view to_string(FilterTag tag) {
    switch (tag) {
        case FilterTag::NonzeroDiscriminant: return "nonzero_discriminant";
        case FilterTag::GloballyMinimal: return "globally_minimal";
        case FilterTag::NoI0Star: return "no_I0star";
        case FilterTag::NonrationalFibersSmall: return "nonrational_fibers_small";
        case FilterTag::AtMostOneSs: return "at_most_one_ss";
        case FilterTag::SumPoints25: return "sum_points_25";
        case FilterTag::GaloisTrivialComponents: return "galois_trivial_components";
    }
    return "?";
}

FilterTag parse_filter_tag(std::string_view name) {
    for (const FilterTag t : kAllFilterTags)
        if (to_string(t) == name) return t;
    throw ParseError("unknown filter tag '" + std::string(name) + "'", 0);
}

std::uint8_t FilterReport::failure_mask() const {
    std::uint8_t mask = 0;
    for (const FilterTag f : failures) mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(f));
    return mask;
}

FilterReport apply_filters(const FiberConfiguration& config) {
    std::vector<FilterTag> failures;
    const RationalVerdict v = rational_verdict({&config.rational(0), &config.rational(1), &config.rational(2)});
    bool minimal = v.minimal;
    bool no_i0star = v.no_i0star;
    bool galois = v.galois_trivial;
    bool small = true;
    for (std::size_t i = 3; i < config.reductions.size(); ++i) {
        const LocalReduction& r = config.reductions[i];
        if (!r.minimal) minimal = false;
        if (r.symbol == KodairaSymbol::Istar(0)) no_i0star = false;
        if (r.r_geom != 1) galois = false;
        if (!small_nonrational(r)) small = false;
    }
    if (!minimal) failures.push_back(FilterTag::GloballyMinimal);
    if (!no_i0star) failures.push_back(FilterTag::NoI0Star);
    if (!small) failures.push_back(FilterTag::NonrationalFibersSmall);
    if (v.ss_count > 1) failures.push_back(FilterTag::AtMostOneSs);
    if (v.points != 25) failures.push_back(FilterTag::SumPoints25);
    if (!galois) failures.push_back(FilterTag::GaloisTrivialComponents);
    return finish(encode(config.equation), failures);
}

FilterReport apply_filters(const WeierstrassEq& e) {
    if (discriminant(e).is_zero()) return finish(encode(e), {FilterTag::NonzeroDiscriminant});
    return apply_filters(reduction_summary(e));
}

bool passes_filters(const WeierstrassEq& e) {
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) return false;
    const std::array<LocalReduction, 3> rational{detail::tate_with_discriminant(e, Place::zero(), delta),
                                                 detail::tate_with_discriminant(e, Place::one(), delta),
                                                 detail::tate_with_discriminant(e, Place::infinity(), delta)};
    const RationalVerdict v = rational_verdict({&rational[0], &rational[1], &rational[2]});
    if (!v.minimal || !v.no_i0star || !v.galois_trivial || v.ss_count > 1 || v.points != 25) return false;
    for (const PolyFactor& f : poly_factor(delta)) {
        if (f.prime.degree() < 2 || f.multiplicity < 2) continue;
        const LocalReduction r = detail::tate_with_discriminant(e, Place::finite(f.prime), delta);
        if (!small_nonrational(r) || r.r_geom != 1) return false;
    }
    return true;
}

FilterDigest filter_digest(const WeierstrassEq& e) {
    FilterDigest d;
    const BitPoly delta = discriminant(e);
    if (delta.is_zero()) {
        d.failure_mask = 1u << static_cast<unsigned>(FilterTag::NonzeroDiscriminant);
        return d;
    }
    const std::array<LocalReduction, 3> rational{detail::tate_with_discriminant(e, Place::zero(), delta),
                                                 detail::tate_with_discriminant(e, Place::one(), delta),
                                                 detail::tate_with_discriminant(e, Place::infinity(), delta)};
    RationalVerdict v = rational_verdict({&rational[0], &rational[1], &rational[2]});
    int worst = 0;
    for (int i = 1; i < 3; ++i)
        if (rational[static_cast<std::size_t>(i)].r_geom > rational[static_cast<std::size_t>(worst)].r_geom) worst = i;
    d.worst = rational[static_cast<std::size_t>(worst)].symbol;
    bool small = true;
    for (const PolyFactor& f : poly_factor(delta)) {
        if (f.prime.degree() < 2 || f.multiplicity < 2) continue;
        const LocalReduction r = detail::tate_with_discriminant(e, Place::finite(f.prime), delta);
        if (!r.minimal) v.minimal = false;
        if (r.symbol == KodairaSymbol::Istar(0)) v.no_i0star = false;
        if (r.r_geom != 1) v.galois_trivial = false;
        if (!small_nonrational(r)) small = false;
    }
    const auto set = [&](FilterTag t) { d.failure_mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(t)); };
    if (!v.minimal) set(FilterTag::GloballyMinimal);
    if (!v.no_i0star) set(FilterTag::NoI0Star);
    if (!small) set(FilterTag::NonrationalFibersSmall);
    if (v.ss_count > 1) set(FilterTag::AtMostOneSs);
    if (v.points != 25) set(FilterTag::SumPoints25);
    if (!v.galois_trivial) set(FilterTag::GaloisTrivialComponents);
    return d;
}

}  // namespace ellf2
