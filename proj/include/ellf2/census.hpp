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

#ifndef ELLF2_CENSUS_HPP
#define ELLF2_CENSUS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ellf2/tate.hpp"
#include "ellf2/weierstrass.hpp"

namespace ellf2 {

enum class FiberKind { Smooth, Semistable, Unstable };

/// Fiber over a rational point, as used by the point bookkeeping.
struct RationalFiberClass {
    FiberKind kind = FiberKind::Smooth;
    /// Smooth: curve class E_i, 1 <= i <= 5.
    int curve_class = 0;
    bool supersingular = false;
    /// Semistable and Unstable: components of the geometric fiber.
    int components = 0;
    /// Semistable: non-split (Ĩ1, Ĩ2, or a non-split I_n with n >= 3).
    bool twisted = false;

    /// Throws std::invalid_argument if `i` is outside 1..5 or the
    /// supersingular flag disagrees with the parity of i.
    static RationalFiberClass smooth(int i, bool supersingular);
    static RationalFiberClass semistable(int r, bool twisted);
    static RationalFiberClass unstable(int r);

    friend bool operator==(const RationalFiberClass&, const RationalFiberClass&) = default;
};

/// Brute-force count over F_2 of the fiber at a rational place, point at
/// infinity included. Throws std::invalid_argument for a non-rational place
/// and std::domain_error if the fiber is singular.
SmoothFiberClass count_points_smooth(const WeierstrassEq& e, const Place& place);

/// Constant-coefficient curve obtained by reducing at a rational place.
F2Curve fiber_at(const WeierstrassEq& e, const Place& place);

/// Rational points on a singular fiber over F_q. Throws
/// std::invalid_argument for a smooth class or q < 2.
std::int64_t fiber_points(const RationalFiberClass& c, std::int64_t q);

/// i, 2r, 2r+2 or 2r+1 according to the fiber kind.
int n_value(const RationalFiberClass& c);

/// Class of the fiber over 0, 1 or 2 (= infinity).
RationalFiberClass rational_fiber_class(const FiberConfiguration& config, int point);

/// Sum of n_value over the three rational points.
int total_points(const FiberConfiguration& config);

enum class FilterTag : std::uint8_t {
    NonzeroDiscriminant,
    GloballyMinimal,
    NoI0Star,
    NonrationalFibersSmall,
    AtMostOneSs,
    SumPoints25,
    GaloisTrivialComponents,
};

inline constexpr std::array<FilterTag, 7> kAllFilterTags{
    FilterTag::NonzeroDiscriminant, FilterTag::GloballyMinimal,        FilterTag::NoI0Star,
    FilterTag::NonrationalFibersSmall, FilterTag::AtMostOneSs,         FilterTag::SumPoints25,
    FilterTag::GaloisTrivialComponents};

/// "nonzero_discriminant", "globally_minimal", ...
std::string_view to_string(FilterTag tag);
/// Throws ParseError on an unknown name.
FilterTag parse_filter_tag(std::string_view name);

struct FilterReport {
    std::uint32_t code = 0;
    bool passed = false;
    /// In the order of kAllFilterTags.
    std::vector<FilterTag> failures;

    /// Bit i set iff kAllFilterTags[i] failed.
    std::uint8_t failure_mask() const;
};

FilterReport apply_filters(const FiberConfiguration& config);
/// Also handles a vanishing discriminant, which fails every other check
/// vacuously and is reported as nonzero_discriminant only.
FilterReport apply_filters(const WeierstrassEq& e);

/// Same verdict as apply_filters(e).passed, without building the full
/// configuration unless the rational places pass.
bool passes_filters(const WeierstrassEq& e);

/// Failure mask of apply_filters(e) together with the rational fiber of
/// largest component count (first one on ties; I0 if the discriminant vanishes).
struct FilterDigest {
    std::uint8_t failure_mask = 0;
    KodairaSymbol worst;
};

/// Runs Tate's algorithm only at the rational places and at non-rational
/// places of discriminant multiplicity at least two.
FilterDigest filter_digest(const WeierstrassEq& e);

}  // namespace ellf2

#endif  // ELLF2_CENSUS_HPP
