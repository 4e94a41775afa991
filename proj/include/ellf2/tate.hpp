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

#ifndef ELLF2_TATE_HPP
#define ELLF2_TATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellf2/bitpoly.hpp"
#include "ellf2/kodaira.hpp"
#include "ellf2/weierstrass.hpp"

namespace ellf2 {

/// Closed point of P^1 over F_2: a monic irreducible polynomial or infinity.
class Place {
   public:
    static Place infinity() { return Place{}; }
    /// Throws std::invalid_argument unless `prime` is irreducible.
    static Place finite(BitPoly prime);
    static Place zero() { return finite(BitPoly::t()); }
    static Place one() { return finite(BitPoly{3}); }

    bool is_infinity() const { return prime_.is_zero(); }
    bool is_rational() const { return degree() == 1; }
    /// Residue-field degree; 1 for infinity.
    int degree() const { return is_infinity() ? 1 : prime_.degree(); }
    /// Zero polynomial for infinity.
    BitPoly prime() const { return prime_; }

    /// "t", "1+t", "1+t+t^2", "inf".
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;

   private:
    Place() = default;
    explicit Place(BitPoly p) : prime_(p) {}
    BitPoly prime_;
};

/// Raised when a local computation would read beyond the tracked precision.
class PrecisionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Result of Tate's algorithm at one place.
struct LocalReduction {
    Place place = Place::infinity();
    /// Symbol of the minimal model.
    KodairaSymbol symbol;
    /// Valuation of the minimal discriminant.
    int v_delta = 0;
    int r_geom = 1;
    /// Components defined over the residue field.
    int r_rational = 1;
    /// Multiplicative reduction with rational tangent directions.
    bool split = false;
    /// Non-split I1 or I2 (the twisted forms).
    bool twisted = false;
    /// False when the given equation is not minimal at the place.
    bool minimal = true;
    /// Reduction of the minimal model at a rational place with good reduction.
    std::optional<F2Curve> smooth_fiber;

    /// "I4", "I~2", "III*", ...
    std::string symbol_text() const;
};

/// Throws SingularEquation if the discriminant vanishes.
LocalReduction tate_algorithm(const WeierstrassEq& e, const Place& place);

/// Smooth fiber at a rational place, classified by its point count E_1..E_5.
struct SmoothFiberClass {
    int curve_class = 0;
    bool supersingular = false;
};

/// Fiber data at every place that matters: the three rational places are
/// always present (first, in the order t, 1+t, infinity), followed by the
/// remaining bad places sorted by (degree, encoding).
struct FiberConfiguration {
    WeierstrassEq equation;
    BitPoly discriminant;
    std::vector<LocalReduction> reductions;

    const LocalReduction& at(const Place& place) const;
    const LocalReduction& rational(int point) const;  // 0, 1, 2 = infinity
    /// Class of the smooth fiber at a rational point, if the fiber is smooth.
    std::optional<SmoothFiberClass> smooth_rational_fiber(int point) const;
    /// Sum of v_delta * deg over all places.
    int euler_number() const;
};

/// Point count and supersingularity of a smooth fiber over F_2; throws
/// std::logic_error if a1 = 0, odd point count and j = 0 disagree.
SmoothFiberClass classify_smooth_fiber(const F2Curve& c);

/// Throws SingularEquation if the discriminant vanishes.
FiberConfiguration reduction_summary(const WeierstrassEq& e);

/// True iff Tate's algorithm finds the equation minimal at every place.
bool is_globally_minimal(const WeierstrassEq& e);

/// "I1*+E4+I4": fibers over t = 0, 1, infinity.
std::string rational_fibers_text(const FiberConfiguration& config);

}  // namespace ellf2

#endif  // ELLF2_TATE_HPP
