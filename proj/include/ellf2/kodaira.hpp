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

#ifndef ELLF2_KODAIRA_HPP
#define ELLF2_KODAIRA_HPP

#include <string>
#include <string_view>

namespace ellf2 {

enum class KodairaFamily { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

/// Kodaira symbol of a geometric fiber. `n` is used by I_n and I_n^* only
/// and is zero for the other families.
struct KodairaSymbol {
    KodairaFamily family = KodairaFamily::I;
    int n = 0;

    static KodairaSymbol I(int n);
    static KodairaSymbol Istar(int n);
    static KodairaSymbol of(KodairaFamily f);

    /// Irreducible components of the geometric fiber.
    int components() const;
    bool is_smooth() const { return family == KodairaFamily::I && n == 0; }
    bool is_semistable() const { return family == KodairaFamily::I && n >= 1; }
    bool is_additive() const { return family != KodairaFamily::I; }

    friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
};

/// "I0", "I3", "I1*", "II", "III", "IV", "IV*", "III*", "II*".
std::string to_string(const KodairaSymbol& s);

/// Accepts the output of to_string. Throws ParseError.
KodairaSymbol parse_kodaira(std::string_view text);

}  // namespace ellf2

#endif  // ELLF2_KODAIRA_HPP
