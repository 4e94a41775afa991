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

#include "ellf2/kodaira.hpp"

#include <cctype>
#include <stdexcept>

#include "ellf2/bitpoly.hpp"

namespace ellf2 {

KodairaSymbol KodairaSymbol::I(int n) {
    if (n < 0) throw std::invalid_argument("KodairaSymbol: n must be non-negative");
    return {KodairaFamily::I, n};
}

KodairaSymbol KodairaSymbol::Istar(int n) {
    if (n < 0) throw std::invalid_argument("KodairaSymbol: n must be non-negative");
    return {KodairaFamily::Istar, n};
}

KodairaSymbol KodairaSymbol::of(KodairaFamily f) {
    if (f == KodairaFamily::I || f == KodairaFamily::Istar)
        throw std::invalid_argument("KodairaSymbol::of: family needs a parameter");
    return {f, 0};
}

int KodairaSymbol::components() const {
    switch (family) {
        case KodairaFamily::I: return n == 0 ? 1 : n;
        case KodairaFamily::Istar: return n + 5;
        case KodairaFamily::II: return 1;
        case KodairaFamily::III: return 2;
        case KodairaFamily::IV: return 3;
        case KodairaFamily::IVstar: return 7;
        case KodairaFamily::IIIstar: return 8;
        case KodairaFamily::IIstar: return 9;
    }
    return 0;
}

std::string to_string(const KodairaSymbol& s) {
    switch (s.family) {
        case KodairaFamily::I: return "I" + std::to_string(s.n);
        case KodairaFamily::Istar: return "I" + std::to_string(s.n) + "*";
        case KodairaFamily::II: return "II";
        case KodairaFamily::III: return "III";
        case KodairaFamily::IV: return "IV";
        case KodairaFamily::IVstar: return "IV*";
        case KodairaFamily::IIIstar: return "III*";
        case KodairaFamily::IIstar: return "II*";
    }
    return "?";
}

KodairaSymbol parse_kodaira(std::string_view text) {
    const auto bad = [&](std::size_t at) { throw ParseError("unknown Kodaira symbol '" + std::string(text) + "'", at); };
    if (text == "II") return KodairaSymbol::of(KodairaFamily::II);
    if (text == "III") return KodairaSymbol::of(KodairaFamily::III);
    if (text == "IV") return KodairaSymbol::of(KodairaFamily::IV);
    if (text == "IV*") return KodairaSymbol::of(KodairaFamily::IVstar);
    if (text == "III*") return KodairaSymbol::of(KodairaFamily::IIIstar);
    if (text == "II*") return KodairaSymbol::of(KodairaFamily::IIstar);
    if (text.size() < 2 || text[0] != 'I') bad(0);
    std::size_t pos = 1;
    int n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        n = n * 10 + (text[pos] - '0');
        if (n > 1000) bad(pos);
        ++pos;
    }
    if (pos == 1) bad(1);
    if (pos == text.size()) return KodairaSymbol::I(n);
    if (text[pos] == '*' && pos + 1 == text.size()) return KodairaSymbol::Istar(n);
    bad(pos);
    return {};
}

}  // namespace ellf2
