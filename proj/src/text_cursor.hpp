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

#ifndef ELLF2_SRC_TEXT_CURSOR_HPP
#define ELLF2_SRC_TEXT_CURSOR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "ellf2/bitpoly.hpp"

namespace ellf2::detail {

// Whitespace-skipping cursor shared by the polynomial and equation parsers.
class TextCursor {
   public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    std::size_t position() const { return pos_; }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_end() { return peek() == '\0'; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    unsigned read_exponent() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
        unsigned value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (value > 1000) fail("exponent too large");
            ++pos_;
        }
        return value;
    }

    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

   private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Characters that may start a factor in a product written by juxtaposition.
inline bool starts_factor(char c) { return c == '0' || c == '1' || c == 't' || c == 'x' || c == 'y' || c == '('; }

// Sum-of-products grammar over 0, 1, t and parentheses.
BitPoly parse_poly_expr(TextCursor& cur);

}  // namespace ellf2::detail

#endif  // ELLF2_SRC_TEXT_CURSOR_HPP
