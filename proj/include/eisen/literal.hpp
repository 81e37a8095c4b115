#pragma once

// Text form of Eisenstein integers, with ASCII 'w' standing for omega.
//
//   literal := term | term sign term
//   term    := [sign] digits | [sign] [digits] 'w'
//
// At most one constant and one w-term; spaces are allowed anywhere between
// tokens. Printing (to_string in core.hpp) omits zero terms and unit
// coefficients, so "2+w", "-3w", "7", "w".

#include <cctype>
#include <string>
#include <string_view>

#include "eisen/core.hpp"
#include "eisen/errors.hpp"

namespace eisen {

inline EInt parse_eint(std::string_view text) {
    // Spaces may separate tokens but not split a run of digits.
    std::string s;
    bool prev_digit = false, gap = false;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
            gap = true;
            continue;
        }
        const bool digit = std::isdigit(u) != 0;
        if (digit && prev_digit && gap)
            throw parse_error("malformed Eisenstein integer '" + std::string(text) + "': space inside a number");
        s.push_back(c);
        prev_digit = digit;
        gap = false;
    }
    if (s.empty()) throw parse_error("empty Eisenstein integer literal");

    auto fail = [&](const char* why) {
        return parse_error("malformed Eisenstein integer '" + std::string(text) + "': " + why);
    };

    Integer a = 0, b = 0;
    bool seen_const = false, seen_w = false;
    std::size_t i = 0;
    int terms = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (terms > 0) {
            throw fail("expected '+' or '-' between terms");
        }
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string digits = s.substr(start, i - start);
        const bool is_w = i < s.size() && (s[i] == 'w' || s[i] == 'W');
        if (is_w) ++i;
        if (digits.empty() && !is_w) throw fail("expected digits or 'w'");
        Integer value = digits.empty() ? Integer(1) : Integer(digits, 10);
        if (negative) value = -value;
        if (is_w) {
            if (seen_w) throw fail("more than one w-term");
            seen_w = true;
            b = value;
        } else {
            if (seen_const) throw fail("more than one constant term");
            seen_const = true;
            a = value;
        }
        if (++terms > 2) throw fail("too many terms");
    }
    return EInt(std::move(a), std::move(b));
}

} // namespace eisen
