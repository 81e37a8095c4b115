#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

// Argument outside an operation's domain (zero where nonzero is required,
// non-prime tau, violated inequality preconditions).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero : domain_error {
    division_by_zero() : domain_error("division by zero") {}
};

// An effort budget (factoring iterations, search bound, divisor count) ran out.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace eisen
