#pragma once

// The star map and the complex sum-of-divisors function.
//
// A canonical divisor of x is a product of powers of the first-sextant primes
// in x's factorization, with exponents bounded by those of x. Such products
// need not lie in the first sextant themselves: (3+w)(3+2w) = 7+7w.

#include <cstdint>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/primes.hpp"

namespace eisen {

// x* = prod (pi_i*)^e_i; the unit of the factorization is dropped, so every
// unit maps to 1.
inline EInt star(const Factorization& f) {
    EInt v(1);
    for (const auto& pp : f.factors) v *= pow(pp.prime, pp.exponent);
    return v;
}

inline EInt star(const EInt& x, const Effort& effort = {}) { return star(factor(x, effort)); }

// 1 + pi + ... + pi^e
inline EInt geometric_sum(const EInt& pi, unsigned long e) {
    EInt sum(1);
    EInt term(1);
    for (unsigned long j = 1; j <= e; ++j) {
        term *= pi;
        sum += term;
    }
    return sum;
}

inline EInt sigma(const Factorization& f) {
    EInt v(1);
    for (const auto& pp : f.factors) v *= geometric_sum(pp.prime, pp.exponent);
    return v;
}

inline EInt sigma(const EInt& x, const Effort& effort = {}) {
    if (x.is_zero()) throw domain_error("sigma of zero");
    return sigma(factor(x, effort));
}

// Every product of canonical prime powers dividing x*, in exponent-vector
// (odometer) order starting from 1.
inline std::vector<EInt> canonical_divisors(const EInt& x, const Effort& effort = {}) {
    if (x.is_zero()) throw domain_error("canonical_divisors of zero");
    const Factorization f = factor(x, effort);
    std::uint64_t count = 1;
    for (const auto& pp : f.factors) {
        if (count > effort.max_divisors / (pp.exponent + 1))
            throw budget_exceeded("canonical_divisors: divisor count exceeds budget");
        count *= pp.exponent + 1;
    }
    std::vector<EInt> out{EInt(1)};
    out.reserve(count);
    for (const auto& pp : f.factors) {
        const std::size_t base = out.size();
        EInt power(1);
        for (unsigned long j = 1; j <= pp.exponent; ++j) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

// Direct summation over canonical_divisors.
inline EInt sigma_oracle(const EInt& x, const Effort& effort = {}) {
    EInt sum(0);
    for (const EInt& d : canonical_divisors(x, effort)) sum += d;
    return sum;
}

} // namespace eisen
