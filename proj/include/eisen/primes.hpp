#pragma once

// Eisenstein primes: splitting of rational primes, primality, factorization.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/errors.hpp"
#include "eisen/rational.hpp"

namespace eisen {

// How a rational prime p decomposes in Z[w].
struct SplitClass {
    enum class Kind { ramified, split, inert };
    Kind kind = Kind::inert;
    // First-sextant primes above p, in (norm, a, b) order: one for ramified
    // and inert, two non-associate conjugates for split.
    std::vector<EInt> primes;
    Confidence confidence = Confidence::deterministic;
};

inline const char* to_string(SplitClass::Kind k) {
    switch (k) {
    case SplitClass::Kind::ramified: return "ramified";
    case SplitClass::Kind::split: return "split";
    default: return "inert";
    }
}

namespace detail {

// Below this bound split primes are found by scanning b in a^2 - ab + b^2 = p.
inline constexpr std::uint64_t kNormEquationScanLimit = 100'000'000;

inline EInt solve_norm_equation_scan(std::uint64_t p) {
    const auto bmax = static_cast<std::uint64_t>(std::ceil(2.0 * std::sqrt(p / 3.0))) + 1;
    for (std::uint64_t b = 0; b <= bmax; ++b) {
        const std::int64_t disc = static_cast<std::int64_t>(4 * p) - static_cast<std::int64_t>(3 * b * b);
        if (disc < 0) break;
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
        while (r * r > disc) --r;
        while ((r + 1) * (r + 1) <= disc) ++r;
        if (r * r != disc || ((static_cast<std::int64_t>(b) + r) & 1) != 0) continue;
        const long a = static_cast<long>((static_cast<std::int64_t>(b) + r) / 2);
        return EInt(a, static_cast<long>(b));
    }
    throw std::logic_error("norm equation has no solution for p = " + std::to_string(p));
}

// pi = gcd(p, w - x) where x is a root of x^2 + x + 1 mod p.
inline EInt solve_norm_equation_root(const Integer& p) {
    Integer s = sqrt_mod_prime(Integer(p - 3), p);
    Integer inv2 = (p + 1) / 2;
    Integer x = (s - 1) * inv2 % p;
    if (x < 0) x += p;
    return gcd(EInt(p), EInt(Integer(-x), Integer(1)));
}

// p is already known to be prime (with the given confidence).
inline SplitClass split_known_prime(const Integer& p, Confidence confidence) {
    SplitClass out;
    out.confidence = confidence;
    if (p == 3) {
        out.kind = SplitClass::Kind::ramified;
        out.primes = {EInt(2, 1)};
        return out;
    }
    const unsigned long residue = mpz_fdiv_ui(p.get_mpz_t(), 3);
    if (residue == 2) {
        out.kind = SplitClass::Kind::inert;
        out.primes = {EInt(p)};
        return out;
    }
    out.kind = SplitClass::Kind::split;
    EInt pi = p <= kNormEquationScanLimit ? solve_norm_equation_scan(p.get_ui())
                                          : solve_norm_equation_root(p);
    EInt first = canonical(pi);
    EInt second = canonical(pi.conj());
    if (norm_order(second, first)) std::swap(first, second);
    out.primes = {std::move(first), std::move(second)};
    return out;
}

} // namespace detail

inline SplitClass split_prime(const Integer& p, const Effort& effort = {}) {
    const PrimalityResult pr = rational_is_prime(p, effort);
    if (!pr.prime) throw domain_error("split_prime: " + p.get_str() + " is not prime");
    return detail::split_known_prime(p, pr.confidence);
}

inline SplitClass split_prime(unsigned long p, const Effort& effort = {}) {
    return split_prime(Integer(p), effort);
}

// An Eisenstein integer is prime iff its norm is a rational prime, or it is
// an associate of a rational prime q = 2 (mod 3).
inline PrimalityResult is_prime(const EInt& x, const Effort& effort = {}) {
    if (x.is_zero()) return {false, Confidence::deterministic};
    const Integer n = x.norm();
    if (n == 1) return {false, Confidence::deterministic};
    PrimalityResult pr = rational_is_prime(n, effort);
    if (pr.prime) return pr;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return {false, Confidence::deterministic};
    Integer q;
    mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
    if (mpz_fdiv_ui(q.get_mpz_t(), 3) != 2) return {false, Confidence::deterministic};
    if (!are_associates(x, EInt(q))) return {false, Confidence::deterministic};
    return rational_is_prime(q, effort);
}

struct EPrimePower {
    EInt prime;
    unsigned long exponent = 0;
    friend bool operator==(const EPrimePower&, const EPrimePower&) = default;
};

// x = unit * prod prime^exponent, primes first-sextant and sorted by (norm, a, b).
struct Factorization {
    Unit unit;
    std::vector<EPrimePower> factors;
    Confidence confidence = Confidence::deterministic;

    EInt value() const {
        EInt v = unit.value();
        for (const auto& f : factors) v *= pow(f.prime, f.exponent);
        return v;
    }
};

// Factor x given a complete factorization of its norm into rational primes.
inline Factorization factor_with_norm(const EInt& x, const RationalFactorization& norm_factors) {
    if (x.is_zero()) throw domain_error("factor of zero");
    Factorization out;
    out.confidence = norm_factors.confidence;
    EInt rest = x;
    for (const PrimePower& pp : norm_factors.factors) {
        SplitClass sc = detail::split_known_prime(pp.prime, norm_factors.confidence);
        out.confidence = combine(out.confidence, sc.confidence);
        for (const EInt& pi : sc.primes) {
            unsigned long e = 0;
            while (auto q = exact_div(rest, pi)) {
                rest = std::move(*q);
                ++e;
            }
            if (e != 0) out.factors.push_back({pi, e});
        }
    }
    auto u = Unit::from(rest);
    if (!u) throw std::logic_error("factor: cofactor " + to_string(rest) + " is not a unit");
    out.unit = *u;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const EPrimePower& l, const EPrimePower& r) { return norm_order(l.prime, r.prime); });
    return out;
}

inline Factorization factor(const EInt& x, const Effort& effort = {}) {
    if (x.is_zero()) throw domain_error("factor of zero");
    return factor_with_norm(x, rational_factor(x.norm(), effort));
}

} // namespace eisen
