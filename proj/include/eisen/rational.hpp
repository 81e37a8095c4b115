#pragma once

// Rational-integer primality and factorization.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/errors.hpp"

namespace eisen {

enum class Confidence { deterministic, probabilistic };

inline Confidence combine(Confidence x, Confidence y) {
    return (x == Confidence::probabilistic || y == Confidence::probabilistic)
               ? Confidence::probabilistic
               : Confidence::deterministic;
}

inline const char* to_string(Confidence c) {
    return c == Confidence::deterministic ? "deterministic" : "probabilistic";
}

struct PrimalityResult {
    bool prime = false;
    Confidence confidence = Confidence::deterministic;
    explicit operator bool() const { return prime; }
};

// Tunables shared by every routine that may need to test primality or
// factor a rational integer.
struct Effort {
    // Miller-Rabin error bound is 2^-confidence_bits above the deterministic range.
    unsigned confidence_bits = 128;
    // Pollard-Brent iterations allowed per cofactor before giving up.
    std::uint64_t rho_iterations = std::uint64_t{1} << 24;
    // Trial-division limit applied before rho.
    unsigned long trial_limit = 1'000'000;
    // Upper bound on the size of an explicitly enumerated divisor set.
    std::uint64_t max_divisors = std::uint64_t{1} << 20;
};

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct RationalFactorization {
    std::vector<PrimePower> factors;
    Confidence confidence = Confidence::deterministic;
};

namespace detail {

inline std::shared_ptr<const std::vector<unsigned long>> small_primes(unsigned long limit) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<unsigned long>> cached;
    static unsigned long sieved = 0;
    std::lock_guard lock(mu);
    if (limit > sieved || !cached) {
        std::vector<bool> composite(limit + 1, false);
        auto primes = std::make_shared<std::vector<unsigned long>>();
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            primes->push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        cached = std::move(primes);
        sieved = limit;
    }
    return cached;
}

// One strong-probable-prime round; n odd, n > 3, n - 1 = d * 2^s.
inline bool strong_probable_prime(const Integer& n, const Integer& base, const Integer& d,
                                  unsigned long s) {
    const Integer n_minus_1 = n - 1;
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace detail

// Miller-Rabin. Below 2^64 the first twelve prime bases give a proven answer;
// above, ceil(confidence_bits / 2) pseudo-random bases bound the error by
// 4^-rounds.
inline PrimalityResult rational_is_prime(const Integer& n, const Effort& effort = {}) {
    if (n < 2) return {false, Confidence::deterministic};
    static constexpr unsigned long kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : kSmall) {
        if (n == p) return {true, Confidence::deterministic};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, Confidence::deterministic};
    }
    Integer d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (unsigned long p : kSmall)
            if (!detail::strong_probable_prime(n, Integer(p), d, s))
                return {false, Confidence::deterministic};
        return {true, Confidence::deterministic};
    }

    for (unsigned long p : kSmall)
        if (!detail::strong_probable_prime(n, Integer(p), d, s))
            return {false, Confidence::deterministic};

    const unsigned rounds = (effort.confidence_bits + 1) / 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Integer(n % Integer("18446744073709551557")));
    const Integer span = n - 3;
    for (unsigned i = 0; i < rounds; ++i) {
        Integer base = rng.get_z_range(span) + 2;
        if (!detail::strong_probable_prime(n, base, d, s))
            return {false, Confidence::deterministic};
    }
    return {true, Confidence::probabilistic};
}

inline PrimalityResult rational_is_prime(unsigned long n, const Effort& effort = {}) {
    return rational_is_prime(Integer(n), effort);
}

namespace detail {

// Pollard-Brent; returns a nontrivial factor of composite odd n or 0 on
// budget exhaustion.
inline Integer pollard_brent(const Integer& n, std::uint64_t budget) {
    std::uint64_t spent = 0;
    for (unsigned long c = 1; spent < budget; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        auto f = [&](const Integer& v) -> Integer { return Integer((v * v + c) % n); };
        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff % n;
                }
                spent += lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time from the last saved position.
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                ++spent;
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline void factor_into(const Integer& n, std::vector<Integer>& primes, Confidence& confidence,
                        const Effort& effort) {
    if (n == 1) return;
    PrimalityResult pr = rational_is_prime(n, effort);
    if (pr.prime) {
        confidence = combine(confidence, pr.confidence);
        primes.push_back(n);
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_into(root, primes, confidence, effort);
        factor_into(root, primes, confidence, effort);
        return;
    }
    Integer g = pollard_brent(n, effort.rho_iterations);
    if (g == 0)
        throw budget_exceeded("rational_factor: cofactor " + n.get_str() +
                              " resisted factoring within the iteration budget");
    factor_into(g, primes, confidence, effort);
    factor_into(Integer(n / g), primes, confidence, effort);
}

} // namespace detail

// Complete factorization of n >= 1 as (prime, exponent) pairs in ascending
// prime order.
inline RationalFactorization rational_factor(const Integer& n, const Effort& effort = {}) {
    if (n < 1) throw domain_error("rational_factor requires n >= 1");
    RationalFactorization out;
    Integer m = n;
    const auto primes = detail::small_primes(effort.trial_limit);
    for (unsigned long p : *primes) {
        if (p > effort.trial_limit) break;
        if (Integer(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out.factors.push_back({Integer(p), e});
    }
    if (m > 1) {
        std::vector<Integer> rest;
        detail::factor_into(m, rest, out.confidence, effort);
        std::sort(rest.begin(), rest.end());
        for (const Integer& p : rest) {
            if (!out.factors.empty() && out.factors.back().prime == p)
                ++out.factors.back().exponent;
            else
                out.factors.push_back({p, 1});
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    }
    return out;
}

inline RationalFactorization rational_factor(unsigned long n, const Effort& effort = {}) {
    return rational_factor(Integer(n), effort);
}

// Square root of a modulo an odd prime p (Tonelli-Shanks); a must be a
// quadratic residue.
inline Integer sqrt_mod_prime(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) != 1)
        throw domain_error("sqrt_mod_prime: not a quadratic residue");
    Integer q = p - 1;
    const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer c, x, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

} // namespace eisen
