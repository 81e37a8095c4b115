#pragma once

// tau-Mersenne numbers M_k = 1 + tau + ... + tau^{k-1} = (tau^k - 1)/(tau - 1)
// and their norms A_k, with closed forms for tau = 2 + w.

#include <utility>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/divisors.hpp"
#include "eisen/primes.hpp"
#include "eisen/rational.hpp"

namespace eisen {

inline EInt omega_plus_two() { return EInt(2, 1); }

struct MersenneRecord {
    EInt tau;
    unsigned long k = 0;
    EInt m;
    Integer a_k;
    PrimalityResult prime_status;
};

inline void require_prime_tau(const EInt& tau, const Effort& effort) {
    if (!is_prime(tau, effort).prime) throw domain_error("tau = " + to_string(tau) + " is not prime");
}

// M_k without the primality test.
inline EInt mersenne_number(const EInt& tau, unsigned long k) {
    if (k < 1) throw domain_error("mersenne: k must be >= 1");
    return geometric_sum(tau, k - 1);
}

inline MersenneRecord mersenne(const EInt& tau, unsigned long k, const Effort& effort = {}) {
    require_prime_tau(tau, effort);
    MersenneRecord r;
    r.tau = tau;
    r.k = k;
    r.m = mersenne_number(tau, k);
    r.a_k = r.m.norm();
    r.prime_status = is_prime(r.m, effort);
    return r;
}

namespace detail {

inline Integer pow3(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

} // namespace detail

// A_k for tau = 2 + w by residue of k mod 12. Even residues are polynomials
// in h = 3^{k/2}; odd residues in t = 3^{(k+1)/2}.
inline Integer closed_form_norm(unsigned long k) {
    if (k < 1) throw domain_error("closed_form_norm: k must be >= 1");
    const Integer p = detail::pow3(k);
    const bool even = k % 2 == 0;
    const Integer h = even ? detail::pow3(k / 2) : Integer(0);
    const Integer t = even ? Integer(0) : detail::pow3((k + 1) / 2);
    switch (k % 12) {
    case 0: return 1 - 2 * h + p;
    case 1: return 1 + p - t;
    case 2: return 1 - h + p;
    case 3: return 1 + p;
    case 4: return 1 + h + p;
    case 5: return 1 + p + t;
    case 6: return 1 + 2 * h + p;
    case 7: return 1 + p + t;
    case 8: return 1 + h + p;
    case 9: return 1 + p;
    case 10: return 1 - h + p;
    default: return 1 + p - t;
    }
}

// M_k for tau = 2 + w. The tabulated x + iy forms are converted to the
// (1, w) basis with b = 2y/sqrt(3), a = x + b/2; with s = 3^{(k-1)/2} for
// odd k and h = 3^{k/2} for even k every row has integer coefficients.
inline EInt closed_form_mersenne(unsigned long k) {
    if (k < 1) throw domain_error("closed_form_mersenne: k must be >= 1");
    const bool even = k % 2 == 0;
    const Integer h = even ? detail::pow3(k / 2) : Integer(0);
    const Integer s = even ? Integer(0) : detail::pow3((k - 1) / 2);
    switch (k % 12) {
    case 0: return EInt(Integer(0), Integer(1 - h));
    case 1: return EInt(s, Integer(1 - s));
    case 2: return EInt(h, Integer(1));
    case 3: return EInt(Integer(2 * s), Integer(1 + s));
    case 4: return EInt(h, Integer(1 + h));
    case 5: return EInt(s, Integer(1 + 2 * s));
    case 6: return EInt(Integer(0), Integer(1 + h));
    case 7: return EInt(Integer(-s), Integer(1 + s));
    case 8: return EInt(Integer(-h), Integer(1));
    case 9: return EInt(Integer(-2 * s), Integer(1 - s));
    case 10: return EInt(Integer(-h), Integer(1 - h));
    default: return EInt(Integer(-s), Integer(1 - 2 * s));
    }
}

inline Sextant mersenne_sextant_class(unsigned long k) {
    if (k < 2) throw domain_error("mersenne_sextant_class: k must be >= 2");
    return sextant(mersenne_number(omega_plus_two(), k));
}

// For composite k = n*m: M_k = M_n * (tau^{nm} - 1)/(tau^n - 1).
inline std::pair<EInt, EInt> composite_index_factors(const EInt& tau, unsigned long n,
                                                     unsigned long m) {
    const EInt tn = pow(tau, n);
    const EInt cofactor = *exact_div(pow(tau, n * m) - EInt(1), tn - EInt(1));
    return {mersenne_number(tau, n), cofactor};
}

struct MersenneIndexEntry {
    unsigned long k = 0;
    PrimalityResult mersenne_prime;
    PrimalityResult index_prime;
};

struct MersenneIndexReport {
    unsigned long kmax = 0;
    // Every k whose M_k passed the primality test.
    std::vector<MersenneIndexEntry> prime_indices;
    // k with M_k prime but k composite.
    std::vector<unsigned long> counterexamples;
};

inline MersenneIndexReport check_mersenne_prime_indices(unsigned long kmax, const Effort& effort = {}) {
    if (kmax < 2) throw domain_error("check_mersenne_prime_indices: kmax must be >= 2");
    MersenneIndexReport report;
    report.kmax = kmax;
    const EInt tau = omega_plus_two();
    for (unsigned long k = 2; k <= kmax; ++k) {
        const PrimalityResult mp = is_prime(mersenne_number(tau, k), effort);
        if (!mp.prime) continue;
        const PrimalityResult kp = rational_is_prime(k, effort);
        report.prime_indices.push_back({k, mp, kp});
        if (!kp.prime) report.counterexamples.push_back(k);
    }
    return report;
}

} // namespace eisen
