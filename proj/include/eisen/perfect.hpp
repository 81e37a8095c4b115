#pragma once

// tau-perfect (sigma(x) = tau*x) and tau-norm-perfect (N(sigma(x)) = N(tau*x))
// Eisenstein integers: exact verification, Euclid-form construction,
// bounded exhaustive search and numeric checks of the supporting inequalities.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/divisors.hpp"
#include "eisen/mersenne.hpp"
#include "eisen/primes.hpp"
#include "eisen/rational.hpp"

namespace eisen {

struct PerfectVerdict {
    EInt eta;
    EInt tau;
    EInt sigma_eta;
    Integer n_sigma;
    Integer n_tau_eta;
    bool is_perfect = false;
    bool is_norm_perfect = false;
    Confidence confidence = Confidence::deterministic;
};

namespace detail {

inline PerfectVerdict verdict_from(const EInt& tau, const EInt& eta, const Factorization& f) {
    PerfectVerdict v;
    v.eta = eta;
    v.tau = tau;
    v.sigma_eta = sigma(f);
    v.n_sigma = v.sigma_eta.norm();
    v.n_tau_eta = tau.norm() * eta.norm();
    v.is_norm_perfect = v.n_sigma == v.n_tau_eta;
    v.is_perfect = v.is_norm_perfect && v.sigma_eta == tau * eta;
    v.confidence = f.confidence;
    return v;
}

} // namespace detail

inline PerfectVerdict verify(const EInt& tau, const EInt& eta, const Effort& effort = {}) {
    require_prime_tau(tau, effort);
    if (eta.is_zero()) throw domain_error("verify: eta must be nonzero");
    return detail::verdict_from(tau, eta, factor(eta, effort));
}

// tau^{p-1} * M_p, or tau^{p-1} * conj(M_p) when use_conjugate is set.
inline EInt construct_candidate(const EInt& tau, unsigned long p, bool use_conjugate,
                                const Effort& effort = {}) {
    require_prime_tau(tau, effort);
    if (p < 2) throw domain_error("construct_candidate: p must be >= 2");
    EInt m = mersenne_number(tau, p);
    if (use_conjugate) m = m.conj();
    return pow(tau, p - 1) * m;
}

struct EuclidEulerEntry {
    enum class Status { skipped_residue, skipped_composite, verified, failed };
    unsigned long p = 0;
    unsigned long residue = 0; // p mod 12
    Status status = Status::skipped_residue;
    PrimalityResult mersenne_prime;
    std::optional<PerfectVerdict> verdict;
    bool expected_perfect = false;
};

inline const char* to_string(EuclidEulerEntry::Status s) {
    switch (s) {
    case EuclidEulerEntry::Status::skipped_residue: return "skipped-residue";
    case EuclidEulerEntry::Status::skipped_composite: return "skipped-composite";
    case EuclidEulerEntry::Status::verified: return "verified";
    default: return "failed";
    }
}

struct EuclidEulerReport {
    unsigned long pmax = 0;
    std::vector<EuclidEulerEntry> entries;
    bool all_verified() const {
        return std::none_of(entries.begin(), entries.end(), [](const EuclidEulerEntry& e) {
            return e.status == EuclidEulerEntry::Status::failed;
        });
    }
};

// For tau = 2 + w and every rational prime p <= pmax: when p = +-1 (mod 12)
// and M_p is prime, the candidate tau^{p-1} M_p (p = 1) or tau^{p-1} conj(M_p)
// (p = 11) must be norm-perfect, and perfect exactly when p = 1 (mod 12).
inline EuclidEulerReport verify_euclid_euler(unsigned long pmax, const Effort& effort = {}) {
    if (pmax < 2) throw domain_error("verify_euclid_euler: pmax must be >= 2");
    const EInt tau = omega_plus_two();
    EuclidEulerReport report;
    report.pmax = pmax;
    for (unsigned long p = 2; p <= pmax; ++p) {
        if (!rational_is_prime(p).prime) continue;
        EuclidEulerEntry e;
        e.p = p;
        e.residue = p % 12;
        if (e.residue != 1 && e.residue != 11) {
            report.entries.push_back(std::move(e));
            continue;
        }
        e.mersenne_prime = is_prime(mersenne_number(tau, p), effort);
        if (!e.mersenne_prime.prime) {
            e.status = EuclidEulerEntry::Status::skipped_composite;
            report.entries.push_back(std::move(e));
            continue;
        }
        e.expected_perfect = e.residue == 1;
        const EInt eta = construct_candidate(tau, p, /*use_conjugate=*/e.residue == 11, effort);
        e.verdict = verify(tau, eta, effort);
        e.verdict->confidence = combine(e.verdict->confidence, e.mersenne_prime.confidence);
        const bool ok = e.verdict->is_norm_perfect && e.verdict->is_perfect == e.expected_perfect;
        e.status = ok ? EuclidEulerEntry::Status::verified : EuclidEulerEntry::Status::failed;
        report.entries.push_back(std::move(e));
    }
    return report;
}

// Smallest-prime-factor table for 0..limit.
class SpfSieve {
  public:
    explicit SpfSieve(std::uint64_t limit) : spf_(limit + 1, 0) {
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (spf_[i] != 0) continue;
            spf_[i] = static_cast<std::uint32_t>(i);
            for (std::uint64_t j = i * i; j <= limit; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }

    std::uint64_t limit() const { return spf_.size() - 1; }

    RationalFactorization factor(std::uint64_t n) const {
        RationalFactorization out;
        while (n > 1) {
            const std::uint32_t p = spf_[n];
            unsigned long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.factors.push_back({Integer(static_cast<unsigned long>(p)), e});
        }
        return out;
    }

  private:
    std::vector<std::uint32_t> spf_;
};

struct SearchOptions {
    // Largest norm bound accepted before the search refuses to run.
    std::uint64_t max_norm_bound = 10'000'000;
    unsigned threads = 1;
};

struct SearchReport {
    EInt tau;
    Integer norm_bound;
    std::uint64_t candidates_checked = 0;
    std::vector<PerfectVerdict> hits;
};

// Every first-sextant eta divisible by tau with N(eta) <= norm_bound is
// checked. Associates need not be visited: both N(sigma(eta)) and N(tau eta)
// are unchanged by a unit factor. Each eta = (tau mu)* for a unique
// first-sextant mu with N(mu) <= norm_bound / N(tau).
inline SearchReport search_norm_perfect(const EInt& tau, const Integer& norm_bound,
                                        const SearchOptions& options = {},
                                        const Effort& effort = {}) {
    require_prime_tau(tau, effort);
    if (norm_bound < 1) throw domain_error("search: norm bound must be positive");
    if (norm_bound > options.max_norm_bound)
        throw budget_exceeded("search: norm bound " + norm_bound.get_str() + " exceeds budget " +
                              std::to_string(options.max_norm_bound));

    const std::uint64_t bound = norm_bound.get_ui();
    const std::uint64_t tau_norm = tau.norm().get_ui();
    const std::uint64_t mu_bound = bound / tau_norm;

    SearchReport report;
    report.tau = tau;
    report.norm_bound = norm_bound;
    if (mu_bound == 0) return report;

    const SpfSieve sieve(bound);
    const unsigned threads = std::max(1U, options.threads);
    std::mutex mu_report;

    // Worker t handles the norm band (lo, hi] of N(mu).
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t checked = 0;
        std::vector<PerfectVerdict> hits;
        for (std::int64_t b = 0;; ++b) {
            const auto bb = static_cast<std::uint64_t>(b * b);
            if (bb > hi) break;
            for (std::int64_t a = b + 1;; ++a) {
                const auto n = static_cast<std::uint64_t>(a * a - a * b + b * b);
                if (n > hi) break;
                if (n <= lo) continue;
                const EInt eta = canonical(tau * EInt(a, b));
                const Factorization f = factor_with_norm(eta, sieve.factor(n * tau_norm));
                PerfectVerdict v = detail::verdict_from(tau, eta, f);
                ++checked;
                if (v.is_norm_perfect) hits.push_back(std::move(v));
            }
        }
        std::lock_guard lock(mu_report);
        report.candidates_checked += checked;
        for (auto& h : hits) report.hits.push_back(std::move(h));
    };

    if (threads == 1) {
        work(0, mu_bound);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = mu_bound * t / threads;
            const std::uint64_t hi = mu_bound * (t + 1) / threads;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Hits are re-derived through the general factorization path.
    for (auto& h : report.hits) {
        PerfectVerdict again = verify(tau, h.eta, effort);
        if (!again.is_norm_perfect || again.sigma_eta != h.sigma_eta)
            throw std::logic_error("search: hit " + to_string(h.eta) + " failed re-verification");
    }
    std::sort(report.hits.begin(), report.hits.end(),
              [](const PerfectVerdict& x, const PerfectVerdict& y) { return norm_order(x.eta, y.eta); });
    return report;
}

struct TwoMersenneEntry {
    unsigned long k = 0;
    Integer value;           // 2^k - 1
    unsigned long residue = 0; // value mod 3
    bool norm_is_square = false;
    PrimalityResult eisenstein_prime;
};

struct TwoMersenneReport {
    unsigned long kmax = 0;
    std::vector<TwoMersenneEntry> entries;
    std::vector<unsigned long> counterexamples;
};

// 2^k - 1 is never = 2 (mod 3), so as an Eisenstein integer it is never an
// inert rational prime; its norm (2^k - 1)^2 is a square, so it is not prime.
inline TwoMersenneReport check_two_mersenne_obstruction(unsigned long kmax,
                                                        const Effort& effort = {}) {
    if (kmax < 2) throw domain_error("check_two_mersenne_obstruction: kmax must be >= 2");
    TwoMersenneReport report;
    report.kmax = kmax;
    for (unsigned long k = 2; k <= kmax; ++k) {
        TwoMersenneEntry e;
        e.k = k;
        mpz_ui_pow_ui(e.value.get_mpz_t(), 2, k);
        e.value -= 1;
        e.residue = mpz_fdiv_ui(e.value.get_mpz_t(), 3);
        const EInt x(e.value);
        const Integer n = x.norm();
        e.norm_is_square = mpz_perfect_square_p(n.get_mpz_t()) != 0;
        e.eisenstein_prime = is_prime(x, effort);
        if (e.eisenstein_prime.prime || e.residue == 2 || !e.norm_is_square)
            report.counterexamples.push_back(k);
        report.entries.push_back(std::move(e));
    }
    return report;
}

// N(1 + z + ... + z^k) against N(z)^{k-1} (N(z) + 2x -+ 1) for z = x + iy,
// with the norm taken as the squared modulus x^2 + y^2.
struct GeometricBoundResult {
    unsigned long k = 0;
    Rational lhs;
    Rational rhs_strict;
    Rational rhs_weak;
    bool strict_holds = false;  // lhs > rhs_strict
    bool weak_applies = false;  // |y| <= x - 1
    bool weak_holds = false;    // lhs >= rhs_weak
    bool weak_equality = false; // lhs == rhs_weak
};

namespace detail {

inline const Rational& five_quarters() {
    static const Rational q(5, 4);
    return q;
}

inline GeometricBoundResult geometric_bound_finish(unsigned long k, Rational lhs, const Rational& nz,
                                    const Rational& x, bool weak_applies) {
    GeometricBoundResult r;
    r.k = k;
    r.lhs = std::move(lhs);
    Rational scale = 1;
    for (unsigned long i = 1; i < k; ++i) scale *= nz;
    r.rhs_strict = scale * (nz + 2 * x - 1);
    r.rhs_weak = scale * (nz + 2 * x + 1);
    r.strict_holds = r.lhs > r.rhs_strict;
    r.weak_applies = weak_applies;
    if (weak_applies) {
        r.weak_holds = r.lhs >= r.rhs_weak;
        r.weak_equality = r.lhs == r.rhs_weak;
    }
    return r;
}

} // namespace detail

// z = x + iy with rational coordinates; requires x >= 5/4 and k >= 1.
inline GeometricBoundResult geometric_bound_check(const Rational& x, const Rational& y, unsigned long k) {
    if (x < detail::five_quarters()) throw domain_error("geometric_bound_check: requires x >= 5/4");
    if (k < 1) throw domain_error("geometric_bound_check: requires k >= 1");
    Rational sr = 1, si = 0, pr = 1, pi = 0;
    for (unsigned long j = 1; j <= k; ++j) {
        Rational nr = pr * x - pi * y;
        Rational ni = pr * y + pi * x;
        pr = std::move(nr);
        pi = std::move(ni);
        sr += pr;
        si += pi;
    }
    const Rational lhs = sr * sr + si * si;
    const Rational nz = x * x + y * y;
    const Rational y_abs = abs(y);
    return detail::geometric_bound_finish(k, lhs, nz, x, y_abs <= x - 1);
}

// z an Eisenstein integer a + bw: x = a - b/2 and y^2 = 3b^2/4, so the norms
// stay integral and |y| <= x - 1 is tested as 3b^2/4 <= (x - 1)^2.
inline GeometricBoundResult geometric_bound_check(const EInt& z, unsigned long k) {
    const Rational x = Rational(z.a()) - Rational(z.b(), 2);
    if (x < detail::five_quarters()) throw domain_error("geometric_bound_check: requires x >= 5/4");
    if (k < 1) throw domain_error("geometric_bound_check: requires k >= 1");
    const Rational lhs(geometric_sum(z, k).norm());
    const Rational nz(z.norm());
    const Rational y2 = Rational(3 * z.b() * z.b(), 4);
    const Rational xm1 = x - 1;
    return detail::geometric_bound_finish(k, lhs, nz, x, y2 <= xm1 * xm1);
}

struct GeometricBoundSweep {
    std::uint64_t samples = 0;
    std::uint64_t strict_violations = 0;
    std::uint64_t weak_checked = 0;
    std::uint64_t weak_violations = 0;
    std::uint64_t weak_equalities = 0;
    // Equalities in the weak bound with k != 1.
    std::uint64_t equality_off_k1 = 0;
    // Samples with k == 1 and |y| <= x - 1 that missed equality.
    std::uint64_t missing_k1_equalities = 0;
    bool clean() const {
        return strict_violations == 0 && weak_violations == 0 && equality_off_k1 == 0 &&
               missing_k1_equalities == 0;
    }
};

// Pseudo-random z = x + iy with x >= 5/4 and 1 <= k <= kmax. Half the samples
// draw y inside the cone |y| <= x - 1 (boundary included), half anywhere in
// [-12, 12]; coordinates are rationals with denominators up to 64.
inline GeometricBoundSweep geometric_bound_sweep(std::uint64_t samples, std::uint64_t seed,
                                  unsigned long kmax = 30) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(1, 64);
    std::uniform_int_distribution<unsigned long> k_dist(1, kmax);
    GeometricBoundSweep out;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const long den = den_dist(rng);
        const long num = std::uniform_int_distribution<long>(0, 8 * den)(rng);
        Rational x = detail::five_quarters() + Rational(num, den);
        x.canonicalize();
        Rational y;
        if (i % 2 == 0) {
            const long tden = den_dist(rng);
            const long tnum = std::uniform_int_distribution<long>(-tden, tden)(rng);
            y = (x - 1) * Rational(tnum, tden);
        } else {
            const long yden = den_dist(rng);
            y = Rational(std::uniform_int_distribution<long>(-12 * yden, 12 * yden)(rng), yden);
        }
        y.canonicalize();
        const unsigned long k = k_dist(rng);
        const GeometricBoundResult r = geometric_bound_check(x, y, k);
        ++out.samples;
        if (!r.strict_holds) ++out.strict_violations;
        if (r.weak_applies) {
            ++out.weak_checked;
            if (!r.weak_holds) ++out.weak_violations;
            if (r.weak_equality) {
                ++out.weak_equalities;
                if (k != 1) ++out.equality_off_k1;
            } else if (k == 1) {
                ++out.missing_k1_equalities;
            }
        }
    }
    return out;
}

struct SigmaNormBound {
    Integer n_sigma;
    Integer n_eta;
    bool unit = false;
    bool holds = false;    // N(sigma) >= N(eta)
    bool equality = false; // N(sigma) == N(eta)
    bool consistent() const { return holds && equality == unit; }
};

inline SigmaNormBound sigma_norm_bound_check(const EInt& eta, const Effort& effort = {}) {
    if (eta.is_zero()) throw domain_error("sigma_norm_bound_check: eta must be nonzero");
    SigmaNormBound r;
    r.n_sigma = sigma(eta, effort).norm();
    r.n_eta = eta.norm();
    r.unit = is_unit(eta);
    r.holds = r.n_sigma >= r.n_eta;
    r.equality = r.n_sigma == r.n_eta;
    return r;
}

// True when eta is a unit times tau^{p-1} M_p (p = 1 mod 12) or
// tau^{p-1} conj(M_p) (p = 11 mod 12) with p prime and M_p prime, for
// tau = 2 + w.
inline bool matches_euclid_euler_form(const EInt& eta, const Effort& effort = {}) {
    if (eta.is_zero()) return false;
    const EInt tau = omega_plus_two();
    EInt rest = eta;
    unsigned long v = 0;
    while (auto q = exact_div(rest, tau)) {
        rest = std::move(*q);
        ++v;
    }
    const unsigned long p = v + 1;
    if (v == 0 || !rational_is_prime(p).prime) return false;
    const unsigned long r = p % 12;
    if (r != 1 && r != 11) return false;
    const EInt m = mersenne_number(tau, p);
    if (!is_prime(m, effort).prime) return false;
    return are_associates(rest, r == 1 ? m : m.conj());
}

// Lower bound N(sigma(tau))/N(tau)^2 * (N(m) + 2 Re(m*) - 1)/N(m) on
// N(sigma(tau m^t d))/N(tau^2 m^t d) for prime m coprime to tau.
inline Rational leading_ratio_bound(const EInt& tau, const EInt& m) {
    const EInt ms = canonical(m);
    const Integer two_re = 2 * ms.a() - ms.b();
    const Integer nt = tau.norm();
    const Integer nm = m.norm();
    const Integer n_sigma_tau = (EInt(1) + canonical(tau)).norm();
    Rational bound(n_sigma_tau * (nm + two_re - 1), nt * nt * nm);
    bound.canonicalize();
    return bound;
}

} // namespace eisen
