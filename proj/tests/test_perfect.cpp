#include <gtest/gtest.h>

#include "eisen/perfect.hpp"
#include "oracles.hpp"

using eisen::EInt;
using eisen::Integer;
using eisen::Rational;
using eisen::Unit;

TEST(Verify, Examples) {
    const EInt tau = eisen::omega_plus_two();
    auto one = eisen::verify(tau, EInt(1));
    EXPECT_FALSE(one.is_norm_perfect);
    EXPECT_EQ(one.n_sigma, 1);
    EXPECT_EQ(one.n_tau_eta, 3);

    auto t = eisen::verify(tau, tau);
    EXPECT_EQ(t.sigma_eta, EInt(3, 1));
    EXPECT_EQ(t.n_sigma, 7);
    EXPECT_EQ(t.n_tau_eta, 9);
    EXPECT_FALSE(t.is_norm_perfect);

    EXPECT_THROW(eisen::verify(EInt(7), EInt(1)), eisen::domain_error);
    EXPECT_THROW(eisen::verify(tau, EInt(0)), eisen::domain_error);
}

TEST(Verify, ClassicalPerfectNumbersWithTauTwo) {
    // 6 = 2 * 3 and 28 = 4 * 7 involve split/ramified primes, so they are not
    // 2-perfect here; 2^{p-1}(2^p - 1) needs 2^p - 1 inert, which never happens.
    for (long n : {6L, 28L, 496L, 8128L}) {
        auto v = eisen::verify(EInt(2), EInt(n));
        EXPECT_FALSE(v.is_norm_perfect) << n;
    }
}

TEST(ConstructCandidate, Examples) {
    EXPECT_EQ(eisen::construct_candidate(EInt(2, 1), 2, false), EInt(5, 4));
    EXPECT_EQ(eisen::construct_candidate(EInt(2), 3, false), EInt(28));
    EXPECT_EQ(eisen::construct_candidate(EInt(2, 1), 2, true), EInt(2, 1) * EInt(2, -1));
    const EInt w3(3, 1);
    EXPECT_EQ(eisen::construct_candidate(w3, 193, false),
              eisen::pow(w3, 192) * eisen::mersenne_number(w3, 193));
    EXPECT_THROW(eisen::construct_candidate(EInt(2, 1), 1, false), eisen::domain_error);
    EXPECT_THROW(eisen::construct_candidate(EInt(4), 3, false), eisen::domain_error);
}

TEST(Verify, EuclidFormForOmegaPlusTwo) {
    const EInt tau = eisen::omega_plus_two();
    auto v11 = eisen::verify(tau, eisen::construct_candidate(tau, 11, true));
    EXPECT_TRUE(v11.is_norm_perfect);
    EXPECT_FALSE(v11.is_perfect);
    EXPECT_EQ(v11.sigma_eta, eisen::pow(tau, 11).conj() * eisen::mersenne_number(tau, 11));
    EXPECT_EQ(v11.confidence, eisen::Confidence::deterministic);

    // Same exponent without conjugation is not norm-perfect.
    EXPECT_FALSE(eisen::verify(tau, eisen::construct_candidate(tau, 11, false)).is_norm_perfect);

    auto v193 = eisen::verify(tau, eisen::construct_candidate(tau, 193, false));
    EXPECT_TRUE(v193.is_norm_perfect);
    EXPECT_TRUE(v193.is_perfect);
    EXPECT_EQ(v193.confidence, eisen::Confidence::probabilistic);
}

TEST(Verify, AssociateInvarianceOfNormPerfection) {
    const EInt tau = eisen::omega_plus_two();
    const EInt eta = eisen::construct_candidate(tau, 11, true);
    for (Unit u : Unit::all()) EXPECT_TRUE(eisen::verify(tau, u * eta).is_norm_perfect);

    const EInt perfect = eisen::construct_candidate(tau, 193, false);
    int perfect_count = 0;
    for (Unit u : Unit::all()) {
        auto v = eisen::verify(tau, u * perfect);
        EXPECT_TRUE(v.is_norm_perfect);
        perfect_count += v.is_perfect;
    }
    // Only the unit 1 gives sigma(eta) = tau eta.
    EXPECT_EQ(perfect_count, 1);

    eisen::oracle::Sampler s(3);
    for (int i = 0; i < 300; ++i) {
        const EInt eta2 = tau * s.with_norm_at_most(5000);
        const bool np = eisen::verify(tau, eta2).is_norm_perfect;
        for (Unit u : Unit::all()) ASSERT_EQ(eisen::verify(tau, u * eta2).is_norm_perfect, np);
    }
}

TEST(Verify, PerfectImpliesNormPerfect) {
    eisen::oracle::Sampler s(12);
    for (const EInt& tau : {EInt(2, 1), EInt(2), EInt(3, 1)}) {
        for (int i = 0; i < 300; ++i) {
            auto v = eisen::verify(tau, s.with_norm_at_most(100000));
            if (v.is_perfect) {
                ASSERT_TRUE(v.is_norm_perfect);
            }
            ASSERT_EQ(v.is_norm_perfect, v.n_sigma == v.n_tau_eta);
        }
    }
}

TEST(EuclidEuler, Report) {
    auto r = eisen::verify_euclid_euler(50);
    EXPECT_TRUE(r.all_verified());
    using S = eisen::EuclidEulerEntry::Status;
    std::vector<std::pair<unsigned long, S>> got;
    for (const auto& e : r.entries) got.push_back({e.p, e.status});
    const std::vector<std::pair<unsigned long, S>> expected = {
        {2, S::skipped_residue},    {3, S::skipped_residue},    {5, S::skipped_residue},
        {7, S::skipped_residue},    {11, S::verified},          {13, S::skipped_composite},
        {17, S::skipped_residue},   {19, S::skipped_residue},   {23, S::skipped_composite},
        {29, S::skipped_residue},   {31, S::skipped_residue},   {37, S::skipped_composite},
        {41, S::skipped_residue},   {43, S::skipped_residue},   {47, S::skipped_composite}};
    EXPECT_EQ(got, expected);
    const auto& e11 = r.entries[4];
    ASSERT_TRUE(e11.verdict.has_value());
    EXPECT_TRUE(e11.verdict->is_norm_perfect);
    EXPECT_FALSE(e11.verdict->is_perfect);
}

TEST(Search, SmallBoundsHaveNoHits) {
    auto r = eisen::search_norm_perfect(eisen::omega_plus_two(), Integer(100));
    EXPECT_TRUE(r.hits.empty());
    // First-sextant mu with N(mu) <= 33: count by enumeration.
    std::uint64_t expected = 0;
    for (const EInt& x : eisen::oracle::lattice_ball(33))
        if (eisen::in_first_sextant(x)) ++expected;
    EXPECT_EQ(r.candidates_checked, expected);
}

TEST(Search, CandidateSetIsEveryFirstSextantMultipleOfTau) {
    const EInt tau(3, 1);
    const long bound = 3000;
    std::uint64_t expected = 0;
    for (const EInt& x : eisen::oracle::lattice_ball(bound))
        if (eisen::in_first_sextant(x) && eisen::divides(tau, x)) ++expected;
    auto r = eisen::search_norm_perfect(tau, Integer(bound));
    EXPECT_EQ(r.candidates_checked, expected);
}

TEST(Search, ThreadedMatchesSingleThreaded) {
    eisen::SearchOptions one, four;
    four.threads = 4;
    auto a = eisen::search_norm_perfect(EInt(2), Integer(200000), one);
    auto b = eisen::search_norm_perfect(EInt(2), Integer(200000), four);
    EXPECT_EQ(a.candidates_checked, b.candidates_checked);
    EXPECT_EQ(a.hits.size(), b.hits.size());
}

TEST(Search, AssociateOfTauSearchesTheSameSet) {
    // 1 - w is an associate of 2 + w; norm-perfection only sees N(tau).
    auto a = eisen::search_norm_perfect(EInt(1, -1), Integer(30000));
    auto b = eisen::search_norm_perfect(EInt(2, 1), Integer(30000));
    EXPECT_EQ(a.candidates_checked, b.candidates_checked);
    EXPECT_EQ(a.hits.size(), b.hits.size());
}

TEST(Search, BudgetAndPreconditions) {
    EXPECT_THROW(eisen::search_norm_perfect(EInt(2), Integer(100'000'000)), eisen::budget_exceeded);
    EXPECT_THROW(eisen::search_norm_perfect(EInt(4), Integer(100)), eisen::domain_error);
    EXPECT_THROW(eisen::search_norm_perfect(EInt(2), Integer(0)), eisen::domain_error);
}

TEST(TwoMersenne, Obstruction) {
    auto r = eisen::check_two_mersenne_obstruction(64);
    EXPECT_TRUE(r.counterexamples.empty());
    ASSERT_EQ(r.entries.size(), 63U);
    EXPECT_EQ(r.entries[0].value, 3);
    EXPECT_EQ(r.entries[0].residue, 0U);
    EXPECT_EQ(r.entries[1].value, 7);
    EXPECT_EQ(r.entries[1].residue, 1U);
    for (const auto& e : r.entries) {
        EXPECT_NE(e.residue, 2U);
        EXPECT_TRUE(e.norm_is_square);
        EXPECT_FALSE(e.eisenstein_prime.prime);
    }
    EXPECT_THROW(eisen::check_two_mersenne_obstruction(1), eisen::domain_error);
}

TEST(GeometricBound, Examples) {
    auto r1 = eisen::geometric_bound_check(Rational(2), Rational(0), 1);
    EXPECT_EQ(r1.lhs, 9);
    EXPECT_EQ(r1.rhs_weak, 9);
    EXPECT_TRUE(r1.weak_applies);
    EXPECT_TRUE(r1.weak_equality);
    EXPECT_TRUE(r1.strict_holds);

    auto r2 = eisen::geometric_bound_check(EInt(2, 1), 2);
    EXPECT_EQ(r2.lhs, 28);
    EXPECT_EQ(r2.rhs_strict, 15);
    EXPECT_TRUE(r2.strict_holds);
    EXPECT_FALSE(r2.weak_applies); // sqrt(3)/2 > 1/2

    auto r3 = eisen::geometric_bound_check(Rational(5, 4), Rational(0), 3);
    EXPECT_EQ(r3.lhs, Rational(136161, 4096));
    EXPECT_EQ(r3.rhs_strict, Rational(30625, 4096));
    EXPECT_TRUE(r3.strict_holds);

    EXPECT_THROW(eisen::geometric_bound_check(Rational(6, 5), Rational(0), 2), eisen::domain_error);
    EXPECT_THROW(eisen::geometric_bound_check(EInt(1, 1), 2), eisen::domain_error);
    EXPECT_THROW(eisen::geometric_bound_check(Rational(2), Rational(0), 0), eisen::domain_error);
}

TEST(GeometricBound, EisensteinAndRationalRoutesAgreeOnRealAxis) {
    for (long a = 2; a <= 9; ++a)
        for (unsigned long k = 1; k <= 8; ++k) {
            auto e = eisen::geometric_bound_check(EInt(a), k);
            auto q = eisen::geometric_bound_check(Rational(a), Rational(0), k);
            EXPECT_EQ(e.lhs, q.lhs);
            EXPECT_EQ(e.rhs_strict, q.rhs_strict);
            EXPECT_EQ(e.weak_applies, q.weak_applies);
        }
}

TEST(SigmaNormBound, Examples) {
    auto one = eisen::sigma_norm_bound_check(EInt(1));
    EXPECT_TRUE(one.equality);
    EXPECT_TRUE(one.consistent());
    auto t = eisen::sigma_norm_bound_check(EInt(2, 1));
    EXPECT_EQ(t.n_sigma, 7);
    EXPECT_EQ(t.n_eta, 3);
    EXPECT_TRUE(t.consistent());
    for (const EInt& x : eisen::oracle::lattice_ball(10000))
        ASSERT_TRUE(eisen::sigma_norm_bound_check(x).consistent()) << x;
}

TEST(LeadingRatio, TauTimesMersenneTwo) {
    const EInt tau = eisen::omega_plus_two();
    const EInt m2 = eisen::mersenne_number(tau, 2);
    EXPECT_EQ(eisen::leading_ratio_bound(tau, m2), Rational(11, 9));
    EXPECT_EQ(eisen::leading_ratio_bound(tau, m2.conj()), Rational(10, 9));
    for (const EInt& m : {m2, m2.conj()}) {
        auto v = eisen::verify(tau, tau * m);
        const Rational ratio(v.n_sigma, v.n_tau_eta);
        EXPECT_GT(ratio, eisen::leading_ratio_bound(tau, m));
        EXPECT_GT(ratio, 1);
    }
}

TEST(GeometricBound, SweepIsCleanAndReproducible) {
    const auto a = eisen::geometric_bound_sweep(2000, 3);
    const auto b = eisen::geometric_bound_sweep(2000, 3);
    EXPECT_TRUE(a.clean());
    EXPECT_EQ(a.samples, 2000U);
    EXPECT_GT(a.weak_checked, 0U);
    EXPECT_GT(a.weak_equalities, 0U);
    EXPECT_EQ(a.weak_checked, b.weak_checked);
    EXPECT_EQ(a.weak_equalities, b.weak_equalities);
}

TEST(EuclidEulerForm, RecognisesWitnessesAndTheirAssociates) {
    const EInt tau = eisen::omega_plus_two();
    const EInt eta11 = eisen::construct_candidate(tau, 11, true);
    for (Unit u : Unit::all()) EXPECT_TRUE(eisen::matches_euclid_euler_form(u * eta11));
    // Wrong orientation of M_11, composite M_13, a bare power of tau.
    EXPECT_FALSE(eisen::matches_euclid_euler_form(eisen::construct_candidate(tau, 11, false)));
    EXPECT_FALSE(eisen::matches_euclid_euler_form(eisen::construct_candidate(tau, 13, false)));
    EXPECT_FALSE(eisen::matches_euclid_euler_form(eisen::pow(tau, 10)));
    EXPECT_FALSE(eisen::matches_euclid_euler_form(EInt(7)));
    EXPECT_FALSE(eisen::matches_euclid_euler_form(EInt(0)));
}
