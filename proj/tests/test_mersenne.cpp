#include <gtest/gtest.h>

#include "eisen/mersenne.hpp"
#include "oracles.hpp"

using eisen::EInt;
using eisen::Integer;

namespace {

Integer pow3(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

} // namespace

TEST(Mersenne, Examples) {
    const EInt tau = eisen::omega_plus_two();
    auto m2 = eisen::mersenne(tau, 2);
    EXPECT_EQ(m2.m, EInt(3, 1));
    EXPECT_EQ(m2.a_k, 7);
    EXPECT_TRUE(m2.prime_status.prime);

    EXPECT_EQ(eisen::mersenne(tau, 1).m, EInt(1));
    EXPECT_FALSE(eisen::mersenne(tau, 1).prime_status.prime);

    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 13UL, 31UL}) {
        auto r = eisen::mersenne(EInt(2), p);
        EXPECT_EQ(r.m, EInt((Integer(1) << p) - 1));
    }

    EXPECT_THROW(eisen::mersenne(EInt(7), 3), eisen::domain_error);
    EXPECT_THROW(eisen::mersenne(tau, 0), eisen::domain_error);
}

TEST(Mersenne, RecordInvariants) {
    for (const EInt& tau : {EInt(2, 1), EInt(3, 1), EInt(2), EInt(3, 2), EInt(5)}) {
        for (unsigned long k = 1; k <= 30; ++k) {
            auto r = eisen::mersenne(tau, k);
            ASSERT_EQ(r.m * (tau - EInt(1)), eisen::pow(tau, k) - EInt(1));
            ASSERT_EQ(r.a_k, r.m.norm());
        }
    }
}

TEST(MersenneClosedForm, NormExamples) {
    EXPECT_EQ(eisen::closed_form_norm(2), 7);
    EXPECT_EQ(eisen::closed_form_norm(3), 28);
    EXPECT_EQ(eisen::closed_form_norm(11), 1 + pow3(11) - pow3(6));
    EXPECT_EQ(eisen::closed_form_norm(11), 176419);
}

TEST(MersenneClosedForm, MersenneExamples) {
    EXPECT_EQ(eisen::closed_form_mersenne(2), EInt(3, 1));
    EXPECT_EQ(eisen::closed_form_mersenne(3), EInt(6, 4));
    EXPECT_EQ(eisen::closed_form_mersenne(1), EInt(1));
}

TEST(MersenneClosedForm, RowsFiveAndSevenShareTheirNormForm) {
    for (unsigned long k = 5; k <= 120; k += 12) {
        EXPECT_EQ(eisen::closed_form_norm(k), 1 + pow3(k) + pow3((k + 1) / 2));
        EXPECT_EQ(eisen::closed_form_norm(k + 2), 1 + pow3(k + 2) + pow3((k + 3) / 2));
    }
}

TEST(MersenneClosedForm, RegressionAgainstDirectComputation) {
    const EInt tau = eisen::omega_plus_two();
    for (unsigned long k = 1; k <= 120; ++k) {
        const EInt m = eisen::mersenne_number(tau, k);
        ASSERT_EQ(m, eisen::closed_form_mersenne(k)) << k;
        ASSERT_EQ(m.norm(), eisen::closed_form_norm(k)) << k;
    }
}

TEST(MersenneClosedForm, NormVersusPowerOfThree) {
    for (unsigned long k = 1; k <= 120; ++k) {
        const unsigned long r = k % 12;
        if (r >= 3 && r <= 9) {
            EXPECT_GT(eisen::closed_form_norm(k), pow3(k)) << k;
        } else if (k > 1) {
            EXPECT_LT(eisen::closed_form_norm(k), pow3(k)) << k;
        }
    }
}

TEST(MersenneSextant, Examples) {
    EXPECT_EQ(eisen::mersenne_sextant_class(13).index, 6);
    EXPECT_EQ(eisen::mersenne_sextant_class(11).index, 5);
    EXPECT_EQ(eisen::mersenne_sextant_class(2).index, 1);
    EXPECT_THROW(eisen::mersenne_sextant_class(1), eisen::domain_error);
    for (unsigned long k = 13; k <= 240; k += 12) EXPECT_EQ(eisen::mersenne_sextant_class(k).index, 6);
    for (unsigned long k = 11; k <= 240; k += 12) EXPECT_EQ(eisen::mersenne_sextant_class(k).index, 5);
}

TEST(MersenneSextant, CanonicalAssociateIsTauPowerMinusOne) {
    const EInt tau = eisen::omega_plus_two();
    for (unsigned long k = 13; k <= 120; k += 12) {
        const EInt m = eisen::mersenne_number(tau, k);
        EXPECT_EQ(eisen::canonical(m), m * EInt(1, 1));
        EXPECT_EQ(eisen::canonical(m), eisen::pow(tau, k) - EInt(1));
    }
    for (unsigned long k = 11; k <= 120; k += 12) {
        const EInt mc = eisen::mersenne_number(tau, k).conj();
        EXPECT_EQ(eisen::sextant(mc).index, 2);
        EXPECT_EQ(eisen::canonical(mc), -(mc * EInt::omega()));
        EXPECT_EQ(eisen::canonical(mc), eisen::pow(tau, k).conj() - EInt(1));
    }
}

TEST(MersennePrimeIndex, CompositeIndexFactorIdentity) {
    const EInt tau = eisen::omega_plus_two();
    for (unsigned long n = 2; n <= 20; ++n) {
        for (unsigned long m = 2; n * m <= 40; ++m) {
            auto [left, right] = eisen::composite_index_factors(tau, n, m);
            ASSERT_EQ(left * right, eisen::mersenne_number(tau, n * m));
            ASSERT_FALSE(eisen::is_unit(left));
            ASSERT_FALSE(eisen::is_unit(right));
        }
    }
}

TEST(MersennePrimeIndex, Sweep) {
    auto small = eisen::check_mersenne_prime_indices(4);
    EXPECT_TRUE(small.counterexamples.empty());
    EXPECT_FALSE(eisen::mersenne(eisen::omega_plus_two(), 4).prime_status.prime);

    auto r = eisen::check_mersenne_prime_indices(60);
    EXPECT_TRUE(r.counterexamples.empty());
    std::vector<unsigned long> ks;
    for (const auto& e : r.prime_indices) ks.push_back(e.k);
    EXPECT_EQ(ks, (std::vector<unsigned long>{2, 5, 7, 11, 17, 19}));

    EXPECT_THROW(eisen::check_mersenne_prime_indices(1), eisen::domain_error);
}
