#include <gtest/gtest.h>

#include <numeric>

#include "schur/formulas.hpp"
#include "schur/number_theory.hpp"

using namespace schur;

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 2; m <= limit; ++m) {
        if (is_prime(m)) out.push_back(m);
    }
    return out;
}

bool is_safe_prime(std::uint64_t p) { return p > 5 && is_prime(p) && is_prime((p - 1) / 2); }

} // namespace

TEST(NumberTheory, Examples) {
    EXPECT_EQ(euler_phi(8), 4U);
    EXPECT_EQ(euler_phi(1), 1U);
    EXPECT_EQ(divisor_count(12), 6U);
    EXPECT_EQ(divisor_count(1), 1U);
    EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(factorize(360), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(euler_phi(0), std::invalid_argument);
    EXPECT_EQ(two_adic_valuation(48), 4);
}

TEST(NumberTheory, PhiAndDivisorCountAgreeWithDefinition) {
    for (std::uint64_t m = 1; m <= 500; ++m) {
        std::uint64_t coprime = 0;
        std::uint64_t divs = 0;
        for (std::uint64_t x = 1; x <= m; ++x) {
            if (std::gcd(x, m) == 1) ++coprime;
            if (m % x == 0) ++divs;
        }
        EXPECT_EQ(euler_phi(m), coprime) << m;
        EXPECT_EQ(divisor_count(m), divs) << m;
    }
}

TEST(OmegaPrime, Examples) {
    EXPECT_EQ(omega_prime(3), 2U);
    EXPECT_EQ(omega_prime(7), 4U);
    EXPECT_EQ(omega_prime(2), 1U);
    EXPECT_THROW(omega_prime(9), std::invalid_argument);
}

TEST(OmegaPq, Examples) {
    EXPECT_EQ(omega_pq(3, 7), 27U);
    EXPECT_EQ(omega_pq(7, 13), 97U);
    EXPECT_EQ(omega_pq(5, 13), 67U);
    EXPECT_EQ(omega_pq(13, 5), 67U);
    EXPECT_THROW(omega_pq(7, 7), std::invalid_argument);
    EXPECT_THROW(omega_pq(4, 7), std::invalid_argument);
}

TEST(OmegaPq, ProfileSharesPrimeList) {
    const auto profile = SemiprimeProfile::of(7, 13);
    ASSERT_EQ(profile.factors.size(), 2U);
    EXPECT_EQ(profile.factors[0].prime, 2U);
    EXPECT_EQ(profile.factors[0].k, 1);
    EXPECT_EQ(profile.factors[0].l, 2);
    EXPECT_EQ(profile.factors[1].prime, 3U);
    EXPECT_EQ(profile.factors[1].k, 1);
    EXPECT_EQ(profile.factors[1].l, 1);
}

TEST(Omega2p, Examples) {
    EXPECT_EQ(omega_2p(5), 10U);
    EXPECT_EQ(omega_2p(7), 13U);
    EXPECT_THROW(omega_2p(2), std::invalid_argument);
    for (auto p : primes_up_to(200)) {
        if (is_safe_prime(p)) EXPECT_EQ(omega_2p(p), 13U) << p;
    }
}

TEST(Omega3p5p, Examples) {
    EXPECT_EQ(omega_3p(7), 27U);
    EXPECT_EQ(omega_5p(13), 67U);
    EXPECT_EQ(omega_5p(19), 61U);
    EXPECT_THROW(omega_3p(3), std::invalid_argument);
    EXPECT_THROW(omega_5p(5), std::invalid_argument);
    EXPECT_THROW(omega_5p(2), std::invalid_argument);
}

TEST(Omega3p5p, CongruentThreeModFourShortcuts) {
    for (auto p : primes_up_to(500)) {
        if (p % 4 != 3) continue;
        const auto x = divisor_count(p - 1);
        if (p != 3) EXPECT_EQ(2 * (omega_3p(p) - 1), 13 * x) << p;
        if (p != 5) EXPECT_EQ(omega_5p(p), 10 * x + 1) << p;
    }
}

TEST(OmegaPqOddPartForm, Examples) {
    const auto d = omega_pq_cor2_diagnostic(5, 13);
    EXPECT_EQ(d.corrected, 67U);
    EXPECT_EQ(d.as_printed, 79U);
    EXPECT_EQ(omega_pq_cor2(3, 7), 27U);
    EXPECT_EQ(omega_pq_cor2(7, 23), 53U);
    EXPECT_EQ(omega_pq_cor2(11, 47), 53U);
    // 7 - 1 = 2*3 and 13 - 1 = 4*3 share the odd factor 3.
    EXPECT_THROW(omega_pq_cor2(7, 13), std::invalid_argument);
}

TEST(Omega4p, Examples) {
    EXPECT_EQ(omega_4p(3), 32U);
    EXPECT_EQ(omega_4p(5), 47U);
    EXPECT_EQ(omega_4p(19), 90U);
    EXPECT_THROW(omega_4p(2), std::invalid_argument);
    EXPECT_THROW(omega_4p(15), std::invalid_argument);
}

TEST(Omega4p, FermatPrimes) {
    for (int k : {1, 2, 4}) {
        const std::uint64_t p = (std::uint64_t{1} << k) + 1;
        EXPECT_EQ(omega_4p(p), static_cast<std::uint64_t>(15 * k + 17)) << p;
    }
}

TEST(Formulas, SafePrimeConstants) {
    const auto primes = primes_up_to(200);
    for (auto p : primes) {
        if (!is_safe_prime(p)) continue;
        EXPECT_EQ(omega_3p(p), 27U) << p;
        EXPECT_EQ(omega_5p(p), 41U) << p;
        EXPECT_EQ(omega_4p(p), 61U) << p;
        for (auto q : primes) {
            if (q != p && is_safe_prime(q)) EXPECT_EQ(omega_pq(p, q), 53U) << p << "," << q;
        }
    }
}

TEST(Formulas, SpecializationCoherence) {
    const auto primes = primes_up_to(500);
    for (auto p : primes) {
        for (auto q : primes) {
            if (p >= q || p * q > 1000) continue;
            const auto value = omega_pq(p, q);
            if (p == 2) EXPECT_EQ(omega_2p(q), value) << q;
            if (p == 3) EXPECT_EQ(omega_3p(q), value) << q;
            if (p == 5) EXPECT_EQ(omega_5p(q), value) << q;
            if (q == 3) EXPECT_EQ(omega_3p(p), value) << p;
            if (q == 5 && p != 2) EXPECT_EQ(omega_5p(p), value) << p;
            const auto a = (p - 1) >> two_adic_valuation(p - 1);
            const auto b = (q - 1) >> two_adic_valuation(q - 1);
            if (std::gcd(a, b) == 1) EXPECT_EQ(omega_pq_cor2(p, q), value) << p << "," << q;
        }
    }
}

TEST(Formulas, SplitsSumToTotals) {
    const auto split = semiprime_split(3, 7);
    EXPECT_EQ(split.automorphic, 10U);
    EXPECT_EQ(split.wedge, 16U);
    EXPECT_EQ(split.trivial, 1U);

    const auto census = fourp_census(3);
    EXPECT_EQ(census.order_2, 7U);
    EXPECT_EQ(census.order_p, 6U);
    EXPECT_EQ(census.order_4, 6U);
    EXPECT_EQ(census.order_2p, 7U);
    EXPECT_EQ(census.indecomposable, 6U);
    for (auto p : primes_up_to(300)) {
        if (p == 2) continue;
        EXPECT_EQ(fourp_census(p).total(), omega_4p(p)) << p;
    }
}

TEST(Formulas, ClassifyForFormula) {
    EXPECT_EQ(classify_for_formula(7).kind, FormulaKind::prime);
    EXPECT_EQ(classify_for_formula(21).kind, FormulaKind::semiprime);
    EXPECT_EQ(classify_for_formula(28).kind, FormulaKind::four_p);
    EXPECT_EQ(classify_for_formula(8).kind, FormulaKind::none);
    EXPECT_EQ(classify_for_formula(1).kind, FormulaKind::none);
    EXPECT_THROW(omega_formula(9), std::invalid_argument);
}
