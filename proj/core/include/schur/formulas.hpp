#pragma once

// Closed-form counts of Schur rings over Z_p, Z_pq and Z_4p.
//
// All functions throw std::invalid_argument when their arguments fall outside
// the domain the formula was proven for.

#include <cstdint>
#include <vector>

namespace schur {

/// p - 1 = prod r_i^{k_i} and q - 1 = prod r_i^{l_i} over a shared prime list.
/// Exponents may be zero for primes dividing only one of p - 1, q - 1.
struct SemiprimeProfile {
    struct Factor {
        std::uint64_t prime = 0;
        int k = 0;
        int l = 0;
    };
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::vector<Factor> factors;

    static SemiprimeProfile of(std::uint64_t p, std::uint64_t q);
};

/// p = 2^k a + 1 with a odd; x = number of divisors of p - 1.
struct FourPProfile {
    std::uint64_t p = 0;
    int k = 0;
    std::uint64_t a = 0;
    std::uint64_t x = 0;

    static FourPProfile of(std::uint64_t p);
};

/// Number of divisors of p - 1.
std::uint64_t omega_prime(std::uint64_t p);

std::uint64_t omega_pq(std::uint64_t p, std::uint64_t q);

/// 3x + 1 for odd p.
std::uint64_t omega_2p(std::uint64_t p);

/// ((7k+6)/(k+1)) x + 1, p != 3.
std::uint64_t omega_3p(std::uint64_t p);

/// ((13k+7)/(k+1)) x + 1, p odd and p != 5.
std::uint64_t omega_5p(std::uint64_t p);

/// Both readings of the 2-adic specialization of omega_pq.
///
/// The summand coefficient for 2^j must be phi(2^j) = 2^{j-1} to agree with
/// omega_pq; `as_printed` uses 2^j instead and is kept for diagnostics only.
struct OddPartFormEvaluation {
    std::uint64_t corrected = 0;
    std::uint64_t as_printed = 0;
};

/// Requires p = 2^k a + 1, q = 2^l b + 1 with a, b odd and gcd(a, b) = 1.
OddPartFormEvaluation omega_pq_cor2_diagnostic(std::uint64_t p, std::uint64_t q);
std::uint64_t omega_pq_cor2(std::uint64_t p, std::uint64_t q);

/// ((15k+14)/(k+1)) x + 3 for odd prime p.
std::uint64_t omega_4p(std::uint64_t p);

/// Split of Omega(pq) by family: automorphic rings (one per subgroup of
/// Aut(Z_pq)), non-automorphic wedge products and the trivial ring.
struct SemiprimeSplit {
    std::uint64_t automorphic = 0;
    std::uint64_t wedge = 0;
    std::uint64_t trivial = 1;
    std::uint64_t total() const { return automorphic + wedge + trivial; }
};
SemiprimeSplit semiprime_split(std::uint64_t p, std::uint64_t q);

/// Rings over Z_4p grouped by the order of their wedge core.
struct FourPCensus {
    std::uint64_t order_2 = 0;        // 3x + 1
    std::uint64_t order_p = 0;        // 3x
    std::uint64_t order_4 = 0;        // 3x
    std::uint64_t order_2p = 0;       // 3x + 1
    std::uint64_t indecomposable = 0; // 1 + |L(Aut(Z_4p))|
    std::uint64_t total() const { return order_2 + order_p + order_4 + order_2p + indecomposable; }
};
FourPCensus fourp_census(std::uint64_t p);

/// Which closed form applies to n, if any.
enum class FormulaKind { none, prime, semiprime, four_p };

struct FormulaMatch {
    FormulaKind kind = FormulaKind::none;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

FormulaMatch classify_for_formula(std::uint64_t n);

/// Omega(n) from whichever closed form applies; throws when none does.
std::uint64_t omega_formula(std::uint64_t n);

} // namespace schur
