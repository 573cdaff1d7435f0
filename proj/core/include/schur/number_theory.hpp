#pragma once

// Small-integer number theory by trial division. Inputs are expected to stay
// well below 10^12.

#include <cstdint>
#include <vector>

namespace schur {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization in ascending prime order; factorize(1) is empty.
/// Throws std::invalid_argument for m = 0.
std::vector<PrimePower> factorize(std::uint64_t m);

bool is_prime(std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t m);
std::uint64_t divisor_count(std::uint64_t m);
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// Largest e with 2^e | m (m > 0).
int two_adic_valuation(std::uint64_t m);

std::uint64_t ipow(std::uint64_t base, int exponent);

} // namespace schur
