#include "schur/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

std::vector<PrimePower> factorize(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("factorize: 0 has no factorization");
    std::vector<PrimePower> out;
    for (std::uint64_t r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        PrimePower pp{r, 0};
        while (m % r == 0) {
            m /= r;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t r = 2; r * r <= m; ++r) {
        if (m % r == 0) return false;
    }
    return true;
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t phi = 1;
    for (const auto& [r, e] : factorize(m)) phi *= (r - 1) * ipow(r, e - 1);
    return phi;
}

std::uint64_t divisor_count(std::uint64_t m) {
    std::uint64_t count = 1;
    for (const auto& pp : factorize(m)) count *= static_cast<std::uint64_t>(pp.exponent + 1);
    return count;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [r, e] : factorize(m)) {
        const std::size_t base = out.size();
        std::uint64_t power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= r;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int two_adic_valuation(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("two_adic_valuation: 0");
    int e = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    return e;
}

std::uint64_t ipow(std::uint64_t base, int exponent) {
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace schur
