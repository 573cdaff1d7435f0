#include "schur/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "schur/automorphic.hpp"
#include "schur/number_theory.hpp"

namespace schur {

namespace {

void require_prime(std::uint64_t p, const char* what) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num % den != 0) {
        throw std::logic_error("formula divisibility violated: " + std::to_string(num) + " / " + std::to_string(den));
    }
    return num / den;
}

} // namespace

SemiprimeProfile SemiprimeProfile::of(std::uint64_t p, std::uint64_t q) {
    require_prime(p, "SemiprimeProfile");
    require_prime(q, "SemiprimeProfile");
    if (p == q) throw std::invalid_argument("SemiprimeProfile: p and q must be distinct");
    std::map<std::uint64_t, Factor> merged;
    for (const auto& [r, e] : factorize(p - 1)) merged[r] = {r, e, 0};
    for (const auto& [r, e] : factorize(q - 1)) {
        auto& f = merged[r];
        f.prime = r;
        f.l = e;
    }
    SemiprimeProfile out{p, q, {}};
    for (const auto& [r, f] : merged) out.factors.push_back(f);
    return out;
}

FourPProfile FourPProfile::of(std::uint64_t p) {
    require_prime(p, "FourPProfile");
    if (p == 2) throw std::invalid_argument("FourPProfile: p must be odd");
    FourPProfile out;
    out.p = p;
    out.k = two_adic_valuation(p - 1);
    out.a = (p - 1) >> out.k;
    out.x = divisor_count(p - 1);
    return out;
}

std::uint64_t omega_prime(std::uint64_t p) {
    require_prime(p, "omega_prime");
    return divisor_count(p - 1);
}

std::uint64_t omega_pq(std::uint64_t p, std::uint64_t q) { return semiprime_split(p, q).total(); }

std::uint64_t omega_2p(std::uint64_t p) {
    require_prime(p, "omega_2p");
    if (p == 2) throw std::invalid_argument("omega_2p: p must be odd");
    return 3 * divisor_count(p - 1) + 1;
}

std::uint64_t omega_3p(std::uint64_t p) {
    require_prime(p, "omega_3p");
    if (p == 3) throw std::invalid_argument("omega_3p: p must differ from 3");
    const auto k = static_cast<std::uint64_t>(two_adic_valuation(p - 1));
    const auto x = divisor_count(p - 1);
    return exact_div((7 * k + 6) * x, k + 1) + 1;
}

std::uint64_t omega_5p(std::uint64_t p) {
    require_prime(p, "omega_5p");
    // For p = 2 the 2-part of p - 1 is trivial and the collapsed sum no longer
    // has the 13k + 7 shape.
    if (p == 5 || p == 2) throw std::invalid_argument("omega_5p: p must be odd and differ from 5");
    const auto k = static_cast<std::uint64_t>(two_adic_valuation(p - 1));
    const auto x = divisor_count(p - 1);
    return exact_div((13 * k + 7) * x, k + 1) + 1;
}

OddPartFormEvaluation omega_pq_cor2_diagnostic(std::uint64_t p, std::uint64_t q) {
    require_prime(p, "omega_pq_cor2");
    require_prime(q, "omega_pq_cor2");
    if (p == q) throw std::invalid_argument("omega_pq_cor2: p and q must be distinct");
    const int k = two_adic_valuation(p - 1);
    const int l = two_adic_valuation(q - 1);
    const std::uint64_t a = (p - 1) >> k;
    const std::uint64_t b = (q - 1) >> l;
    if (std::gcd(a, b) != 1) throw std::invalid_argument("omega_pq_cor2: odd parts of p-1 and q-1 share a factor");
    const auto x = divisor_count(p - 1);
    const auto y = divisor_count(q - 1);
    const auto kl = static_cast<std::uint64_t>((k + 1) * (l + 1));
    const auto scale = exact_div(x * y, kl);

    std::uint64_t sum_phi = 0;
    std::uint64_t sum_printed = 0;
    for (int j = 1; j <= std::min(k, l); ++j) {
        const auto weight = static_cast<std::uint64_t>((k - j + 1) * (l - j + 1));
        sum_phi += euler_phi(ipow(2, j)) * weight;
        sum_printed += ipow(2, j) * weight;
    }
    return {(3 * kl + sum_phi) * scale + 1, (3 * kl + sum_printed) * scale + 1};
}

std::uint64_t omega_pq_cor2(std::uint64_t p, std::uint64_t q) { return omega_pq_cor2_diagnostic(p, q).corrected; }

std::uint64_t omega_4p(std::uint64_t p) {
    const auto profile = FourPProfile::of(p);
    const auto k = static_cast<std::uint64_t>(profile.k);
    return exact_div((15 * k + 14) * profile.x, k + 1) + 3;
}

SemiprimeSplit semiprime_split(std::uint64_t p, std::uint64_t q) {
    const auto profile = SemiprimeProfile::of(p, q);
    SemiprimeSplit out;
    out.automorphic = 1;
    std::uint64_t wedges = 1;
    for (const auto& f : profile.factors) {
        out.automorphic *= lattice_count_prime_power_pair(f.prime, f.k, f.l);
        wedges *= static_cast<std::uint64_t>((f.k + 1) * (f.l + 1));
    }
    out.wedge = 2 * wedges;
    return out;
}

FourPCensus fourp_census(std::uint64_t p) {
    const auto profile = FourPProfile::of(p);
    const auto k = static_cast<std::uint64_t>(profile.k);
    const auto x = profile.x;
    FourPCensus out;
    out.order_2 = 3 * x + 1;
    out.order_p = 3 * x;
    out.order_4 = 3 * x;
    out.order_2p = 3 * x + 1;
    out.indecomposable = exact_div((3 * k + 2) * x, k + 1) + 1;
    return out;
}

FormulaMatch classify_for_formula(std::uint64_t n) {
    if (n < 2) return {};
    if (is_prime(n)) return {FormulaKind::prime, n, 0};
    const auto f = factorize(n);
    if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) {
        return {FormulaKind::semiprime, f[0].prime, f[1].prime};
    }
    if (n % 4 == 0 && n / 4 > 2 && is_prime(n / 4)) return {FormulaKind::four_p, n / 4, 0};
    return {};
}

std::uint64_t omega_formula(std::uint64_t n) {
    const auto m = classify_for_formula(n);
    switch (m.kind) {
    case FormulaKind::prime:
        return omega_prime(m.p);
    case FormulaKind::semiprime:
        return omega_pq(m.p, m.q);
    case FormulaKind::four_p:
        return omega_4p(m.p);
    case FormulaKind::none:
        break;
    }
    throw std::invalid_argument("no closed form for n = " + std::to_string(n) +
                                " (needs a prime, a product of two distinct primes, or 4p with p an odd prime)");
}

} // namespace schur
