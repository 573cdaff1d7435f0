#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "schur/automorphic.hpp"
#include "schur/constructions.hpp"
#include "schur/formulas.hpp"
#include "schur/number_theory.hpp"
#include "schur/oracle.hpp"

using namespace schur;

namespace {

// Test-only oracle: every subset of the unit group containing 1 and closed
// under multiplication is a subgroup. Exponential in phi(n).
std::size_t subgroup_count_by_subsets(int n) {
    const auto units = unit_group(n).units;
    const std::size_t m = units.size();
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        std::set<int> members;
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) members.insert(units[i]);
        }
        if (!members.count(1 % n)) continue;
        bool closed = true;
        for (int a : members) {
            for (int b : members) closed = closed && members.count(static_cast<int>((1LL * a * b) % n));
        }
        if (closed) ++count;
    }
    return count;
}

bool has_rank_at_most_two(int n) {
    for (const auto& c : aut_primary_decomposition(n)) {
        if (c.exponents.size() > 2) return false;
    }
    return true;
}

} // namespace

TEST(UnitGroup, Examples) {
    EXPECT_EQ(unit_group(7).units, (std::vector<int>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(unit_group(12).units, (std::vector<int>{1, 5, 7, 11}));
    EXPECT_EQ(unit_group(21).units.size(), 12U);
    EXPECT_EQ(unit_group(1).units.size(), 1U);
}

TEST(AllSubgroups, Examples) {
    EXPECT_EQ(all_subgroups(unit_group(21)).size(), 10U);
    EXPECT_EQ(all_subgroups(unit_group(12)).size(), 5U);
    for (int n : {1, 2, 9, 20, 63}) {
        const auto group = unit_group(n);
        const auto subs = all_subgroups(group);
        EXPECT_EQ(subs.front().elements, std::vector<int>{1 % n});
        EXPECT_EQ(subs.back().elements, group.units);
    }
}

TEST(AllSubgroups, MatchesSubsetOracle) {
    for (int n = 1; n <= 64; ++n) {
        if (euler_phi(static_cast<std::uint64_t>(n)) > 14) continue;
        EXPECT_EQ(all_subgroups(unit_group(n)).size(), subgroup_count_by_subsets(n)) << n;
    }
}

TEST(AllSubgroups, DeterministicOrderAndClosed) {
    const auto subs = all_subgroups(unit_group(60));
    for (std::size_t i = 1; i < subs.size(); ++i) {
        const auto& a = subs[i - 1].elements;
        const auto& b = subs[i].elements;
        EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
    }
    for (const auto& h : subs) {
        for (int a : h.elements) {
            for (int b : h.elements) EXPECT_TRUE(h.contains(a * b % 60));
        }
    }
}

TEST(OrbitPartition, Examples) {
    EXPECT_EQ(orbit_partition(generated_subgroup(9, {1})), discrete_ring(9));
    EXPECT_EQ(orbit_partition(all_subgroups(unit_group(7)).back()), trivial_ring(7));
    EXPECT_EQ(orbit_partition(generated_subgroup(7, {6})).to_string(), "{0} {1,6} {2,5} {3,4}");
    EXPECT_THROW(generated_subgroup(8, {2}), std::invalid_argument);
}

TEST(AutomorphicRings, Examples) {
    const auto rings21 = automorphic_rings(21);
    EXPECT_EQ(rings21.size(), 10U);
    std::set<std::string> codes;
    for (const auto& p : rings21) codes.insert(canonical_encode(p));
    EXPECT_EQ(codes.size(), 10U);
    EXPECT_EQ(automorphic_rings(3).size(), 2U);
}

TEST(AutomorphicRings, ValidInjectiveAndCountedByLattice) {
    for (int n = 1; n <= 100; ++n) {
        const auto subs = all_subgroups(unit_group(n));
        std::set<std::string> codes;
        for (const auto& h : subs) {
            const auto p = orbit_partition(h);
            EXPECT_TRUE(is_schur_partition(p)) << n;
            EXPECT_EQ(p.classes().front(), GroupSubset(n, {0}));
            codes.insert(canonical_encode(p));
        }
        EXPECT_EQ(codes.size(), subs.size()) << "orbit map not injective for n=" << n;
        if (has_rank_at_most_two(n)) EXPECT_EQ(subs.size(), aut_lattice_count(n)) << n;
    }
}

TEST(AutomorphicRings, SemiprimeCountMatchesProductFormula) {
    for (int n = 6; n <= 100; ++n) {
        const auto m = classify_for_formula(static_cast<std::uint64_t>(n));
        if (m.kind != FormulaKind::semiprime) continue;
        EXPECT_EQ(all_subgroups(unit_group(n)).size(), semiprime_split(m.p, m.q).automorphic) << n;
    }
}

TEST(AutomorphicRings, LargerSubgroupGivesCoarserPartition) {
    for (int n : {12, 21, 40, 63}) {
        const auto subs = all_subgroups(unit_group(n));
        for (const auto& h : subs) {
            for (const auto& k : subs) {
                const bool contained = std::all_of(h.elements.begin(), h.elements.end(),
                                                   [&](int u) { return k.contains(u); });
                if (!contained) continue;
                const auto fine = orbit_partition(h);
                const auto coarse = orbit_partition(k);
                for (const auto& c : fine.classes()) {
                    EXPECT_TRUE(c.is_subset_of(coarse[static_cast<std::size_t>(coarse.class_of(c.min()))]));
                }
            }
        }
    }
}

TEST(LatticeCount, Examples) {
    EXPECT_EQ(lattice_count_prime_power_pair(2, 1, 1), 5U);
    EXPECT_EQ(lattice_count_prime_power_pair(2, 2, 1), 8U);
    EXPECT_EQ(lattice_count_prime_power_pair(3, 0, 1), 2U);
    EXPECT_THROW(lattice_count_prime_power_pair(4, 1, 1), std::invalid_argument);
}

TEST(LatticeCount, MatchesBruteForceUpTo1024) {
    for (std::uint64_t r : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        for (int k = 0; k <= 10; ++k) {
            for (int l = 0; l <= 10; ++l) {
                if (k + l > 10 || ipow(r, k + l) > 1024) continue;
                EXPECT_EQ(lattice_count_prime_power_pair(r, k, l), brute_force_subgroup_count(r, k, l))
                    << r << " " << k << " " << l;
            }
        }
    }
}

TEST(AutLatticeCount, Examples) {
    EXPECT_EQ(aut_lattice_count(21), 10U);
    EXPECT_EQ(aut_lattice_count(12), 5U);
    EXPECT_THROW(aut_lattice_count(24), std::domain_error);
    EXPECT_THROW(aut_lattice_count(120), std::domain_error);
}

TEST(AutLatticeCount, FourPClosedForm) {
    for (std::uint64_t p = 3; p < 1000; ++p) {
        if (!is_prime(p)) continue;
        const auto profile = FourPProfile::of(p);
        const auto k = static_cast<std::uint64_t>(profile.k);
        EXPECT_EQ(aut_lattice_count(static_cast<int>(4 * p)) * (k + 1), (3 * k + 2) * profile.x) << p;
    }
}
