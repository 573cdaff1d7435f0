#pragma once

// The unit group (Z/nZ)^x, which acts on Z_n as Aut(Z_n), its subgroup
// lattice, and the automorphic Schur rings obtained as orbit partitions.

#include <cstdint>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

struct UnitGroup {
    int n = 1;
    /// Residues in [0, n) coprime to n, ascending. For n = 1 this is {0}.
    std::vector<int> units;
};

/// A subgroup of the unit group, elements ascending.
struct UnitSubgroup {
    int n = 1;
    std::vector<int> elements;

    bool contains(int u) const;
    std::size_t order() const { return elements.size(); }
    bool operator==(const UnitSubgroup&) const = default;
};

UnitGroup unit_group(int n);

/// Smallest subgroup of (Z/nZ)^x containing `generators`.
UnitSubgroup generated_subgroup(int n, const std::vector<int>& generators);

/// Every subgroup exactly once, ordered by size then element list.
/// Built from the cyclic subgroups by closing under pairwise joins.
std::vector<UnitSubgroup> all_subgroups(const UnitGroup& group);

/// Orbits of Z_n under x -> u x, u in H.
SchurPartition orbit_partition(const UnitSubgroup& h);

/// orbit_partition of every subgroup, in all_subgroups order.
std::vector<SchurPartition> automorphic_rings(int n);

/// Number of subgroups of Z_{r^k} x Z_{r^l}:
/// sum_{j=0}^{min(k,l)} phi(r^j)(k-j+1)(l-j+1). Throws for non-prime r.
std::uint64_t lattice_count_prime_power_pair(std::uint64_t r, int k, int l);

/// Invariant factors of Aut(Z_n) split by prime: for each prime r, the
/// exponents of the cyclic r-groups whose product is the r-primary part.
struct PrimaryComponent {
    std::uint64_t prime = 0;
    std::vector<int> exponents;
};
std::vector<PrimaryComponent> aut_primary_decomposition(int n);

/// Number of subgroups of Aut(Z_n). Throws std::domain_error if some primary
/// component has rank above 2.
std::uint64_t aut_lattice_count(int n);

} // namespace schur
