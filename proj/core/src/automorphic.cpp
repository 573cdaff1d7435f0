#include "schur/automorphic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "schur/number_theory.hpp"

namespace schur {

namespace {

struct SubsetHash {
    std::size_t operator()(const GroupSubset& s) const { return s.hash(); }
};

// Closure of {1} under multiplication by the generators, as a subset of Z_n.
GroupSubset closure(int n, const std::vector<int>& generators) {
    GroupSubset members(n);
    const int one = 1 % n;
    members.insert(one);
    std::vector<int> frontier{one};
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (int g : generators) {
            const int y = static_cast<int>((static_cast<long long>(x) * g) % n);
            if (!members.contains(y)) {
                members.insert(y);
                frontier.push_back(y);
            }
        }
    }
    return members;
}

} // namespace

bool UnitSubgroup::contains(int u) const { return std::binary_search(elements.begin(), elements.end(), u); }

UnitGroup unit_group(int n) {
    require_modulus(n);
    UnitGroup g{n, {}};
    if (n == 1) {
        g.units = {0};
        return g;
    }
    for (int x = 1; x < n; ++x) {
        if (std::gcd(x, n) == 1) g.units.push_back(x);
    }
    return g;
}

UnitSubgroup generated_subgroup(int n, const std::vector<int>& generators) {
    require_modulus(n);
    for (int g : generators) {
        if (g < 0 || g >= n || std::gcd(g, n) != 1) {
            if (!(n == 1 && g == 0)) throw std::invalid_argument("generated_subgroup: " + std::to_string(g) + " is not a unit mod " + std::to_string(n));
        }
    }
    return {n, closure(n, generators).elements()};
}

std::vector<UnitSubgroup> all_subgroups(const UnitGroup& group) {
    const int n = group.n;
    // Each subgroup is kept with a generating set so joins are cheap to form.
    struct Entry {
        GroupSubset members;
        std::vector<int> generators;
    };
    std::vector<Entry> entries;
    std::unordered_set<GroupSubset, SubsetHash> seen;

    auto add = [&](std::vector<int> gens) {
        auto members = closure(n, gens);
        if (seen.insert(members).second) entries.push_back({std::move(members), std::move(gens)});
    };

    for (int u : group.units) add({u});

    std::size_t done = 0;
    while (done < entries.size()) {
        const std::size_t end = entries.size();
        for (std::size_t i = 0; i < end; ++i) {
            for (std::size_t j = std::max(i + 1, done); j < end; ++j) {
                if (entries[i].members.is_subset_of(entries[j].members) ||
                    entries[j].members.is_subset_of(entries[i].members)) {
                    continue;
                }
                auto gens = entries[i].generators;
                gens.insert(gens.end(), entries[j].generators.begin(), entries[j].generators.end());
                add(std::move(gens));
            }
        }
        done = end;
    }

    std::vector<UnitSubgroup> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back({n, e.members.elements()});
    std::sort(out.begin(), out.end(), [](const UnitSubgroup& a, const UnitSubgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

SchurPartition orbit_partition(const UnitSubgroup& h) {
    const int n = h.n;
    GroupSubset assigned(n);
    std::vector<GroupSubset> orbits;
    for (int x = 0; x < n; ++x) {
        if (assigned.contains(x)) continue;
        GroupSubset orbit(n);
        for (int u : h.elements) orbit.insert(static_cast<int>((static_cast<long long>(u) * x) % n));
        assigned |= orbit;
        orbits.push_back(std::move(orbit));
    }
    return SchurPartition::from_classes(n, std::move(orbits));
}

std::vector<SchurPartition> automorphic_rings(int n) {
    std::vector<SchurPartition> out;
    for (const auto& h : all_subgroups(unit_group(n))) out.push_back(orbit_partition(h));
    return out;
}

std::uint64_t lattice_count_prime_power_pair(std::uint64_t r, int k, int l) {
    if (!is_prime(r)) throw std::invalid_argument("lattice_count_prime_power_pair: " + std::to_string(r) + " is not prime");
    if (k < 0 || l < 0) throw std::invalid_argument("lattice_count_prime_power_pair: negative exponent");
    std::uint64_t total = 0;
    for (int j = 0; j <= std::min(k, l); ++j) {
        total += euler_phi(ipow(r, j)) * static_cast<std::uint64_t>((k - j + 1) * (l - j + 1));
    }
    return total;
}

std::vector<PrimaryComponent> aut_primary_decomposition(int n) {
    require_modulus(n);
    // Orders of a cyclic decomposition of Aut(Z_n) = prod Aut(Z_{p^e}).
    std::vector<std::uint64_t> cyclic_orders;
    for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(n))) {
        if (p == 2) {
            if (e == 2) cyclic_orders.push_back(2);
            if (e >= 3) {
                cyclic_orders.push_back(2);
                cyclic_orders.push_back(ipow(2, e - 2));
            }
        } else {
            cyclic_orders.push_back((p - 1) * ipow(p, e - 1));
        }
    }
    std::map<std::uint64_t, std::vector<int>> by_prime;
    for (auto order : cyclic_orders) {
        for (const auto& [r, e] : factorize(order)) by_prime[r].push_back(e);
    }
    std::vector<PrimaryComponent> out;
    for (auto& [r, exps] : by_prime) {
        std::sort(exps.begin(), exps.end());
        out.push_back({r, exps});
    }
    return out;
}

std::uint64_t aut_lattice_count(int n) {
    std::uint64_t total = 1;
    for (const auto& comp : aut_primary_decomposition(n)) {
        if (comp.exponents.size() > 2) {
            throw std::domain_error("aut_lattice_count: the " + std::to_string(comp.prime) +
                                    "-primary part of Aut(Z_" + std::to_string(n) + ") has rank above 2");
        }
        const int k = comp.exponents.size() == 2 ? comp.exponents[0] : 0;
        const int l = comp.exponents.back();
        total *= lattice_count_prime_power_pair(comp.prime, k, l);
    }
    return total;
}

} // namespace schur
