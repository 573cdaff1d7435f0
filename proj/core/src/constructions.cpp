#include "schur/constructions.hpp"

#include <cassert>
#include <numeric>
#include <string>

namespace schur {

SchurPartition trivial_ring(int n) {
    require_modulus(n);
    std::vector<GroupSubset> classes{GroupSubset(n, {0})};
    if (n > 1) classes.push_back(GroupSubset::full(n) - classes.front());
    return SchurPartition::from_classes(n, std::move(classes));
}

SchurPartition discrete_ring(int n) {
    require_modulus(n);
    std::vector<GroupSubset> classes;
    for (int x = 0; x < n; ++x) classes.push_back(GroupSubset(n, {x}));
    return SchurPartition::from_classes(n, std::move(classes));
}

SchurPartition direct_product(const SchurPartition& s, const SchurPartition& t) {
    const int h = s.modulus();
    const int k = t.modulus();
    if (std::gcd(h, k) != 1) {
        throw std::invalid_argument("direct_product: orders " + std::to_string(h) + " and " + std::to_string(k) +
                                    " are not coprime");
    }
    const long long n = static_cast<long long>(h) * k;
    if (n > kMaxModulus) throw std::invalid_argument("direct_product: product order too large");
    std::vector<GroupSubset> classes;
    for (const auto& c : s.classes()) {
        for (const auto& d : t.classes()) {
            GroupSubset cls(static_cast<int>(n));
            c.for_each([&](int a) {
                d.for_each([&](int b) { cls.insert(static_cast<int>((static_cast<long long>(k) * a + static_cast<long long>(h) * b) % n)); });
            });
            classes.push_back(std::move(cls));
        }
    }
    return SchurPartition::from_classes(static_cast<int>(n), std::move(classes));
}

namespace {

void check_section(const SchurPartition& s, const SchurPartition& t, Section u, int n) {
    require_modulus(n);
    if (!u.is_valid(n)) {
        throw std::invalid_argument("wedge: [" + std::to_string(u.k) + "," + std::to_string(u.h) +
                                    "] is not a section of Z_" + std::to_string(n));
    }
    if (s.modulus() != u.h) throw std::invalid_argument("wedge: left factor must live on Z_h");
    if (t.modulus() != n / u.k) throw std::invalid_argument("wedge: right factor must live on Z_{n/k}");
}

} // namespace

bool wedge_compatible(const SchurPartition& s, const SchurPartition& t, Section u, int n) {
    check_section(s, t, u, n);
    const int hk = u.h / u.k;
    if (!is_s_subgroup(s, u.k) || !is_s_subgroup(t, hk)) return false;
    return quotient(s, u.k) == restrict(t, hk);
}

SchurPartition wedge_product(const SchurPartition& s, const SchurPartition& t, Section u, int n) {
    if (!wedge_compatible(s, t, u, n)) {
        throw WedgeIncompatible("wedge: S/K differs from T restricted to H/K for section [" + std::to_string(u.k) +
                                "," + std::to_string(u.h) + "]");
    }
    const int embed = n / u.h;
    const int m = n / u.k;
    std::vector<GroupSubset> classes;
    for (const auto& c : s.classes()) {
        GroupSubset cls(n);
        c.for_each([&](int y) { cls.insert(y * embed); });
        classes.push_back(std::move(cls));
    }
    // H/K inside Z_m is the set of multiples of n/h.
    for (const auto& d : t.classes()) {
        if (d.min() % embed == 0) continue;
        GroupSubset cls(n);
        d.for_each([&](int z) {
            for (int x = z; x < n; x += m) cls.insert(x);
        });
        classes.push_back(std::move(cls));
    }
    auto out = SchurPartition::from_classes(n, std::move(classes));
    assert(out == wedge_by_common_refinement(s, t, u, n));
    return out;
}

SchurPartition wedge_by_common_refinement(const SchurPartition& s, const SchurPartition& t, Section u, int n) {
    check_section(s, t, u, n);
    const int embed = n / u.h;
    const int m = n / u.k;
    std::vector<GroupSubset> left;
    GroupSubset h_sub(n);
    for (const auto& c : s.classes()) {
        GroupSubset cls(n);
        c.for_each([&](int y) { cls.insert(y * embed); });
        h_sub |= cls;
        left.push_back(std::move(cls));
    }
    auto rest = GroupSubset::full(n) - h_sub;
    if (!rest.empty()) left.push_back(std::move(rest));

    std::vector<GroupSubset> classes;
    for (const auto& d : t.classes()) {
        GroupSubset pulled(n);
        d.for_each([&](int z) {
            for (int x = z; x < n; x += m) pulled.insert(x);
        });
        for (const auto& a : left) {
            auto piece = a & pulled;
            if (!piece.empty()) classes.push_back(std::move(piece));
        }
    }
    return SchurPartition::from_classes(n, std::move(classes));
}

std::optional<Section> is_wedge_decomposable(const SchurPartition& p) {
    const int n = p.modulus();
    const auto subs = s_subgroups(p);
    for (int k : subs) {
        if (k == 1 || k == n) continue;
        const int shift = n / k;
        for (int h : subs) {
            if (h % k != 0 || h == n) continue;
            const int embed = n / h;
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                if (x % embed == 0) continue;
                ok = p.class_of(x) == p.class_of((x + shift) % n);
            }
            if (ok) return Section{k, h};
        }
    }
    return std::nullopt;
}

WedgeCore wedge_core(const SchurPartition& p) {
    WedgeCore current{p, p.modulus()};
    while (auto section = is_wedge_decomposable(current.core)) {
        current.core = restrict(current.core, section->h);
        current.order = section->h;
    }
    return current;
}

} // namespace schur
