#include "schur/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "schur/automorphic.hpp"
#include "schur/constructions.hpp"

namespace schur {

std::string family_name(Family f) {
    switch (f) {
    case Family::trivial:
        return "trivial";
    case Family::automorphic:
        return "automorphic";
    case Family::direct:
        return "direct";
    case Family::wedge:
        return "wedge";
    }
    return "unknown";
}

std::vector<std::string> FamilyTags::names() const {
    std::vector<std::string> out;
    for (Family f : {Family::trivial, Family::automorphic, Family::direct, Family::wedge}) {
        if (has(f)) out.push_back(family_name(f));
    }
    return out;
}

namespace {

class RingSet {
public:
    void add(SchurPartition p, Family f) {
        auto [it, inserted] = index_.try_emplace(std::move(p), FamilyTags{});
        it->second |= f;
    }

    Enumerator::Level finish() && {
        std::vector<std::pair<SchurPartition, FamilyTags>> items(index_.begin(), index_.end());
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
        Enumerator::Level level;
        level.rings.reserve(items.size());
        level.tags.reserve(items.size());
        for (auto& [p, tags] : items) {
            level.rings.push_back(std::move(p));
            level.tags.push_back(tags);
        }
        return level;
    }

private:
    std::unordered_map<SchurPartition, FamilyTags, PartitionHash> index_;
};

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

} // namespace

const Enumerator::Level& Enumerator::rings(int n) {
    require_modulus(n);
    if (auto it = memo_.find(n); it != memo_.end()) return *it->second;
    auto level = std::make_unique<Level>(build(n));
    return *memo_.emplace(n, std::move(level)).first->second;
}

Enumerator::Level Enumerator::build(int n) {
    RingSet set;
    set.add(trivial_ring(n), Family::trivial);
    for (auto& p : automorphic_rings(n)) set.add(std::move(p), Family::automorphic);

    const auto divs = divisors_of(n);

    // Unordered coprime factorizations n = h * k with 1 < h < k.
    for (int h : divs) {
        const int k = n / h;
        if (h <= 1 || h >= k || std::gcd(h, k) != 1) continue;
        const auto& left = rings(h).rings;
        const auto& right = rings(k).rings;
        for (const auto& s : left) {
            for (const auto& t : right) set.add(direct_product(s, t), Family::direct);
        }
    }

    // Proper sections 1 < k <= h < n. S and T are matched on the shared
    // ring over H/K: quotient(S, k) must equal restrict(T, h/k).
    for (int k : divs) {
        if (k <= 1 || k >= n) continue;
        for (int h : divs) {
            if (h < k || h >= n || h % k != 0) continue;
            const Section u{k, h};
            const int hk = h / k;
            std::unordered_map<std::string, std::vector<const SchurPartition*>> by_key;
            for (const auto& s : rings(h).rings) {
                if (is_s_subgroup(s, k)) by_key[canonical_encode(quotient(s, k))].push_back(&s);
            }
            for (const auto& t : rings(n / k).rings) {
                if (!is_s_subgroup(t, hk)) continue;
                auto it = by_key.find(canonical_encode(restrict(t, hk)));
                if (it == by_key.end()) continue;
                for (const auto* s : it->second) set.add(wedge_product(*s, t, u, n), Family::wedge);
            }
        }
    }
    return std::move(set).finish();
}

EnumerationResult Enumerator::enumerate(int n) {
    const auto& level = rings(n);
    EnumerationResult out;
    out.n = n;
    out.rings = level.rings;
    out.tags = level.tags;
    out.core_census = core_census(out.rings);
    return out;
}

EnumerationResult enumerate(int n) {
    Enumerator e;
    return e.enumerate(n);
}

std::size_t omega(int n) {
    Enumerator e;
    return e.rings(n).rings.size();
}

std::vector<CoreCount> core_census(const std::vector<SchurPartition>& rings) {
    std::unordered_map<SchurPartition, std::size_t, PartitionHash> counts;
    for (const auto& p : rings) ++counts[wedge_core(p).core];
    std::vector<CoreCount> out;
    out.reserve(counts.size());
    for (auto& [core, count] : counts) out.push_back({core, core.modulus(), count});
    std::sort(out.begin(), out.end(), [](const CoreCount& a, const CoreCount& b) {
        if (a.order != b.order) return a.order < b.order;
        return canonical_less(a.core, b.core);
    });
    return out;
}

std::vector<CoreCount> core_census(int n) {
    Enumerator e;
    return core_census(e.rings(n).rings);
}

std::map<int, std::size_t> census_by_order(const std::vector<CoreCount>& census) {
    std::map<int, std::size_t> out;
    for (const auto& c : census) out[c.order] += c.count;
    return out;
}

std::size_t indecomposable_count(int n) {
    Enumerator e;
    const auto& rings = e.rings(n).rings;
    return static_cast<std::size_t>(std::count_if(rings.begin(), rings.end(), [](const SchurPartition& p) {
        return !is_wedge_decomposable(p).has_value();
    }));
}

FamilyCounts family_counts(const EnumerationResult& result) {
    FamilyCounts c;
    for (auto tags : result.tags) {
        if (tags.has(Family::trivial)) ++c.trivial;
        if (tags.has(Family::automorphic)) ++c.automorphic;
        if (tags.has(Family::direct)) ++c.direct;
        if (tags.has(Family::wedge)) {
            ++c.wedge;
            if (!tags.has(Family::automorphic)) ++c.wedge_not_automorphic;
        }
    }
    return c;
}

} // namespace schur
