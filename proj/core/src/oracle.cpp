#include "schur/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <unordered_set>

#include "schur/number_theory.hpp"

namespace schur {

int oracle_limit_from_env() {
    const char* raw = std::getenv("SCHUR_ORACLE_LIMIT");
    if (raw == nullptr) return kDefaultOracleLimit;
    int value = 0;
    const auto* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) return kDefaultOracleLimit;
    return value;
}

namespace {

class PartitionSearch {
public:
    PartitionSearch(int n, const OracleOptions& options, OracleStats* stats)
        : n_(n), label_(static_cast<std::size_t>(n), -1), stats_(stats) {
        if (options.shuffle_seed) rng_.emplace(*options.shuffle_seed);
    }

    std::vector<SchurPartition> run() {
        push_class(GroupSubset(n_, {0}));
        search();
        std::sort(found_.begin(), found_.end(), canonical_less);
        return std::move(found_);
    }

private:
    // products_[i][j - i] = C_i * C_j for j >= i.
    void push_class(GroupSubset c) {
        const int idx = static_cast<int>(classes_.size());
        c.for_each([&](int x) { label_[static_cast<std::size_t>(x)] = idx; });
        classes_.push_back(std::move(c));
        products_.emplace_back();
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            products_[i].push_back(multiply(classes_[i], classes_.back()));
        }
    }

    void pop_class() {
        classes_.back().for_each([&](int x) { label_[static_cast<std::size_t>(x)] = -1; });
        classes_.pop_back();
        products_.pop_back();
        for (auto& row : products_) row.pop_back();
    }

    const AlgebraElement& product(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return products_[i][j - i];
    }

    // Products involving a class at index >= first_new must be constant on
    // every completed class; older products only need checking on new classes.
    bool consistent(std::size_t first_new) const {
        const std::size_t r = classes_.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i; j < r; ++j) {
                const auto& prod = product(i, j);
                const std::size_t from = j >= first_new ? 0 : first_new;
                for (std::size_t t = from; t < r; ++t) {
                    if (!prod.is_constant_on(classes_[t])) return false;
                }
            }
        }
        return true;
    }

    void search() {
        if (stats_ != nullptr) ++stats_->nodes;
        int e = -1;
        std::vector<int> rest;
        for (int x = 1; x < n_; ++x) {
            if (label_[static_cast<std::size_t>(x)] != -1) continue;
            if (e == -1) {
                e = x;
            } else {
                rest.push_back(x);
            }
        }
        if (e == -1) {
            auto p = SchurPartition::from_classes(n_, classes_);
            if (is_schur_partition(p)) found_.push_back(std::move(p));
            return;
        }

        std::vector<std::uint32_t> masks(std::size_t{1} << rest.size());
        for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<std::uint32_t>(m);
        if (rng_) std::shuffle(masks.begin(), masks.end(), *rng_);

        for (auto mask : masks) {
            GroupSubset c(n_, {e});
            for (std::size_t b = 0; b < rest.size(); ++b) {
                if ((mask >> b) & 1U) c.insert(rest[b]);
            }
            auto star = subset_star(c);
            const std::size_t first_new = classes_.size();
            if (star == c) {
                push_class(std::move(c));
            } else {
                bool free = !star.intersects(c);
                star.for_each([&](int x) { free = free && label_[static_cast<std::size_t>(x)] == -1; });
                if (!free) {
                    if (stats_ != nullptr) ++stats_->pruned;
                    continue;
                }
                push_class(std::move(c));
                push_class(std::move(star));
            }
            if (consistent(first_new)) {
                search();
            } else if (stats_ != nullptr) {
                ++stats_->pruned;
            }
            while (classes_.size() > first_new) pop_class();
        }
    }

    int n_;
    std::vector<int> label_;
    std::vector<GroupSubset> classes_;
    std::vector<std::vector<AlgebraElement>> products_;
    std::vector<SchurPartition> found_;
    std::optional<std::mt19937_64> rng_;
    OracleStats* stats_;
};

} // namespace

std::vector<SchurPartition> brute_force_schur_rings(int n, const OracleOptions& options, OracleStats* stats) {
    require_modulus(n);
    if (n > options.limit) {
        throw OracleLimitExceeded("oracle: n = " + std::to_string(n) + " exceeds the brute-force limit " +
                                  std::to_string(options.limit) + " (set SCHUR_ORACLE_LIMIT to override)");
    }
    if (n > 32) throw OracleLimitExceeded("oracle: n above 32 is not supported");
    return PartitionSearch(n, options, stats).run();
}

std::uint64_t brute_force_subgroup_count(std::uint64_t r, int k, int l) {
    constexpr std::size_t kMax = 1024;
    if (!is_prime(r)) throw std::invalid_argument("brute_force_subgroup_count: r must be prime");
    if (k < 0 || l < 0) throw std::invalid_argument("brute_force_subgroup_count: negative exponent");
    const std::uint64_t a = ipow(r, k);
    const std::uint64_t b = ipow(r, l);
    if (k + l > 10 || a * b > kMax) {
        throw std::invalid_argument("brute_force_subgroup_count: group order exceeds 1024");
    }
    using Set = std::bitset<kMax>;
    const auto size = static_cast<std::size_t>(a * b);
    auto index = [&](std::uint64_t x, std::uint64_t y) { return static_cast<std::size_t>(x * b + y); };

    // Cyclic subgroups with one generator each.
    std::unordered_set<Set> cyclic_seen;
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> cyclic;
    for (std::size_t g = 0; g < size; ++g) {
        const std::uint64_t gx = g / b;
        const std::uint64_t gy = g % b;
        Set members;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> elems;
        std::uint64_t x = 0;
        std::uint64_t y = 0;
        do {
            members.set(index(x, y));
            elems.emplace_back(x, y);
            x = (x + gx) % a;
            y = (y + gy) % b;
        } while (x != 0 || y != 0);
        if (cyclic_seen.insert(members).second) cyclic.push_back(std::move(elems));
    }

    // Every subgroup of a rank <= 2 abelian group is generated by two elements,
    // so sums of two cyclic subgroups reach all of them.
    std::unordered_set<Set> all(cyclic_seen.begin(), cyclic_seen.end());
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
            Set sum;
            for (const auto& [x1, y1] : cyclic[i]) {
                for (const auto& [x2, y2] : cyclic[j]) sum.set(index((x1 + x2) % a, (y1 + y2) % b));
            }
            all.insert(sum);
        }
    }
    return all.size();
}

} // namespace schur
