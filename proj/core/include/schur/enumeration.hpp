#pragma once

// Complete enumeration of Schur rings over Z_n from the four traditional
// families: trivial, automorphic, direct products and wedge products.
// Rings reached by several constructions are merged on their canonical
// encoding; every producing family is kept as a tag.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

enum class Family : std::uint8_t {
    trivial = 1U << 0,
    automorphic = 1U << 1,
    direct = 1U << 2,
    wedge = 1U << 3,
};

/// Bit set of Family values.
class FamilyTags {
public:
    constexpr FamilyTags() = default;
    constexpr FamilyTags(Family f) : bits_(static_cast<std::uint8_t>(f)) {}

    constexpr bool has(Family f) const { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
    constexpr FamilyTags& operator|=(FamilyTags other) {
        bits_ |= other.bits_;
        return *this;
    }
    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool operator==(const FamilyTags&) const = default;

    /// Tag names in the fixed order trivial, automorphic, direct, wedge.
    std::vector<std::string> names() const;

private:
    std::uint8_t bits_ = 0;
};

std::string family_name(Family f);

struct CoreCount {
    SchurPartition core;
    int order = 1;
    std::size_t count = 0;
};

struct EnumerationResult {
    int n = 1;
    /// Sorted by canonical_less.
    std::vector<SchurPartition> rings;
    /// Parallel to `rings`.
    std::vector<FamilyTags> tags;
    /// One entry per distinct wedge core, ordered by (order, core).
    std::vector<CoreCount> core_census;

    std::size_t omega() const { return rings.size(); }
};

/// Memoizing enumerator. Results for every divisor visited are cached, so one
/// instance can answer many queries cheaply. Not thread-safe.
class Enumerator {
public:
    struct Level {
        std::vector<SchurPartition> rings;
        std::vector<FamilyTags> tags;
    };

    /// All Schur rings over Z_n with their family tags, canonically sorted.
    const Level& rings(int n);

    /// rings(n) plus the wedge-core census.
    EnumerationResult enumerate(int n);

private:
    Level build(int n);

    std::unordered_map<int, std::unique_ptr<Level>> memo_;
};

EnumerationResult enumerate(int n);
std::size_t omega(int n);

/// Wedge-core census of the rings over Z_n.
std::vector<CoreCount> core_census(int n);
std::vector<CoreCount> core_census(const std::vector<SchurPartition>& rings);

/// Census totals keyed by core order.
std::map<int, std::size_t> census_by_order(const std::vector<CoreCount>& census);

/// Number of wedge-indecomposable rings over Z_n.
std::size_t indecomposable_count(int n);

/// Counts of tags over an enumeration.
struct FamilyCounts {
    std::size_t trivial = 0;
    std::size_t automorphic = 0;
    std::size_t direct = 0;
    std::size_t wedge = 0;
    std::size_t wedge_not_automorphic = 0;
};
FamilyCounts family_counts(const EnumerationResult& result);

} // namespace schur
