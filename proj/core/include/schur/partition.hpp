#pragma once

// Partitions of Z_n and the Schur-ring axiom checker.
//
// A Schur ring over Z_n is determined by its partition D(S) of the group into
// classes. SchurPartition stores any partition of Z_n in canonical order;
// check_axioms decides whether it actually spans a Schur ring.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schur/group_subset.hpp"

namespace schur {

/// A partition of Z_n. Classes are sorted by minimum element, so the class
/// containing 0 always comes first.
class SchurPartition {
public:
    /// Throws std::invalid_argument unless `classes` are non-empty, pairwise
    /// disjoint subsets of Z_n that cover the group.
    static SchurPartition from_classes(int n, std::vector<GroupSubset> classes);
    static SchurPartition from_lists(int n, const std::vector<std::vector<int>>& classes);

    int modulus() const { return n_; }
    const std::vector<GroupSubset>& classes() const { return classes_; }
    std::size_t rank() const { return classes_.size(); }
    const GroupSubset& operator[](std::size_t i) const { return classes_[i]; }

    /// Index of the class containing residue x.
    int class_of(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
    const std::vector<int>& labels() const { return labels_; }

    /// True if `s` is a union of classes.
    bool is_union_of_classes(const GroupSubset& s) const;

    bool operator==(const SchurPartition& other) const { return labels_ == other.labels_; }

    /// Classes rendered as brace lists separated by spaces.
    std::string to_string() const;

private:
    SchurPartition(int n, std::vector<GroupSubset> classes);

    int n_ = 0;
    std::vector<GroupSubset> classes_;
    std::vector<int> labels_;
};

enum class Axiom { identity = 1, inverse = 2, closure = 3 };

/// First axiom violation found under class ordering.
///
/// identity: `first_class` is the class holding 0, which is not {0}.
/// inverse:  the star of `first_class` is not a class.
/// closure:  multiply(first_class, second_class) takes different values on
///           `element_a` and `element_b`, both members of `target_class`.
struct AxiomViolation {
    Axiom axiom = Axiom::identity;
    int first_class = -1;
    int second_class = -1;
    int target_class = -1;
    int element_a = -1;
    int element_b = -1;

    std::string describe() const;
    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomCheck {
    bool passed = false;
    std::optional<AxiomViolation> witness;

    explicit operator bool() const { return passed; }
};

AxiomCheck check_axioms(const SchurPartition& p);
bool is_schur_partition(const SchurPartition& p);

/// Divisors d of n whose order-d subgroup is a union of classes, ascending.
std::vector<int> s_subgroups(const SchurPartition& p);
bool is_s_subgroup(const SchurPartition& p, int d);

/// Restriction S_H to the subgroup of order d, carried to Z_d by x -> x/(n/d).
SchurPartition restrict(const SchurPartition& p, int d);

/// Image under Z_n -> Z_{n/k}, x -> x mod (n/k). Throws if k is not an
/// S-subgroup or if images of distinct classes overlap without coinciding.
SchurPartition quotient(const SchurPartition& p, int k);

/// Deterministic byte string; equal iff the partitions are equal.
std::string canonical_encode(const SchurPartition& p);
SchurPartition canonical_decode(const std::string& bytes);

/// Canonical order on partitions (modulus, then encoding).
bool canonical_less(const SchurPartition& a, const SchurPartition& b);

struct PartitionHash {
    std::size_t operator()(const SchurPartition& p) const;
};

} // namespace schur
