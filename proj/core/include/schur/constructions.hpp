#pragma once

// The traditional Schur-ring constructors over cyclic groups (trivial, direct
// product, wedge product) together with wedge decomposition and wedge cores.

#include <optional>
#include <stdexcept>

#include "schur/partition.hpp"

namespace schur {

/// Section [Z_k, Z_h] of Z_n: k | h | n.
struct Section {
    int k = 1;
    int h = 1;

    bool is_trivial() const { return k == h; }
    bool is_proper(int n) const { return 1 < k && k <= h && h < n; }
    bool is_valid(int n) const { return k >= 1 && h % k == 0 && h >= 1 && n % h == 0; }
    bool operator==(const Section&) const = default;
};

/// Thrown when pi(S) differs from T restricted to H/K.
class WedgeIncompatible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {0} and Z_n \ {0}.
SchurPartition trivial_ring(int n);

/// All singletons (the group algebra itself).
SchurPartition discrete_ring(int n);

/// S over Z_h times T over Z_k, gcd(h, k) = 1. Residue k*a + h*b of Z_{hk}
/// corresponds to (a, b), so the order-h subgroup carries S and the order-k
/// subgroup carries T under the canonical identifications.
SchurPartition direct_product(const SchurPartition& s, const SchurPartition& t);

/// True if quotient(S, k) equals the restriction of T to its order-h/k subgroup.
bool wedge_compatible(const SchurPartition& s, const SchurPartition& t, Section u, int n);

/// S over Z_h wedged with T over Z_{n/k} along the section (k, h) of Z_n.
/// Classes inside the order-h subgroup come from S; every other class is the
/// pull-back of a class of T lying outside H/K.
SchurPartition wedge_product(const SchurPartition& s, const SchurPartition& t, Section u, int n);

/// The same ring formed as the common refinement of D(S) (completed by
/// G \ H) and the pull-back of D(T). No compatibility check is made.
SchurPartition wedge_by_common_refinement(const SchurPartition& s, const SchurPartition& t, Section u, int n);

/// A proper section (k, h) over which p is a wedge product, choosing the
/// smallest k and then the smallest h. Empty if p is wedge-indecomposable.
std::optional<Section> is_wedge_decomposable(const SchurPartition& p);

struct WedgeCore {
    SchurPartition core;
    int order = 1;
};

/// Maximal wedge-indecomposable subring, reached by restricting along the
/// section reported by is_wedge_decomposable until none remains.
WedgeCore wedge_core(const SchurPartition& p);

} // namespace schur
