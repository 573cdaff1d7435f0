#pragma once

// Independent brute-force checks: exhaustive search for Schur partitions of
// small Z_n, and exhaustive subgroup counting in Z_{r^k} x Z_{r^l}. Neither
// routine uses the traditional-family constructors or the lattice formula.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

inline constexpr int kDefaultOracleLimit = 14;

class OracleLimitExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
    /// Largest n searched; raising it above kDefaultOracleLimit is an explicit
    /// override (n = 15, 16 take minutes).
    int limit = kDefaultOracleLimit;
    /// When set, candidate classes are visited in a seeded random order.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Oracle limit from the SCHUR_ORACLE_LIMIT environment variable, or
/// kDefaultOracleLimit when unset or unparsable.
int oracle_limit_from_env();

struct OracleStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
};

/// Every partition of Z_n satisfying the Schur-ring axioms, canonically
/// sorted. Backtracks over the class of the smallest unassigned residue,
/// pruning on the star axiom and on product constancy over completed classes.
std::vector<SchurPartition> brute_force_schur_rings(int n, const OracleOptions& options = {},
                                                    OracleStats* stats = nullptr);

/// Number of subgroups of Z_{r^k} x Z_{r^l}, found by generating the subgroup
/// of every pair of cyclic subgroups. Requires r^{k+l} <= 1024.
std::uint64_t brute_force_subgroup_count(std::uint64_t r, int k, int l);

} // namespace schur
