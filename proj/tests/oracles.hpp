#pragma once

#include <cstdint>
#include <vector>

#include "updown/partition.hpp"
#include "updown/rational.hpp"

// Independent reference implementations used only by tests.  Each one
// solves its problem by a different algorithm than the library so that an
// agreement check is a genuine cross-validation, not a reflection.
namespace oracle {

// Strict partitions of n as subsets of {1..n} summing to n (bitmask scan),
// returned sorted in decreasing lexicographic order.
std::vector<updown::StrictPartition> enumerate_bitmask(std::int64_t n);

// Weighted count of monotone paths mu -> la in the branching order,
// multiplying the edge multiplicity along every path, by plain
// depth-first enumeration of each path (no memoization).
updown::Int path_count_dfs(const updown::StrictPartition& mu,
                           const updown::StrictPartition& la);

// Evaluation of the two-parameter-free Schur-Q polynomial of mu at the
// parts of la, by the symmetrization formula over all permutations of the
// variables with plain powers.  Zero when mu has more rows than la.
updown::Rat schur_q_symmetrized(const updown::StrictPartition& mu,
                                const updown::StrictPartition& la);

}  // namespace oracle
