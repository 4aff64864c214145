#pragma once

#include <cstddef>
#include <vector>

#include "keypoly/criteria.hpp"

namespace keypoly {

struct GenLimits {
    // Cap on simultaneously live generator frames; exceeding it throws
    // limit_error rather than exhausting memory.
    std::size_t max_frames = 1000000;
};

// Backtracking generators for the tableaux whose right scan is bounded by
// (Demazure) or equal to (atom) the key of pi. Columns are built east to
// west and cells bottom to top; at each cell the branch set is the A
// interval (Demazure) or the C trichotomy (atom) evaluated on the partial
// state, and each chosen value has its scanning path removed from the live
// suffix before the next cell. Output order is deterministic: depth-first
// with branch values ascending. Duplicates never occur.
std::vector<Tableau> generate_demazure_tableaux(const Partition& lambda,
                                                const Permutation& pi,
                                                const GenLimits& limits = {});
std::vector<Tableau> generate_atom_tableaux(const Partition& lambda,
                                            const Permutation& pi,
                                            const GenLimits& limits = {});

// Brute-force oracle: enumerate every tableau of the shape and keep those
// satisfying the requested scan predicate via the direct route. Same order
// as for_each_tableau.
enum class FilterKind { right_bounded, right_exact, left_bounded, left_exact };

std::vector<Tableau> filter_oracle(const Partition& lambda,
                                   const Permutation& perm, FilterKind kind);

} // namespace keypoly
