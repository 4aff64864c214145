#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "keypoly/error.hpp"

namespace keypoly {

// Weakly decreasing tuple of non-negative parts with an explicit ambient
// rank n. Trailing zero parts are kept, and the all-zero partition is legal.
// Rows are indexed 1..n and columns 1..lambda_1; the cell (j,i) means column
// j, row i.
class Partition {
public:
    Partition(int n, std::vector<int> parts);
    static Partition zero(int n) { return Partition(n, {}); }

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // lambda_i, 1-based
    int num_columns() const { return parts_.empty() ? 0 : parts_.front(); }
    int cell_count() const;
    const std::vector<int>& column_lengths() const { return zeta_; }
    int column_length(int j) const;  // zeta_j, 1-based
    bool contains(int j, int i) const;

    // Distinct nonzero column lengths, ascending.
    std::vector<int> distinct_column_lengths() const;
    // Consecutive position blocks [lo,hi] obtained by cutting [1,n] at the
    // distinct column lengths. Their disjoint union is [1,n].
    std::vector<std::pair<int, int>> blocks() const;

    bool operator==(const Partition&) const = default;

private:
    int n_;
    std::vector<int> parts_;
    std::vector<int> zeta_;
};

class Permutation {
public:
    explicit Permutation(std::vector<int> entries);
    static Permutation identity(int n);
    static Permutation longest(int n);  // n, n-1, ..., 1

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int pos) const;  // 1-based
    int inversions() const;
    bool is_identity() const;

    // Exchange the positions of the values i and i+1.
    Permutation value_swap(int i) const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

// Letters i_1..i_t of a product of adjacent transpositions; applying
// value_swap(i_1), then value_swap(i_2), ... to the identity yields the
// permutation the word was derived from.
using ReducedWord = std::vector<int>;

// Deterministic minimal word: repeatedly locate the smallest i such that the
// value i+1 precedes the value i, swap those values, and record i; the
// recorded letters are emitted in reverse. The word length equals the
// inversion count.
ReducedWord reduced_word(const Permutation& pi);

// Replay a word on the identity of rank n, first letter first.
Permutation apply_word(const ReducedWord& word, int n);

// Every reduced word of pi, in depth-first order, capped for safety.
std::vector<ReducedWord> all_reduced_words(const Permutation& pi,
                                           std::size_t cap = 100000);

// Membership, projection and enumeration for the set of permutations that
// increase within each block of the partition. Projection sorts each block
// ascending; enumeration is in lexicographic order.
bool in_s_n_lambda(const Permutation& pi, const Partition& lambda);
Permutation project_s_n_lambda(const Permutation& pi, const Partition& lambda);
std::vector<Permutation> s_n_lambda(const Partition& lambda);
// Multinomial count n! / (prod of block size factorials), overflow-checked.
unsigned long long s_n_lambda_count(const Partition& lambda);

// All partitions of ambient rank n with at most max_cells cells, in
// ascending lexicographic part order, the all-zero shape first.
std::vector<Partition> partitions_up_to(int n, int max_cells);

// Build the partition of rank n whose diagram has the given column lengths
// (weakly decreasing, each between 1 and n).
Partition from_column_lengths(int n, const std::vector<int>& zeta);

} // namespace keypoly
