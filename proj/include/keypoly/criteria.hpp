#pragma once

#include <vector>

#include "keypoly/scanning.hpp"

namespace keypoly {

enum class SetKind { A, B, C, F, G };

// The set of values a cell may take under one of the five cellwise
// conditions, materialized explicitly. values is sorted ascending and lies
// inside [1, n].
struct ConditionSet {
    int col = 0;
    int row = 0;
    SetKind kind = SetKind::A;
    std::vector<int> values;

    bool contains(int v) const;
};

// Full-tableau forms. The permutation picks the key Y of t's shape; the
// overloads taking a precomputed key avoid rebuilding it in exhaustive
// sweeps. All throw validation_error for cells outside the shape and
// require, for B, the right scan of t itself.
//
// A: empty when the bottoms of the remnant columns east of l exceed Y(l,k),
//    else the interval [k, min(Y(l,k), south-1, east)].
// C: the exact-scan refinement of A. For l = lambda_1 it is {Y(l,k)}; west
//    of that it follows the trichotomy of m(U) against Y(l,k).
// B: an intersection over originating columns j <= l of unions of intervals
//    [E, Y(j,i)] read off the right scanning paths of t.
// F: built from the left scanning state of columns 1..l; the interval
//    [U(l-1,p), south-1] where p is the shallowest probe reaching at least
//    Y(l,k).
// G: the exact refinement of F, cut between the probes that reach Y(l,k)
//    exactly.
ConditionSet a_set(const Tableau& t, const Permutation& pi, int l, int k);
ConditionSet b_set(const Tableau& t, const Permutation& pi, int l, int k);
ConditionSet c_set(const Tableau& t, const Permutation& pi, int l, int k);
ConditionSet f_set(const Tableau& t, const Permutation& sigma, int l, int k);
ConditionSet g_set(const Tableau& t, const Permutation& sigma, int l, int k);

ConditionSet a_set(const Tableau& t, const Tableau& key, int l, int k);
ConditionSet c_set(const Tableau& t, const Tableau& key, int l, int k);
ConditionSet b_set(const Tableau& t, const ScanResult& rs, const Tableau& key,
                   int l, int k);
ConditionSet f_set(const Tableau& t, const Tableau& key, int l, int k);
ConditionSet g_set(const Tableau& t, const Tableau& key, int l, int k);

// Partial forms used by the generators: the branch set for a cell given only
// the local data. m_u is the maximum live column bottom east of the cell
// (1 when nothing is live), key_value is Y at the cell, row its row index,
// south the value just placed beneath it (n+1 at the column bottom) and east
// the value in the same row one column east (n when absent).
std::vector<int> demazure_branch(int m_u, int key_value, int row, int south,
                                 int east);
std::vector<int> atom_branch(int m_u, int key_value, int row, int south,
                             int east);

// Predicates characterizing scan behaviour, each computable two ways: the
// direct route compares a scan tableau with the key, the cellwise route
// tests every entry against its condition set. Both routes always agree;
// the suites check this exhaustively.
enum class Route { direct, cellwise };

bool is_demazure(const Tableau& t, const Permutation& pi,
                 Route route = Route::direct);        // S(t) <= Y
bool is_exact_demazure(const Tableau& t, const Permutation& pi,
                       Route route = Route::direct);  // S(t) = Y
bool is_left_bounded(const Tableau& t, const Permutation& sigma,
                     Route route = Route::direct);    // M(t) >= Y
bool is_left_exact(const Tableau& t, const Permutation& sigma,
                   Route route = Route::direct);      // M(t) = Y

} // namespace keypoly
