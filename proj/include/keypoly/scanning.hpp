#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "keypoly/tableau.hpp"

namespace keypoly {

using Cell = std::pair<int, int>;  // (column, row), 1-based

// One scanning path. cells and values run from the origin outward: eastward
// for right scanning, westward (one cell per column down to column 1) for
// left scanning.
struct ScanPath {
    std::vector<Cell> cells;
    std::vector<int> values;

    const Cell& origin() const { return cells.front(); }
    int terminal() const { return values.back(); }
    bool visits(const Cell& c) const;
};

// A scan tableau together with the path that produced each entry;
// paths[j-1][i-1] originates at cell (j,i).
struct ScanResult {
    Tableau scan;
    std::vector<std::vector<ScanPath>> paths;

    const ScanPath& path(int j, int i) const;
};

// Right scan: for each originating column j independently (removals never
// carry over from one originating column to the next), paths from (j, ζ_j)
// up to (j, 1) trace the earliest weakly increasing sequence of current
// column bottoms strictly east of j, removing each path as they go. The
// entry S(j,i) is the terminal value of the path from (j,i).
ScanResult right_scan(const Tableau& t);

// Left scan: for each column l independently, working inside columns 1..l,
// paths from (l, ζ_l) up to (l, 1) take from each column westward the
// deepest live value weakly below the value most recently taken, down to
// column 1. After each path, the path cells and everything beneath them are
// removed. The entry M(l,i) is the column 1 value of the path from (l,i).
ScanResult left_scan(const Tableau& t);

// The remnant T^(j;i): t with the right scanning paths originating at
// (j, ζ_j) .. (j, i+1) removed, so column j retains i cells. Columns west of
// j are untouched.
Remnant remnant(const Tableau& t, int j, int i);

// Independent route to S(j,i): the maximum current column bottom of the
// remnant T^(j;i) restricted to columns j and east.
int scan_value_from_remnant(const Tableau& t, int j, int i);

// Shared low-level step: starting from the value v, walk columns of cols
// with 0-based index >= first, left to right, greedily taking the earliest
// current column bottom weakly above the value taken last, popping each
// taken cell. Visited cells (1-based) and values are appended when the
// pointers are non-null. Returns the final value.
int ewis_remove(std::vector<std::vector<int>>& cols, std::size_t first, int v,
                std::vector<Cell>* cells = nullptr,
                std::vector<int>* values = nullptr);

// Shared low-level step for left scanning: the maximizing weakly decreasing
// sequence starting at the cell (origin_col, origin_row) of cols, taking
// from each column westward the deepest live value weakly below the value
// taken last, down to column 1. Does not modify cols. Throws internal_error
// if some column has no value weakly below, which cannot happen for
// semistandard states.
ScanPath mwds_path(const std::vector<std::vector<int>>& cols, int origin_col,
                   int origin_row);

// Truncate cols at each path cell: column c is cut back to r-1 values for a
// path cell (c,r). This is the removal rule of left scanning.
void truncate_at(std::vector<std::vector<int>>& cols, const ScanPath& path);

} // namespace keypoly
