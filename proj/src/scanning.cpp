// Scanning. Both scans process one originating column at a time against a
// fresh working copy of the tableau, so removals made while scanning one
// origin column never leak into the next.
//
// Right scan, origin column j: the path from (j,i) starts at the current
// bottom of column j (which is exactly T(j,i) because each earlier path from
// this origin column popped one deeper cell) and repeatedly jumps to the
// earliest current column bottom strictly east that is weakly above the
// value taken last. The path's cells are removed and its final value is the
// scan entry S(j,i).
//
// Left scan, origin column l: work inside columns 1..l only. The path from
// (l,i) takes from each column westward, one cell per column down to column
// 1, the deepest live value weakly below the value taken last. The column 1
// value is the scan entry M(l,i); afterwards every path cell is removed
// together with everything beneath it.

#include "keypoly/scanning.hpp"

#include <algorithm>
#include <string>

namespace keypoly {

namespace {

std::string cell_str(int j, int i) {
    return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

} // namespace

bool ScanPath::visits(const Cell& c) const {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
}

const ScanPath& ScanResult::path(int j, int i) const {
    if (j < 1 || j > static_cast<int>(paths.size()))
        throw validation_error("no scan path for column " + std::to_string(j));
    const auto& col = paths[static_cast<std::size_t>(j - 1)];
    if (i < 1 || i > static_cast<int>(col.size()))
        throw validation_error("no scan path for cell " + cell_str(j, i));
    return col[static_cast<std::size_t>(i - 1)];
}

int ewis_remove(std::vector<std::vector<int>>& cols, std::size_t first, int v,
                std::vector<Cell>* cells, std::vector<int>* values) {
    int cur = v;
    for (std::size_t h = first; h < cols.size(); ++h) {
        auto& col = cols[h];
        if (col.empty() || col.back() < cur) continue;
        cur = col.back();
        if (cells) cells->emplace_back(static_cast<int>(h) + 1, static_cast<int>(col.size()));
        if (values) values->push_back(cur);
        col.pop_back();
    }
    return cur;
}

ScanResult right_scan(const Tableau& t) {
    const Partition& shape = t.shape();
    const int width = shape.num_columns();
    std::vector<std::vector<ScanPath>> paths(static_cast<std::size_t>(width));
    std::vector<std::vector<int>> scan_cols(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j) {
        const int len = shape.column_length(j);
        paths[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(len));
        scan_cols[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(len));
        std::vector<std::vector<int>> work = t.columns();
        for (int i = len; i >= 1; --i) {
            ScanPath p;
            auto& origin_col = work[static_cast<std::size_t>(j - 1)];
            if (static_cast<int>(origin_col.size()) != i)
                throw internal_error("origin column depth drifted at " + cell_str(j, i));
            p.cells.emplace_back(j, i);
            p.values.push_back(origin_col.back());
            origin_col.pop_back();
            ewis_remove(work, static_cast<std::size_t>(j), p.values.back(), &p.cells,
                        &p.values);
            scan_cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
                p.terminal();
            paths[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
                std::move(p);
        }
    }
    try {
        return ScanResult{Tableau(shape, std::move(scan_cols)), std::move(paths)};
    } catch (const validation_error& e) {
        throw internal_error(std::string("right scan produced a non-tableau: ") + e.what());
    }
}

ScanPath mwds_path(const std::vector<std::vector<int>>& cols, int origin_col,
                   int origin_row) {
    ScanPath p;
    const auto& start = cols[static_cast<std::size_t>(origin_col - 1)];
    if (origin_row < 1 || origin_row > static_cast<int>(start.size()))
        throw internal_error("left scan origin " + cell_str(origin_col, origin_row) +
                             " is not live");
    int cur = start[static_cast<std::size_t>(origin_row - 1)];
    p.cells.emplace_back(origin_col, origin_row);
    p.values.push_back(cur);
    for (int c = origin_col - 1; c >= 1; --c) {
        const auto& col = cols[static_cast<std::size_t>(c - 1)];
        // Live prefixes stay strictly increasing, so the deepest value
        // weakly below cur sits just before the first value above it.
        auto it = std::upper_bound(col.begin(), col.end(), cur);
        if (it == col.begin())
            throw internal_error("left scan stuck west of " + cell_str(origin_col, origin_row) +
                                 " at column " + std::to_string(c));
        --it;
        cur = *it;
        p.cells.emplace_back(c, static_cast<int>(it - col.begin()) + 1);
        p.values.push_back(cur);
    }
    return p;
}

void truncate_at(std::vector<std::vector<int>>& cols, const ScanPath& path) {
    for (std::size_t idx = 0; idx < path.cells.size(); ++idx) {
        auto [c, r] = path.cells[idx];
        auto& col = cols[static_cast<std::size_t>(c - 1)];
        if (static_cast<int>(col.size()) >= r) col.resize(static_cast<std::size_t>(r - 1));
    }
}

ScanResult left_scan(const Tableau& t) {
    const Partition& shape = t.shape();
    const int width = shape.num_columns();
    std::vector<std::vector<ScanPath>> paths(static_cast<std::size_t>(width));
    std::vector<std::vector<int>> scan_cols(static_cast<std::size_t>(width));
    for (int l = 1; l <= width; ++l) {
        const int len = shape.column_length(l);
        paths[static_cast<std::size_t>(l - 1)].resize(static_cast<std::size_t>(len));
        scan_cols[static_cast<std::size_t>(l - 1)].resize(static_cast<std::size_t>(len));
        std::vector<std::vector<int>> work(t.columns().begin(),
                                           t.columns().begin() + l);
        for (int i = len; i >= 1; --i) {
            if (static_cast<int>(work[static_cast<std::size_t>(l - 1)].size()) != i)
                throw internal_error("origin column depth drifted at " + cell_str(l, i));
            ScanPath p = mwds_path(work, l, i);
            truncate_at(work, p);
            scan_cols[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i - 1)] =
                p.terminal();
            paths[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i - 1)] =
                std::move(p);
        }
    }
    try {
        return ScanResult{Tableau(shape, std::move(scan_cols)), std::move(paths)};
    } catch (const validation_error& e) {
        throw internal_error(std::string("left scan produced a non-tableau: ") + e.what());
    }
}

Remnant remnant(const Tableau& t, int j, int i) {
    if (!t.shape().contains(j, i))
        throw validation_error("cell " + cell_str(j, i) + " outside shape");
    std::vector<std::vector<int>> work = t.columns();
    for (int r = t.shape().column_length(j); r > i; --r) {
        auto& origin_col = work[static_cast<std::size_t>(j - 1)];
        const int v = origin_col.back();
        origin_col.pop_back();
        ewis_remove(work, static_cast<std::size_t>(j), v);
    }
    return Remnant{t.shape(), std::move(work)};
}

int scan_value_from_remnant(const Tableau& t, int j, int i) {
    Remnant r = remnant(t, j, i);
    int best = 1;
    for (std::size_t h = static_cast<std::size_t>(j - 1); h < r.cols.size(); ++h)
        if (!r.cols[h].empty()) best = std::max(best, r.cols[h].back());
    return best;
}

} // namespace keypoly
