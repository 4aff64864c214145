// Cellwise condition sets. Each set pins down the values a single cell may
// take; testing every cell of a filled tableau against its set decides the
// scan predicates without running the scan that the predicate talks about.
//
// A and C look east: they are read off the remnant of the cell with columns
// 1..l dropped. B looks at the full right scanning path structure. F and G
// look west: they are read off the left scanning state of columns 1..l with
// the paths below the cell already removed.

#include "keypoly/criteria.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace keypoly {

namespace {

std::string cell_str(int j, int i) {
    return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

std::vector<int> interval(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void require_cell(const Tableau& t, int l, int k) {
    if (!t.shape().contains(l, k))
        throw validation_error("cell " + cell_str(l, k) + " outside shape");
}

void require_same_shape(const Tableau& t, const Tableau& key) {
    if (!(t.shape() == key.shape()))
        throw validation_error("key shape does not match tableau shape");
}

// m(U) for U = remnant of (l,k) with columns 1..l dropped.
int east_remnant_max(const Tableau& t, int l, int k) {
    Remnant r = remnant(t, l, k);
    r.drop_columns_through(l);
    return m_value(r);
}

ConditionSet finish(int l, int k, SetKind kind, std::vector<int> values) {
    return ConditionSet{l, k, kind, std::move(values)};
}

} // namespace

bool ConditionSet::contains(int v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

std::vector<int> demazure_branch(int m_u, int key_value, int row, int south,
                                 int east) {
    if (m_u > key_value) return {};
    return interval(row, std::min({key_value, south - 1, east}));
}

std::vector<int> atom_branch(int m_u, int key_value, int row, int south,
                             int east) {
    if (m_u > key_value) return {};
    if (m_u == key_value) return interval(row, std::min({key_value, south - 1, east}));
    if (key_value >= row && key_value <= std::min(south - 1, east)) return {key_value};
    return {};
}

ConditionSet a_set(const Tableau& t, const Tableau& key, int l, int k) {
    require_cell(t, l, k);
    require_same_shape(t, key);
    return finish(l, k, SetKind::A,
                  demazure_branch(east_remnant_max(t, l, k), key.at(l, k), k,
                                  t.south(l, k), t.east(l, k)));
}

ConditionSet c_set(const Tableau& t, const Tableau& key, int l, int k) {
    require_cell(t, l, k);
    require_same_shape(t, key);
    if (l == t.shape().num_columns())
        return finish(l, k, SetKind::C, {key.at(l, k)});
    return finish(l, k, SetKind::C,
                  atom_branch(east_remnant_max(t, l, k), key.at(l, k), k,
                              t.south(l, k), t.east(l, k)));
}

ConditionSet b_set(const Tableau& t, const ScanResult& rs, const Tableau& key,
                   int l, int k) {
    require_cell(t, l, k);
    require_same_shape(t, key);
    const int zeta_l = t.shape().column_length(l);
    std::set<int> result;
    for (int v = k; v <= key.at(l, k); ++v) result.insert(v);
    for (int j = 1; j < l; ++j) {
        const int zeta_j = t.shape().column_length(j);
        // Row a: the unique path from column j through (l-1,k). Row b: the
        // unique path through (l,k+1), or past the column bottom when k is
        // the last row. Both cells are covered by exactly one path from
        // each column west of them; anything else is a bug.
        int a = 0;
        for (int i = 1; i <= zeta_j; ++i) {
            if (rs.path(j, i).visits({l - 1, k})) {
                if (a != 0)
                    throw internal_error("cell " + cell_str(l - 1, k) +
                                         " lies on two scan paths from column " +
                                         std::to_string(j));
                a = i;
            }
        }
        if (a == 0)
            throw internal_error("cell " + cell_str(l - 1, k) +
                                 " lies on no scan path from column " + std::to_string(j));
        int b = zeta_j + 1;
        if (k < zeta_l) {
            b = 0;
            for (int i = 1; i <= zeta_j; ++i) {
                if (rs.path(j, i).visits({l, k + 1})) {
                    if (b != 0)
                        throw internal_error("cell " + cell_str(l, k + 1) +
                                             " lies on two scan paths from column " +
                                             std::to_string(j));
                    b = i;
                }
            }
            if (b == 0)
                throw internal_error("cell " + cell_str(l, k + 1) +
                                     " lies on no scan path from column " + std::to_string(j));
        }
        if (a > b - 1)
            throw internal_error("path rows out of order at " + cell_str(l, k) +
                                 " for column " + std::to_string(j));
        std::set<int> band;
        for (int i = a; i <= b - 1; ++i) {
            const ScanPath& p = rs.path(j, i);
            // Last path value strictly west of column l.
            int e = 0;
            for (std::size_t idx = 0; idx < p.cells.size(); ++idx)
                if (p.cells[idx].first < l) e = p.values[idx];
            if (e == 0)
                throw internal_error("path from " + cell_str(j, i) +
                                     " has no cell west of column " + std::to_string(l));
            for (int v = e; v <= key.at(j, i); ++v) band.insert(v);
        }
        std::set<int> kept;
        for (int v : result)
            if (band.count(v)) kept.insert(v);
        result = std::move(kept);
        if (result.empty()) break;
    }
    return finish(l, k, SetKind::B, std::vector<int>(result.begin(), result.end()));
}

namespace {

// Left scanning state for the criteria that look west: columns 1..l with the
// paths of (l, zeta_l) .. (l, k+1) removed, the probe bound cap, the deepest
// probe row q in column l-1 whose value is weakly below cap, and the probe
// terminals g[i] for 1 <= i <= q.
struct LeftState {
    std::vector<std::vector<int>> cols;
    int cap = 0;
    int q = 0;
    std::vector<int> g;  // 1-based, g[0] unused
};

LeftState build_left_state(const Tableau& t, int l, int k) {
    LeftState st;
    st.cols.assign(t.columns().begin(), t.columns().begin() + l);
    for (int i = t.shape().column_length(l); i > k; --i) {
        ScanPath p = mwds_path(st.cols, l, i);
        truncate_at(st.cols, p);
    }
    st.cap = t.south(l, k) - 1;
    const auto& west = st.cols[static_cast<std::size_t>(l - 2)];
    auto it = std::upper_bound(west.begin(), west.end(), st.cap);
    st.q = static_cast<int>(it - west.begin());
    st.g.assign(static_cast<std::size_t>(st.q) + 1, 0);
    for (int i = 1; i <= st.q; ++i)
        st.g[static_cast<std::size_t>(i)] = mwds_path(st.cols, l - 1, i).terminal();
    return st;
}

} // namespace

ConditionSet f_set(const Tableau& t, const Tableau& key, int l, int k) {
    require_cell(t, l, k);
    require_same_shape(t, key);
    if (l == 1)
        return finish(l, k, SetKind::F, interval(key.at(1, k), t.south(1, k) - 1));
    LeftState st = build_left_state(t, l, k);
    const auto& west = st.cols[static_cast<std::size_t>(l - 2)];
    for (int i = 1; i <= st.q; ++i) {
        if (st.g[static_cast<std::size_t>(i)] >= key.at(l, k))
            return finish(l, k, SetKind::F,
                          interval(west[static_cast<std::size_t>(i - 1)], st.cap));
    }
    return finish(l, k, SetKind::F, {});
}

ConditionSet g_set(const Tableau& t, const Tableau& key, int l, int k) {
    require_cell(t, l, k);
    require_same_shape(t, key);
    if (l == 1)
        return finish(l, k, SetKind::G, {key.at(1, k)});
    LeftState st = build_left_state(t, l, k);
    const auto& west = st.cols[static_cast<std::size_t>(l - 2)];
    int a = 0, b = 0;
    for (int i = 1; i <= st.q; ++i) {
        if (st.g[static_cast<std::size_t>(i)] == key.at(l, k)) {
            if (a == 0) a = i;
            b = i;
        }
    }
    if (a == 0) return finish(l, k, SetKind::G, {});
    // Row b+1 of column l-1 bounds from above only while it is still live;
    // a removed or absent row constrains nothing.
    int upper = st.cap;
    if (b < static_cast<int>(west.size()))
        upper = std::min(upper, west[static_cast<std::size_t>(b)] - 1);
    return finish(l, k, SetKind::G, interval(west[static_cast<std::size_t>(a - 1)], upper));
}

ConditionSet a_set(const Tableau& t, const Permutation& pi, int l, int k) {
    return a_set(t, make_key(t.shape(), pi), l, k);
}

ConditionSet c_set(const Tableau& t, const Permutation& pi, int l, int k) {
    return c_set(t, make_key(t.shape(), pi), l, k);
}

ConditionSet b_set(const Tableau& t, const Permutation& pi, int l, int k) {
    return b_set(t, right_scan(t), make_key(t.shape(), pi), l, k);
}

ConditionSet f_set(const Tableau& t, const Permutation& sigma, int l, int k) {
    return f_set(t, make_key(t.shape(), sigma), l, k);
}

ConditionSet g_set(const Tableau& t, const Permutation& sigma, int l, int k) {
    return g_set(t, make_key(t.shape(), sigma), l, k);
}

namespace {

template <typename SetFn>
bool all_cells_pass(const Tableau& t, const SetFn& fn) {
    for (int j = 1; j <= t.shape().num_columns(); ++j)
        for (int i = 1; i <= t.shape().column_length(j); ++i)
            if (!fn(j, i).contains(t.at(j, i))) return false;
    return true;
}

} // namespace

bool is_demazure(const Tableau& t, const Permutation& pi, Route route) {
    const Tableau key = make_key(t.shape(), pi);
    if (route == Route::direct) return dominated_by(right_scan(t).scan, key);
    return all_cells_pass(t, [&](int j, int i) { return a_set(t, key, j, i); });
}

bool is_exact_demazure(const Tableau& t, const Permutation& pi, Route route) {
    const Tableau key = make_key(t.shape(), pi);
    if (route == Route::direct) return right_scan(t).scan == key;
    return all_cells_pass(t, [&](int j, int i) { return c_set(t, key, j, i); });
}

bool is_left_bounded(const Tableau& t, const Permutation& sigma, Route route) {
    const Tableau key = make_key(t.shape(), sigma);
    if (route == Route::direct) return dominated_by(key, left_scan(t).scan);
    return all_cells_pass(t, [&](int j, int i) { return f_set(t, key, j, i); });
}

bool is_left_exact(const Tableau& t, const Permutation& sigma, Route route) {
    const Tableau key = make_key(t.shape(), sigma);
    if (route == Route::direct) return left_scan(t).scan == key;
    return all_cells_pass(t, [&](int j, int i) { return g_set(t, key, j, i); });
}

} // namespace keypoly
