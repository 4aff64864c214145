#include "keypoly/tableau.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace keypoly {

namespace {

std::string cell_str(int j, int i) {
    return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

} // namespace

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> columns)
    : shape_(std::move(shape)), cols_(std::move(columns)) {
    const int width = shape_.num_columns();
    if (static_cast<int>(cols_.size()) != width)
        throw validation_error("tableau has " + std::to_string(cols_.size()) +
                               " columns, shape requires " + std::to_string(width));
    for (int j = 1; j <= width; ++j) {
        const auto& col = cols_[static_cast<std::size_t>(j - 1)];
        const int len = shape_.column_length(j);
        if (static_cast<int>(col.size()) != len)
            throw validation_error("column " + std::to_string(j) + " has " +
                                   std::to_string(col.size()) + " cells, shape requires " +
                                   std::to_string(len));
        for (int i = 1; i <= len; ++i) {
            const int v = col[static_cast<std::size_t>(i - 1)];
            if (v < 1 || v > n())
                throw validation_error("value " + std::to_string(v) + " outside [1," +
                                       std::to_string(n()) + "] at " + cell_str(j, i));
            if (i > 1 && col[static_cast<std::size_t>(i - 2)] >= v)
                throw validation_error("column not strictly increasing at " + cell_str(j, i));
        }
    }
    for (int j = 1; j < width; ++j) {
        const int len = shape_.column_length(j + 1);
        for (int i = 1; i <= len; ++i)
            if (at(j, i) > at(j + 1, i))
                throw validation_error("row not weakly increasing at " + cell_str(j + 1, i));
    }
}

Tableau Tableau::minimal(const Partition& shape) {
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= shape.num_columns(); ++j) {
        std::vector<int> col(static_cast<std::size_t>(shape.column_length(j)));
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = static_cast<int>(i) + 1;
        cols.push_back(std::move(col));
    }
    return Tableau(shape, std::move(cols));
}

int Tableau::at(int j, int i) const {
    if (!shape_.contains(j, i))
        throw validation_error("cell " + cell_str(j, i) + " outside shape");
    return cols_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

int Tableau::west(int l, int k) const {
    return l == 1 ? k : at(l - 1, k);
}

int Tableau::east(int l, int k) const {
    if (l + 1 > shape_.num_columns() || shape_.column_length(l + 1) < k) return n();
    return at(l + 1, k);
}

int Tableau::south(int l, int k) const {
    return k == shape_.column_length(l) ? n() + 1 : at(l, k + 1);
}

const std::vector<int>& Tableau::column(int j) const {
    if (j < 1 || j > shape_.num_columns())
        throw validation_error("column index " + std::to_string(j) + " outside [1," +
                               std::to_string(shape_.num_columns()) + "]");
    return cols_[static_cast<std::size_t>(j - 1)];
}

bool operator<(const Tableau& a, const Tableau& b) {
    if (a.shape().parts() != b.shape().parts())
        return a.shape().parts() < b.shape().parts();
    return a.columns() < b.columns();
}

bool dominated_by(const Tableau& t, const Tableau& u) {
    if (!(t.shape() == u.shape()))
        throw validation_error("entrywise comparison requires equal shapes");
    for (int j = 1; j <= t.shape().num_columns(); ++j)
        for (int i = 1; i <= t.shape().column_length(j); ++i)
            if (t.at(j, i) > u.at(j, i)) return false;
    return true;
}

std::vector<int> weight(const Tableau& t) {
    std::vector<int> w(static_cast<std::size_t>(t.n()), 0);
    for (const auto& col : t.columns())
        for (int v : col) ++w[static_cast<std::size_t>(v - 1)];
    return w;
}

int m_value(const Tableau& t) {
    int best = 1;
    for (const auto& col : t.columns())
        if (!col.empty()) best = std::max(best, col.back());
    return best;
}

int m_value(const Remnant& r) {
    int best = 1;
    for (const auto& col : r.cols)
        if (!col.empty()) best = std::max(best, col.back());
    return best;
}

void Remnant::drop_columns_through(int l) {
    for (int j = 1; j <= l && j <= static_cast<int>(cols.size()); ++j)
        cols[static_cast<std::size_t>(j - 1)].clear();
}

bool Remnant::all_empty() const {
    for (const auto& col : cols)
        if (!col.empty()) return false;
    return true;
}

bool is_key(const Tableau& t) {
    const int width = t.shape().num_columns();
    for (int j = 1; j < width; ++j) {
        std::set<int> west(t.column(j).begin(), t.column(j).end());
        for (int v : t.column(j + 1))
            if (!west.count(v)) return false;
    }
    return true;
}

Tableau make_key(const Partition& lambda, const Permutation& pi) {
    if (pi.n() != lambda.n())
        throw validation_error("permutation rank " + std::to_string(pi.n()) +
                               " does not match partition rank " + std::to_string(lambda.n()));
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= lambda.num_columns(); ++j) {
        const int len = lambda.column_length(j);
        std::vector<int> col(pi.entries().begin(), pi.entries().begin() + len);
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    return Tableau(lambda, std::move(cols));
}

Permutation key_to_perm(const Tableau& t) {
    if (!is_key(t)) throw validation_error("tableau is not a key");
    const Partition& shape = t.shape();
    const int n = t.n();
    std::vector<int> entries;
    std::set<int> placed;
    // Distinct column lengths ascending correspond to the nested value sets
    // from the east end westward; each block appends the fresh values sorted.
    std::vector<int> q = shape.distinct_column_lengths();
    for (int len : q) {
        int col_idx = 0;
        for (int j = 1; j <= shape.num_columns(); ++j)
            if (shape.column_length(j) == len) { col_idx = j; break; }
        std::vector<int> fresh;
        for (int v : t.column(col_idx))
            if (!placed.count(v)) fresh.push_back(v);
        if (static_cast<int>(fresh.size() + placed.size()) != len)
            throw validation_error("column value sets are not nested");
        std::sort(fresh.begin(), fresh.end());
        for (int v : fresh) { entries.push_back(v); placed.insert(v); }
    }
    for (int v = 1; v <= n; ++v)
        if (!placed.count(v)) entries.push_back(v);
    return Permutation(std::move(entries));
}

namespace {

struct Enumerator {
    const Partition& shape;
    const std::function<void(const Tableau&)>& fn;
    std::vector<std::vector<int>> cols;
    std::vector<std::pair<int, int>> order;  // east to west, bottom to top

    Enumerator(const Partition& s, const std::function<void(const Tableau&)>& f)
        : shape(s), fn(f) {
        for (int j = 1; j <= shape.num_columns(); ++j)
            cols.emplace_back(static_cast<std::size_t>(shape.column_length(j)), 0);
        for (int j = shape.num_columns(); j >= 1; --j)
            for (int i = shape.column_length(j); i >= 1; --i)
                order.emplace_back(j, i);
    }

    void fill(std::size_t idx) {
        if (idx == order.size()) {
            fn(Tableau(shape, cols));
            return;
        }
        auto [j, i] = order[idx];
        const int south =
            i == shape.column_length(j) ? shape.n() + 1 : cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
        int east = shape.n();
        if (j < shape.num_columns() && shape.column_length(j + 1) >= i)
            east = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
        const int hi = std::min(south - 1, east);
        for (int v = 1; v <= hi; ++v) {
            cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
            fill(idx + 1);
        }
        cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = 0;
    }
};

} // namespace

void for_each_tableau(const Partition& shape,
                      const std::function<void(const Tableau&)>& fn) {
    Enumerator e(shape, fn);
    e.fill(0);
}

std::vector<Tableau> all_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    for_each_tableau(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::string render(const Tableau& t) {
    int width = 1;
    for (const auto& col : t.columns())
        for (int v : col)
            width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    for (int i = 1; i <= t.n() && t.shape().part(i) > 0; ++i) {
        for (int j = 1; j <= t.shape().part(i); ++j) {
            if (j > 1) os << ' ';
            std::string s = std::to_string(t.at(j, i));
            os << std::string(static_cast<std::size_t>(width - static_cast<int>(s.size())), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace keypoly
