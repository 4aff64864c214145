#include "keypoly/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace keypoly {

Partition::Partition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    if (n_ < 1)
        throw validation_error("partition rank must be positive, got " + std::to_string(n_));
    if (static_cast<int>(parts_.size()) > n_)
        throw validation_error("partition has " + std::to_string(parts_.size()) +
                               " parts but rank " + std::to_string(n_));
    parts_.resize(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i + 1 < n_; ++i)
        if (parts_[i] < parts_[i + 1])
            throw validation_error("partition parts must be weakly decreasing at position " +
                                   std::to_string(i + 1));
    if (parts_.back() < 0)
        throw validation_error("partition parts must be non-negative");
    zeta_.assign(static_cast<std::size_t>(num_columns()), 0);
    for (int j = 1; j <= num_columns(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        zeta_[static_cast<std::size_t>(j - 1)] = count;
    }
}

int Partition::part(int i) const {
    if (i < 1 || i > n_)
        throw validation_error("row index " + std::to_string(i) + " outside [1," +
                               std::to_string(n_) + "]");
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::cell_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_length(int j) const {
    if (j < 1 || j > num_columns())
        throw validation_error("column index " + std::to_string(j) + " outside [1," +
                               std::to_string(num_columns()) + "]");
    return zeta_[static_cast<std::size_t>(j - 1)];
}

bool Partition::contains(int j, int i) const {
    return j >= 1 && j <= num_columns() && i >= 1 && i <= zeta_[static_cast<std::size_t>(j - 1)];
}

std::vector<int> Partition::distinct_column_lengths() const {
    std::vector<int> q(zeta_.rbegin(), zeta_.rend());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

std::vector<std::pair<int, int>> Partition::blocks() const {
    std::vector<std::pair<int, int>> out;
    int prev = 0;
    for (int q : distinct_column_lengths()) {
        out.emplace_back(prev + 1, q);
        prev = q;
    }
    if (prev < n_) out.emplace_back(prev + 1, n_);
    return out;
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw validation_error("permutation must have at least one entry");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : entries_) {
        if (v < 1 || v > n)
            throw validation_error("permutation entry " + std::to_string(v) +
                                   " outside [1," + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v - 1)]++)
            throw validation_error("permutation repeats the value " + std::to_string(v));
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(e));
}

int Permutation::entry(int pos) const {
    if (pos < 1 || pos > n())
        throw validation_error("position " + std::to_string(pos) + " outside [1," +
                               std::to_string(n()) + "]");
    return entries_[static_cast<std::size_t>(pos - 1)];
}

int Permutation::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[i] > entries_[j]) ++count;
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

Permutation Permutation::value_swap(int i) const {
    if (i < 1 || i >= n())
        throw validation_error("swap index " + std::to_string(i) + " outside [1," +
                               std::to_string(n() - 1) + "]");
    std::vector<int> e = entries_;
    std::size_t pa = 0, pb = 0;
    for (std::size_t p = 0; p < e.size(); ++p) {
        if (e[p] == i) pa = p;
        if (e[p] == i + 1) pb = p;
    }
    std::swap(e[pa], e[pb]);
    return Permutation(std::move(e));
}

ReducedWord reduced_word(const Permutation& pi) {
    std::vector<int> cur = pi.entries();
    const int n = pi.n();
    std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
    ReducedWord letters;
    for (;;) {
        for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
        int chosen = 0;
        for (int i = 1; i < n; ++i) {
            if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) {
                chosen = i;
                break;
            }
        }
        if (chosen == 0) break;
        std::swap(cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(chosen)])],
                  cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(chosen + 1)])]);
        letters.push_back(chosen);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

Permutation apply_word(const ReducedWord& word, int n) {
    Permutation p = Permutation::identity(n);
    for (int letter : word) p = p.value_swap(letter);
    return p;
}

namespace {

void words_dfs(std::vector<int>& cur, std::vector<int>& acc,
               std::vector<ReducedWord>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    const int n = static_cast<int>(cur.size());
    std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
    bool any = false;
    for (int i = 1; i < n; ++i) {
        if (pos[static_cast<std::size_t>(i + 1)] >= pos[static_cast<std::size_t>(i)]) continue;
        any = true;
        std::swap(cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                  cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(i + 1)])]);
        acc.push_back(i);
        words_dfs(cur, acc, out, cap);
        acc.pop_back();
        std::swap(cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                  cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(i + 1)])]);
    }
    if (!any) {
        ReducedWord w(acc.rbegin(), acc.rend());
        out.push_back(std::move(w));
    }
}

} // namespace

std::vector<ReducedWord> all_reduced_words(const Permutation& pi, std::size_t cap) {
    std::vector<int> cur = pi.entries();
    std::vector<int> acc;
    std::vector<ReducedWord> out;
    words_dfs(cur, acc, out, cap);
    return out;
}

bool in_s_n_lambda(const Permutation& pi, const Partition& lambda) {
    if (pi.n() != lambda.n())
        throw validation_error("permutation rank " + std::to_string(pi.n()) +
                               " does not match partition rank " + std::to_string(lambda.n()));
    for (auto [lo, hi] : lambda.blocks())
        for (int p = lo; p < hi; ++p)
            if (pi.entry(p) > pi.entry(p + 1)) return false;
    return true;
}

Permutation project_s_n_lambda(const Permutation& pi, const Partition& lambda) {
    if (pi.n() != lambda.n())
        throw validation_error("permutation rank " + std::to_string(pi.n()) +
                               " does not match partition rank " + std::to_string(lambda.n()));
    std::vector<int> e = pi.entries();
    for (auto [lo, hi] : lambda.blocks())
        std::sort(e.begin() + (lo - 1), e.begin() + hi);
    return Permutation(std::move(e));
}

std::vector<Permutation> s_n_lambda(const Partition& lambda) {
    std::vector<int> e(static_cast<std::size_t>(lambda.n()));
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p(e);
        if (in_s_n_lambda(p, lambda)) out.push_back(std::move(p));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

unsigned long long s_n_lambda_count(const Partition& lambda) {
    // Product of binomials C(remaining, block size), which stays within the
    // final multinomial value the whole way.
    unsigned long long total = 1;
    int remaining = lambda.n();
    for (auto [lo, hi] : lambda.blocks()) {
        const int size = hi - lo + 1;
        for (int t = 1; t <= size; ++t) {
            unsigned long long next = total * static_cast<unsigned long long>(remaining);
            if (total != 0 && next / total != static_cast<unsigned long long>(remaining))
                throw limit_error("block permutation count overflows 64 bits");
            total = next / static_cast<unsigned long long>(t);
            --remaining;
        }
    }
    return total;
}

namespace {

void partitions_dfs(int n, int budget, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    out.emplace_back(n, acc);
    if (static_cast<int>(acc.size()) == n) return;
    // Parts are appended weakly decreasing and positive; the zero tail is
    // implicit, so every emitted shape is distinct.
    int cap = std::min(budget, acc.empty() ? budget : acc.back());
    for (int p = 1; p <= cap; ++p) {
        acc.push_back(p);
        partitions_dfs(n, budget - p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_up_to(int n, int max_cells) {
    std::vector<int> acc;
    std::vector<Partition> out;
    partitions_dfs(n, max_cells, acc, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() < b.parts();
    });
    return out;
}

Partition from_column_lengths(int n, const std::vector<int>& zeta) {
    for (std::size_t j = 0; j < zeta.size(); ++j) {
        if (zeta[j] < 1)
            throw validation_error("column length " + std::to_string(zeta[j]) +
                                   " is not positive");
        if (j > 0 && zeta[j] > zeta[j - 1])
            throw validation_error("column lengths must be weakly decreasing");
    }
    if (!zeta.empty() && zeta.front() > n)
        throw validation_error("column length " + std::to_string(zeta.front()) +
                               " exceeds the rank " + std::to_string(n));
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int z : zeta)
            if (z >= i) ++count;
        parts.push_back(count);
    }
    return Partition(n, std::move(parts));
}

} // namespace keypoly
