// Backtracking generation of scan-bounded and scan-exact tableaux.
//
// Columns are produced east to west. A frame holds the partially built
// column (bottom up) and the live remnant of the suffix already built; the
// branch set for the next cell up is evaluated from the frame alone, and
// committing a value removes its scanning path from the remnant. A single
// skeleton serves both generators; only the branch rule differs. Seeding
// the walk with an empty suffix east of the last column makes the last
// column fall out of the same rule: the atom rule pins it to the key's last
// column, the Demazure rule lets it range over the columns it dominates.

#include "keypoly/generate.hpp"

#include <algorithm>
#include <string>

namespace keypoly {

namespace {

struct Frame {
    std::vector<int> col;                  // values placed so far, bottom up
    std::vector<std::vector<int>> live;    // remnant of the suffix, index 0 = next column east
};

int live_max(const std::vector<std::vector<int>>& cols) {
    int best = 1;
    for (const auto& col : cols)
        if (!col.empty()) best = std::max(best, col.back());
    return best;
}

std::vector<Tableau> generate_scan(const Partition& lambda, const Permutation& pi,
                                   bool exact, const GenLimits& limits) {
    const Tableau key = make_key(lambda, pi);
    const int width = lambda.num_columns();
    const int n = lambda.n();

    // Each suffix is the list of finished columns j..width, top down.
    std::vector<std::vector<std::vector<int>>> suffixes{{}};
    for (int j = width; j >= 1; --j) {
        const int len = lambda.column_length(j);
        std::vector<std::vector<std::vector<int>>> grown;
        for (const auto& suffix : suffixes) {
            std::vector<Frame> frames{Frame{{}, suffix}};
            for (int i = len; i >= 1 && !frames.empty(); --i) {
                std::vector<Frame> step;
                for (const Frame& f : frames) {
                    const int south = f.col.empty() ? n + 1 : f.col.back();
                    int east = n;
                    if (!suffix.empty() &&
                        static_cast<int>(suffix.front().size()) >= i)
                        east = suffix.front()[static_cast<std::size_t>(i - 1)];
                    const int m_u = live_max(f.live);
                    const int y = key.at(j, i);
                    const std::vector<int> branch =
                        exact ? atom_branch(m_u, y, i, south, east)
                              : demazure_branch(m_u, y, i, south, east);
                    for (int z : branch) {
                        if (step.size() >= limits.max_frames)
                            throw limit_error("generator frame cap of " +
                                              std::to_string(limits.max_frames) +
                                              " exceeded at column " + std::to_string(j));
                        Frame g = f;
                        g.col.push_back(z);
                        ewis_remove(g.live, 0, z);
                        step.push_back(std::move(g));
                    }
                }
                frames = std::move(step);
            }
            for (Frame& f : frames) {
                std::vector<std::vector<int>> cols;
                cols.reserve(suffix.size() + 1);
                cols.emplace_back(f.col.rbegin(), f.col.rend());
                cols.insert(cols.end(), suffix.begin(), suffix.end());
                if (grown.size() >= limits.max_frames)
                    throw limit_error("generator frame cap of " +
                                      std::to_string(limits.max_frames) +
                                      " exceeded at column " + std::to_string(j));
                grown.push_back(std::move(cols));
            }
        }
        suffixes = std::move(grown);
    }

    std::vector<Tableau> out;
    out.reserve(suffixes.size());
    for (auto& cols : suffixes) {
        try {
            out.emplace_back(lambda, std::move(cols));
        } catch (const validation_error& e) {
            throw internal_error(std::string("generator emitted a non-tableau: ") +
                                 e.what());
        }
    }
    return out;
}

} // namespace

std::vector<Tableau> generate_demazure_tableaux(const Partition& lambda,
                                                const Permutation& pi,
                                                const GenLimits& limits) {
    return generate_scan(lambda, pi, false, limits);
}

std::vector<Tableau> generate_atom_tableaux(const Partition& lambda,
                                            const Permutation& pi,
                                            const GenLimits& limits) {
    return generate_scan(lambda, pi, true, limits);
}

std::vector<Tableau> filter_oracle(const Partition& lambda,
                                   const Permutation& perm, FilterKind kind) {
    const Tableau key = make_key(lambda, perm);
    std::vector<Tableau> out;
    for_each_tableau(lambda, [&](const Tableau& t) {
        bool keep = false;
        switch (kind) {
        case FilterKind::right_bounded:
            keep = dominated_by(right_scan(t).scan, key);
            break;
        case FilterKind::right_exact:
            keep = right_scan(t).scan == key;
            break;
        case FilterKind::left_bounded:
            keep = dominated_by(key, left_scan(t).scan);
            break;
        case FilterKind::left_exact:
            keep = left_scan(t).scan == key;
            break;
        }
        if (keep) out.push_back(t);
    });
    return out;
}

} // namespace keypoly
