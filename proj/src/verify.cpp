// Verification suites. Every check is exhaustive over its stated range and
// compares independent routes to the same object: operator algebra against
// tableau generation, scans against cellwise condition sets, closed formulas
// against brute force. The per-case work is pure, so the heavy sweeps fan
// out across worker threads and aggregation is the only synchronization.

#include "keypoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "keypoly/characters.hpp"
#include "keypoly/serialize.hpp"

namespace keypoly {

namespace {

// Shared fixture: the nine variable worked example threaded through the
// suites below.
namespace example9 {
constexpr int n = 9;
const std::vector<int> zeta{7, 5, 4, 2};
const std::vector<int> pi_entries{6, 8, 3, 7, 4, 1, 9, 2, 5};
const std::vector<std::vector<int>> key_cols{
    {1, 3, 4, 6, 7, 8, 9}, {3, 4, 6, 7, 8}, {3, 6, 7, 8}, {6, 8}};
const std::vector<std::vector<int>> filled_cols{
    {1, 2, 4, 5, 6, 7, 9}, {1, 3, 5, 6, 7}, {3, 4, 7, 8}, {6, 8}};
const std::vector<int> filled_weight{2, 1, 2, 2, 2, 3, 3, 2, 1};

Partition shape() { return from_column_lengths(n, zeta); }
} // namespace example9

struct Failures {
    std::mutex mu;
    std::vector<std::string> messages;

    void add(std::string msg) {
        std::lock_guard<std::mutex> lock(mu);
        messages.push_back(std::move(msg));
    }
    bool empty() {
        std::lock_guard<std::mutex> lock(mu);
        return messages.empty();
    }
    std::string first() {
        std::lock_guard<std::mutex> lock(mu);
        std::sort(messages.begin(), messages.end());
        return messages.empty() ? std::string() : messages.front();
    }
};

void parallel_cases(std::size_t count, int jobs,
                    const std::function<void(std::size_t)>& fn, Failures& fails) {
    if (count == 0) return;
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= count) return;
            try {
                fn(idx);
            } catch (const std::exception& e) {
                fails.add(std::string("exception: ") + e.what());
            }
        }
    };
    if (workers <= 1) {
        body();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

std::string describe(const Partition& lambda, const Permutation& pi) {
    std::ostringstream os;
    os << "lambda=" << to_json(lambda).dump() << " pi=" << to_json(pi).dump();
    return os.str();
}

// Every (rank, shape) pair in the sweep range, shapes of full column count
// and trailing zeros included.
std::vector<Partition> sweep_shapes(const VerifyOptions& opts, int n_cap) {
    std::vector<Partition> shapes;
    for (int n = 1; n <= std::min(opts.n_max, n_cap); ++n)
        for (const Partition& lambda : partitions_up_to(n, opts.max_cells))
            shapes.push_back(lambda);
    return shapes;
}

std::vector<Permutation> all_perms(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Check 1: regression on the worked example. Key construction, scan of the
// filled tableau, and the branch sets of the partial generator state,
// including both branch deaths.

void check_example_regression(const VerifyOptions&, Failures& fails, long long& cases) {
    using namespace example9;
    const Partition lambda = shape();
    const Permutation pi(pi_entries);

    if (lambda.column_lengths() != zeta) fails.add("column lengths of the example shape are wrong");
    const Tableau key = make_key(lambda, pi);
    if (key.columns() != key_cols) fails.add("key of the worked example is wrong");
    if (!in_s_n_lambda(pi, lambda)) fails.add("example permutation should be block increasing");
    if (static_cast<int>(reduced_word(pi).size()) != 21)
        fails.add("example reduced word length is not 21");
    if (apply_word(reduced_word(pi), n).entries() != pi_entries)
        fails.add("example reduced word does not rebuild the permutation");

    const Tableau filled(lambda, filled_cols);
    if (weight(filled) != filled_weight) fails.add("example filled tableau weight is wrong");
    if (is_key(filled)) fails.add("example filled tableau should not be a key");
    if (!dominated_by(filled, key)) fails.add("example filled tableau should be dominated by the key");
    if (!(right_scan(filled).scan == key)) fails.add("right scan of the example filled tableau is not the key");
    if (!is_exact_demazure(filled, pi, Route::cellwise))
        fails.add("cellwise exactness fails on the example filled tableau");

    // Partial state with columns 3 and 4 finished and the values 7, 6 placed
    // at the bottom of column 2. The suffix starts as columns (3,4,7,8) and
    // (6,8); removing the scanning paths of 7 and then 6 leaves (3,4),(6).
    std::vector<std::vector<int>> live{{3, 4, 7, 8}, {6, 8}};
    std::vector<int> path_values;
    ewis_remove(live, 0, 7, nullptr, &path_values);
    if (path_values != std::vector<int>{8, 8}) fails.add("first example path is wrong");
    path_values.clear();
    ewis_remove(live, 0, 6, nullptr, &path_values);
    if (path_values != std::vector<int>{7}) fails.add("second example path is wrong");
    if (!(live == std::vector<std::vector<int>>{{3, 4}, {6}}))
        fails.add("example live suffix after removals is wrong");
    int m_u = 1;
    for (const auto& col : live)
        if (!col.empty()) m_u = std::max(m_u, col.back());
    if (m_u != 6) fails.add("example live suffix maximum is not 6");

    // Branch set at (2,3): south neighbour already placed is 6, east is
    // T(3,3) = 7, key value 6.
    if (atom_branch(m_u, key.at(2, 3), 3, 6, 7) != std::vector<int>{3, 4, 5})
        fails.add("branch set at (2,3) is not {3,4,5}");

    // Choosing z removes its path from the live suffix, then the branch at
    // (2,2) has key value 4 and east T(3,2) = 4. z = 3 and z = 4 die.
    for (int z : {3, 4, 5}) {
        std::vector<std::vector<int>> next = live;
        ewis_remove(next, 0, z);
        int m2 = 1;
        for (const auto& col : next)
            if (!col.empty()) m2 = std::max(m2, col.back());
        const std::vector<int> branch = atom_branch(m2, key.at(2, 2), 2, z, 4);
        if (z == 5) {
            if (branch != std::vector<int>{2, 3, 4})
                fails.add("branch set at (2,2) after z=5 is not [2,4]");
        } else if (!branch.empty()) {
            fails.add("branch at (2,2) after z=" + std::to_string(z) + " should be empty");
        }
    }
    cases += 1;
}

// ---------------------------------------------------------------------------
// Check 2: the divided difference operator on one frozen monomial.

void check_rho_example(const VerifyOptions&, Failures& fails, long long& cases) {
    const Polynomial p = Polynomial::monomial(4, {3, 7, 4, 9});
    Polynomial expected(4);
    expected.add_term({3, 7, 4, 9}, 1);
    expected.add_term({3, 6, 5, 9}, 1);
    expected.add_term({3, 5, 6, 9}, 1);
    expected.add_term({3, 4, 7, 9}, 1);
    const Polynomial by_division = rho_by_division(p, 2);
    const Polynomial by_strings = rho_by_strings(p, 2);
    if (!(by_division == expected)) fails.add("division route value of rho_2 is wrong");
    if (!(by_strings == expected)) fails.add("string route value of rho_2 is wrong");
    Polynomial expected_bar = expected;
    expected_bar.add_term({3, 7, 4, 9}, -1);
    if (!(rho_bar(p, 2) == expected_bar)) fails.add("rho_bar_2 value is wrong");
    cases += 1;
}

// ---------------------------------------------------------------------------
// Checks 3 and 4: dual routes for Demazure characters and atoms. For every
// shape in range and every permutation, the operator polynomial, the
// generator polynomial and the brute force filter must agree, and the
// generator must emit exactly the filtered tableau set.

void check_poly_routes(const VerifyOptions& opts, Failures& fails, long long& cases,
                       bool exact) {
    const std::vector<Partition> shapes = sweep_shapes(opts, opts.n_max);
    std::atomic<long long> counter{0};
    parallel_cases(shapes.size(), opts.jobs, [&](std::size_t idx) {
        const Partition& lambda = shapes[idx];
        for (const Permutation& pi : all_perms(lambda.n())) {
            const Polynomial op = exact ? atom_poly(lambda, pi) : demazure_poly(lambda, pi);
            const std::vector<Tableau> gen =
                exact ? generate_atom_tableaux(lambda, pi)
                      : generate_demazure_tableaux(lambda, pi);
            Polynomial from_gen(lambda.n());
            for (const Tableau& t : gen) from_gen.add_term(weight(t), 1);
            if (!(op == from_gen)) {
                fails.add("operator and generator routes disagree for " +
                          describe(lambda, pi));
                continue;
            }
            std::vector<Tableau> oracle = filter_oracle(
                lambda, pi, exact ? FilterKind::right_exact : FilterKind::right_bounded);
            std::vector<Tableau> sorted_gen = gen;
            std::sort(sorted_gen.begin(), sorted_gen.end());
            std::sort(oracle.begin(), oracle.end());
            if (!(sorted_gen == oracle))
                fails.add("generator and filter oracle disagree for " +
                          describe(lambda, pi));
            counter += 1;
        }
    }, fails);
    cases += counter.load();
}

void check_demazure_routes(const VerifyOptions& opts, Failures& fails, long long& cases) {
    check_poly_routes(opts, fails, cases, false);
}

void check_atom_routes(const VerifyOptions& opts, Failures& fails, long long& cases) {
    check_poly_routes(opts, fails, cases, true);
}

// ---------------------------------------------------------------------------
// Check 5: the cellwise condition sets decide exactly what the scans decide,
// for every tableau of every shape in range and every permutation.

void check_set_criteria(const VerifyOptions& opts, Failures& fails, long long& cases) {
    const std::vector<Partition> shapes = sweep_shapes(opts, opts.n_max);
    std::atomic<long long> counter{0};
    parallel_cases(shapes.size(), opts.jobs, [&](std::size_t idx) {
        const Partition& lambda = shapes[idx];
        const std::vector<Permutation> perms = all_perms(lambda.n());
        std::vector<Tableau> keys;
        keys.reserve(perms.size());
        for (const Permutation& p : perms) keys.push_back(make_key(lambda, p));
        for_each_tableau(lambda, [&](const Tableau& t) {
            const ScanResult rs = right_scan(t);
            const Tableau ls = left_scan(t).scan;
            for (std::size_t pi_idx = 0; pi_idx < perms.size(); ++pi_idx) {
                const Tableau& key = keys[pi_idx];
                bool cell_a = true, cell_b = true, cell_c = true;
                bool cell_f = true, cell_g = true;
                for (int j = 1; j <= lambda.num_columns(); ++j) {
                    for (int i = 1; i <= lambda.column_length(j); ++i) {
                        const int v = t.at(j, i);
                        cell_a = cell_a && a_set(t, key, j, i).contains(v);
                        cell_b = cell_b && b_set(t, rs, key, j, i).contains(v);
                        cell_c = cell_c && c_set(t, key, j, i).contains(v);
                        cell_f = cell_f && f_set(t, key, j, i).contains(v);
                        cell_g = cell_g && g_set(t, key, j, i).contains(v);
                    }
                }
                const bool right_bounded = dominated_by(rs.scan, key);
                const bool right_exact = rs.scan == key;
                const bool left_bounded = dominated_by(key, ls);
                const bool left_exact = ls == key;
                if (cell_a != right_bounded || cell_b != right_bounded)
                    fails.add("A/B sets disagree with the right scan bound for " +
                              describe(lambda, perms[pi_idx]) + " tableau " +
                              to_json(t).dump());
                if (cell_c != right_exact)
                    fails.add("C sets disagree with right scan equality for " +
                              describe(lambda, perms[pi_idx]) + " tableau " +
                              to_json(t).dump());
                if (cell_f != left_bounded)
                    fails.add("F sets disagree with the left scan bound for " +
                              describe(lambda, perms[pi_idx]) + " tableau " +
                              to_json(t).dump());
                if (cell_g != left_exact)
                    fails.add("G sets disagree with left scan equality for " +
                              describe(lambda, perms[pi_idx]) + " tableau " +
                              to_json(t).dump());
                counter += 1;
            }
        });
    }, fails);
    cases += counter.load();
}

// ---------------------------------------------------------------------------
// Check 6: scan invariants. T <= S(T), M(T) <= T, both scans are keys, keys
// are fixed points, per-origin paths are disjoint, and the scan entries
// match the remnant bottom maxima cellwise.

void check_scan_invariants(const VerifyOptions& opts, Failures& fails, long long& cases) {
    const std::vector<Partition> shapes = sweep_shapes(opts, opts.n_max);
    std::atomic<long long> counter{0};
    parallel_cases(shapes.size(), opts.jobs, [&](std::size_t idx) {
        const Partition& lambda = shapes[idx];
        for_each_tableau(lambda, [&](const Tableau& t) {
            const ScanResult rs = right_scan(t);
            const ScanResult ls = left_scan(t);
            if (!dominated_by(t, rs.scan))
                fails.add("tableau not dominated by its right scan: " + to_json(t).dump());
            if (!dominated_by(ls.scan, t))
                fails.add("left scan not dominated by its tableau: " + to_json(t).dump());
            if (!is_key(rs.scan))
                fails.add("right scan is not a key: " + to_json(t).dump());
            if (!is_key(ls.scan))
                fails.add("left scan is not a key: " + to_json(t).dump());
            for (int j = 1; j <= lambda.num_columns(); ++j) {
                std::set<Cell> seen;
                for (int i = 1; i <= lambda.column_length(j); ++i) {
                    if (rs.scan.at(j, i) != scan_value_from_remnant(t, j, i))
                        fails.add("scan entry differs from remnant maximum at (" +
                                  std::to_string(j) + "," + std::to_string(i) +
                                  ") of " + to_json(t).dump());
                    for (const Cell& c : rs.path(j, i).cells)
                        if (!seen.insert(c).second)
                            fails.add("paths from column " + std::to_string(j) +
                                      " overlap in " + to_json(t).dump());
                }
            }
            counter += 1;
        });
        for (const Permutation& p : s_n_lambda(lambda)) {
            const Tableau key = make_key(lambda, p);
            if (!(right_scan(key).scan == key))
                fails.add("key is not fixed by the right scan: " + to_json(key).dump());
            if (!(left_scan(key).scan == key))
                fails.add("key is not fixed by the left scan: " + to_json(key).dump());
            counter += 1;
        }
    }, fails);
    cases += counter.load();
}

// ---------------------------------------------------------------------------
// Check 7: atoms decompose characters and partition the tableau set, and the
// block count formula matches the enumeration.

void check_decomposition(const VerifyOptions& opts, Failures& fails, long long& cases) {
    const std::vector<Partition> shapes = sweep_shapes(opts, opts.n_max);
    std::atomic<long long> counter{0};
    parallel_cases(shapes.size(), opts.jobs, [&](std::size_t idx) {
        const Partition& lambda = shapes[idx];
        const std::vector<Permutation> members = s_n_lambda(lambda);
        if (s_n_lambda_count(lambda) != members.size())
            fails.add("block count formula disagrees with enumeration for lambda=" +
                      to_json(lambda).dump());
        std::vector<Tableau> all_atoms;
        std::vector<Polynomial> atom_polys;
        for (const Permutation& p : members) {
            const std::vector<Tableau> atom = generate_atom_tableaux(lambda, p);
            all_atoms.insert(all_atoms.end(), atom.begin(), atom.end());
            atom_polys.push_back(atom_poly(lambda, p));
        }
        std::sort(all_atoms.begin(), all_atoms.end());
        if (std::adjacent_find(all_atoms.begin(), all_atoms.end()) != all_atoms.end())
            fails.add("atom tableau sets overlap for lambda=" + to_json(lambda).dump());
        std::vector<Tableau> everything = all_tableaux(lambda);
        std::sort(everything.begin(), everything.end());
        if (!(all_atoms == everything))
            fails.add("atom tableau sets do not cover the shape for lambda=" +
                      to_json(lambda).dump());
        for (const Permutation& pi : all_perms(lambda.n())) {
            const Tableau bound = make_key(lambda, pi);
            Polynomial sum(lambda.n());
            std::vector<Permutation> picked;
            for (std::size_t m = 0; m < members.size(); ++m) {
                if (dominated_by(make_key(lambda, members[m]), bound)) {
                    sum += atom_polys[m];
                    picked.push_back(members[m]);
                }
            }
            if (!(sum == demazure_poly(lambda, pi)))
                fails.add("atom decomposition does not sum to the character for " +
                          describe(lambda, pi));
            if (!(picked == atom_decomposition(lambda, pi)))
                fails.add("atom decomposition list is wrong for " + describe(lambda, pi));
            counter += 1;
        }
    }, fails);
    cases += counter.load();
}

// ---------------------------------------------------------------------------
// Check 8: operator algebra. Idempotence, braid and commutation relations on
// random polynomials, and independence of the character from the chosen
// reduced word.

Polynomial random_poly(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> term_count(1, 6);
    std::uniform_int_distribution<int> exponent(0, 8);
    std::uniform_int_distribution<int> coefficient(-9, 9);
    Polynomial p(n);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        int total;
        do {
            total = 0;
            for (int v = 0; v < n; ++v) {
                e[static_cast<std::size_t>(v)] = exponent(rng);
                total += e[static_cast<std::size_t>(v)];
            }
        } while (total > 8);
        int c = coefficient(rng);
        if (c == 0) c = 1;
        p.add_term(e, c);
    }
    return p;
}

void check_operator_algebra(const VerifyOptions& opts, Failures& fails, long long& cases) {
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> rank(2, std::max(2, opts.n_max));
    for (int s = 0; s < opts.samples; ++s) {
        const int n = rank(rng);
        const Polynomial p = random_poly(n, rng);
        for (int i = 1; i < n; ++i) {
            const Polynomial r = rho(p, i);
            if (!(rho(r, i) == r))
                fails.add("rho_" + std::to_string(i) + " is not idempotent on " + p.to_text());
            const Polynomial rb = rho_bar(p, i);
            if (!(rho_bar(rb, i) == -rb))
                fails.add("rho_bar_" + std::to_string(i) + " squared is not minus itself on " +
                          p.to_text());
        }
        for (int i = 1; i + 1 < n; ++i) {
            if (!(rho(rho(rho(p, i), i + 1), i) == rho(rho(rho(p, i + 1), i), i + 1)))
                fails.add("rho braid relation fails at i=" + std::to_string(i) + " on " +
                          p.to_text());
            if (!(rho_bar(rho_bar(rho_bar(p, i), i + 1), i) ==
                  rho_bar(rho_bar(rho_bar(p, i + 1), i), i + 1)))
                fails.add("rho_bar braid relation fails at i=" + std::to_string(i) + " on " +
                          p.to_text());
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(rho(rho(p, i), j) == rho(rho(p, j), i)))
                    fails.add("distant rho operators do not commute on " + p.to_text());
        cases += 1;
    }
    // Word independence for every permutation of the largest rank in range.
    const int n = opts.n_max;
    const std::vector<Partition> shapes = partitions_up_to(n, std::min(4, opts.max_cells));
    for (const Permutation& pi : all_perms(n)) {
        const std::vector<ReducedWord> words = all_reduced_words(pi);
        for (const Partition& lambda : shapes) {
            const Polynomial base = Polynomial::monomial(n, lambda.parts());
            const Polynomial d0 = apply_rho_word(base, words.front());
            const Polynomial c0 = apply_rho_bar_word(base, words.front());
            for (std::size_t w = 1; w < words.size(); ++w) {
                if (!(apply_rho_word(base, words[w]) == d0))
                    fails.add("character depends on the reduced word for " +
                              describe(lambda, pi));
                if (!(apply_rho_bar_word(base, words[w]) == c0))
                    fails.add("atom depends on the reduced word for " +
                              describe(lambda, pi));
            }
            cases += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Check 9: interval polynomials agree across the scan route and the cellwise
// route, and are zero unless the two keys are comparable.

void check_interval(const VerifyOptions& opts, Failures& fails, long long& cases) {
    VerifyOptions capped = opts;
    capped.n_max = std::min(opts.n_max, 3);
    const std::vector<Partition> shapes = sweep_shapes(capped, capped.n_max);
    std::atomic<long long> counter{0};
    parallel_cases(shapes.size(), opts.jobs, [&](std::size_t idx) {
        const Partition& lambda = shapes[idx];
        const std::vector<Permutation> perms = all_perms(lambda.n());
        for (const Permutation& sigma : perms) {
            for (const Permutation& pi : perms) {
                const Polynomial exact_scan =
                    interval_poly_exact(lambda, sigma, pi, IntervalRoute::scan);
                const Polynomial exact_cell =
                    interval_poly_exact(lambda, sigma, pi, IntervalRoute::cellwise);
                if (!(exact_scan == exact_cell))
                    fails.add("exact interval routes disagree for " + describe(lambda, pi) +
                              " sigma=" + to_json(sigma).dump());
                const Polynomial bounded_scan =
                    interval_poly_bounded(lambda, sigma, pi, IntervalRoute::scan);
                const Polynomial bounded_cell =
                    interval_poly_bounded(lambda, sigma, pi, IntervalRoute::cellwise);
                if (!(bounded_scan == bounded_cell))
                    fails.add("bounded interval routes disagree for " + describe(lambda, pi) +
                              " sigma=" + to_json(sigma).dump());
                const bool comparable = dominated_by(make_key(lambda, sigma),
                                                     make_key(lambda, pi));
                if (!comparable && !exact_scan.is_zero())
                    fails.add("exact interval is nonzero for incomparable keys in " +
                              describe(lambda, pi) + " sigma=" + to_json(sigma).dump());
                if (!comparable && !bounded_scan.is_zero())
                    fails.add("bounded interval is nonzero for incomparable keys in " +
                              describe(lambda, pi) + " sigma=" + to_json(sigma).dump());
                counter += 1;
            }
        }
    }, fails);
    cases += counter.load();
}

// ---------------------------------------------------------------------------
// Check 10: appending a full column multiplies the character by x_1...x_n.

void check_column_inert(const VerifyOptions& opts, Failures& fails, long long& cases) {
    const int n = std::min(opts.n_max, 3);
    for (const Partition& lambda : partitions_up_to(n, std::min(4, opts.max_cells))) {
        for (const Permutation& pi : all_perms(n)) {
            if (!column_inert_check(lambda, pi))
                fails.add("full column inertness fails for " + describe(lambda, pi));
            cases += 1;
        }
    }
}

// ---------------------------------------------------------------------------

using CheckFn = void (*)(const VerifyOptions&, Failures&, long long&);

struct CheckDef {
    const char* name;
    CheckFn fn;
};

const CheckDef kChecks[] = {
    {"example-regression", check_example_regression},
    {"rho-example", check_rho_example},
    {"demazure-routes", check_demazure_routes},
    {"atom-routes", check_atom_routes},
    {"set-criteria", check_set_criteria},
    {"scan-invariants", check_scan_invariants},
    {"decomposition", check_decomposition},
    {"operator-algebra", check_operator_algebra},
    {"interval", check_interval},
    {"column-inert", check_column_inert},
};

std::vector<const CheckDef*> checks_for(const std::string& suite) {
    std::vector<const CheckDef*> out;
    auto add = [&](const char* name) {
        for (const CheckDef& def : kChecks)
            if (name == std::string(def.name)) out.push_back(&def);
    };
    if (suite == "all") {
        for (const CheckDef& def : kChecks) out.push_back(&def);
    } else if (suite == "dual-route") {
        add("demazure-routes");
        add("atom-routes");
    } else {
        add(suite.c_str());
    }
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names{"all", "dual-route"};
    for (const CheckDef& def : kChecks) names.emplace_back(def.name);
    return names;
}

bool is_suite(const std::string& name) {
    const std::vector<std::string> names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(
    const std::string& name, const VerifyOptions& opts,
    const std::function<void(const CheckResult&)>& report) {
    if (!is_suite(name)) throw validation_error("unknown verify suite: " + name);
    std::vector<CheckResult> results;
    for (const CheckDef* def : checks_for(name)) {
        CheckResult r;
        r.name = def->name;
        Failures fails;
        const auto start = std::chrono::steady_clock::now();
        try {
            def->fn(opts, fails, r.cases);
        } catch (const std::exception& e) {
            fails.add(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        r.pass = fails.empty();
        r.detail = fails.first();
        if (report) report(r);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace keypoly
