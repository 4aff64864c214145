#include "keypoly/characters.hpp"

#include <algorithm>

namespace keypoly {

Polynomial demazure_poly(const Partition& lambda, const Permutation& pi) {
    if (pi.n() != lambda.n())
        throw validation_error("permutation rank does not match partition rank");
    Polynomial p = Polynomial::monomial(lambda.n(), lambda.parts());
    return apply_rho_word(std::move(p), reduced_word(pi));
}

Polynomial atom_poly(const Partition& lambda, const Permutation& pi) {
    if (pi.n() != lambda.n())
        throw validation_error("permutation rank does not match partition rank");
    // The atom depends on pi only through its key, so reduce to the
    // block-increasing representative before building the word. Skipping
    // this would not recover the same polynomial: a reduced word for an
    // unsorted permutation starts with a letter from the stabilizer of
    // lambda, and that first rho_bar already sends x^lambda to zero.
    Polynomial p = Polynomial::monomial(lambda.n(), lambda.parts());
    return apply_rho_bar_word(std::move(p), reduced_word(project_s_n_lambda(pi, lambda)));
}

namespace {

Polynomial weight_sum(int n, const std::vector<Tableau>& tabs) {
    Polynomial p(n);
    for (const Tableau& t : tabs) p.add_term(weight(t), 1);
    return p;
}

} // namespace

Polynomial demazure_poly_tableaux(const Partition& lambda, const Permutation& pi,
                                  const GenLimits& limits) {
    return weight_sum(lambda.n(), generate_demazure_tableaux(lambda, pi, limits));
}

Polynomial atom_poly_tableaux(const Partition& lambda, const Permutation& pi,
                              const GenLimits& limits) {
    return weight_sum(lambda.n(), generate_atom_tableaux(lambda, pi, limits));
}

Polynomial schur_poly(const Partition& lambda) {
    return demazure_poly(lambda, Permutation::longest(lambda.n()));
}

std::vector<Permutation> atom_decomposition(const Partition& lambda,
                                            const Permutation& pi) {
    const Tableau bound = make_key(lambda, pi);
    std::vector<Permutation> out;
    for (const Permutation& p : s_n_lambda(lambda))
        if (dominated_by(make_key(lambda, p), bound)) out.push_back(p);
    return out;
}

namespace {

Polynomial interval_sum(const Partition& lambda, const Permutation& sigma,
                        const Permutation& pi, bool exact, IntervalRoute route) {
    const Tableau left_key = make_key(lambda, sigma);
    const Tableau right_key = make_key(lambda, pi);
    Polynomial p(lambda.n());
    for_each_tableau(lambda, [&](const Tableau& t) {
        bool keep;
        if (route == IntervalRoute::scan) {
            if (exact)
                keep = left_scan(t).scan == left_key && right_scan(t).scan == right_key;
            else
                keep = dominated_by(left_key, left_scan(t).scan) &&
                       dominated_by(right_scan(t).scan, right_key);
        } else if (exact) {
            keep = true;
            for (int j = 1; keep && j <= lambda.num_columns(); ++j)
                for (int i = 1; keep && i <= lambda.column_length(j); ++i)
                    keep = g_set(t, left_key, j, i).contains(t.at(j, i)) &&
                           c_set(t, right_key, j, i).contains(t.at(j, i));
        } else {
            keep = true;
            const ScanResult rs = right_scan(t);
            for (int j = 1; keep && j <= lambda.num_columns(); ++j)
                for (int i = 1; keep && i <= lambda.column_length(j); ++i)
                    keep = f_set(t, left_key, j, i).contains(t.at(j, i)) &&
                           b_set(t, rs, right_key, j, i).contains(t.at(j, i));
        }
        if (keep) p.add_term(weight(t), 1);
    });
    return p;
}

} // namespace

Polynomial interval_poly_exact(const Partition& lambda, const Permutation& sigma,
                               const Permutation& pi, IntervalRoute route) {
    return interval_sum(lambda, sigma, pi, true, route);
}

Polynomial interval_poly_bounded(const Partition& lambda, const Permutation& sigma,
                                 const Permutation& pi, IntervalRoute route) {
    return interval_sum(lambda, sigma, pi, false, route);
}

bool column_inert_check(const Partition& lambda, const Permutation& pi) {
    std::vector<int> grown = lambda.parts();
    for (int& part : grown) ++part;
    const Polynomial lhs = demazure_poly(Partition(lambda.n(), std::move(grown)), pi);
    const Polynomial rhs = demazure_poly(lambda, pi).times_monomial(
        std::vector<int>(static_cast<std::size_t>(lambda.n()), 1));
    return lhs == rhs;
}

} // namespace keypoly
