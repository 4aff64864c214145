#pragma once

#include <vector>

#include "keypoly/generate.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

// Key polynomial (Demazure character) and Demazure atom, by the operator
// route: start from the monomial x^lambda and apply rho (or rho_bar) along
// a reduced word of pi, first letter first. The result is independent of
// the chosen reduced word.
//
// Both polynomials are indexed by the key of pi, so permutations in the same
// block-sorting class name the same polynomial. demazure_poly gets this for
// free (the extra rho letters fix x^lambda); atom_poly must sort pi within
// its blocks first, because the raw rho_bar word of an unsorted permutation
// annihilates x^lambda instead of reproducing the atom of its key.
Polynomial demazure_poly(const Partition& lambda, const Permutation& pi);
Polynomial atom_poly(const Partition& lambda, const Permutation& pi);

// The same polynomials by the tableau route: the content generating sum over
// the generated scan-bounded (scan-exact) tableaux. Always equal to the
// operator route.
Polynomial demazure_poly_tableaux(const Partition& lambda, const Permutation& pi,
                                  const GenLimits& limits = {});
Polynomial atom_poly_tableaux(const Partition& lambda, const Permutation& pi,
                              const GenLimits& limits = {});

// Schur polynomial in n variables: the key polynomial of the longest
// permutation.
Polynomial schur_poly(const Partition& lambda);

// The block-increasing permutations pi' whose key is dominated by the key of
// pi; summing atom_poly over them yields demazure_poly. Lexicographic order.
std::vector<Permutation> atom_decomposition(const Partition& lambda,
                                            const Permutation& pi);

// Content sums over tableaux pinched between a left key bound and a right
// key bound. The exact form keeps tableaux with M(T) equal to the key of
// sigma and S(T) equal to the key of pi; the bounded form keeps
// M(T) >= key(sigma) and S(T) <= key(pi). Route scan filters by the scans
// themselves; route cellwise filters by the condition sets (G and C for the
// exact form, F and B for the bounded form). The routes agree.
enum class IntervalRoute { scan, cellwise };

Polynomial interval_poly_exact(const Partition& lambda, const Permutation& sigma,
                               const Permutation& pi,
                               IntervalRoute route = IntervalRoute::scan);
Polynomial interval_poly_bounded(const Partition& lambda, const Permutation& sigma,
                                 const Permutation& pi,
                                 IntervalRoute route = IntervalRoute::scan);

// Appending a full column of length n multiplies the key polynomial by
// x_1 x_2 ... x_n. Returns true iff the identity holds for lambda and pi
// with both sides computed independently.
bool column_inert_check(const Partition& lambda, const Permutation& pi);

} // namespace keypoly
