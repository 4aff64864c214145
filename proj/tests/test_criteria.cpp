#include <doctest.h>

#include <algorithm>

#include "keypoly/criteria.hpp"
#include "example9.hpp"

using namespace keypoly;

TEST_CASE("branch sets from the worked example partial state") {
    // At (2,3) with live maximum 6, key value 6, placed value 6 beneath and
    // 7 to the east, the choices are 3, 4, 5.
    CHECK(atom_branch(6, 6, 3, 6, 7) == std::vector<int>{3, 4, 5});
    // Choosing 3 or 4 leaves a live maximum below the key value 4 at (2,2)
    // and the east neighbour caps the interval away from it: dead branch.
    CHECK(atom_branch(3, 4, 2, 3, 4).empty());
    CHECK(atom_branch(3, 4, 2, 4, 4).empty());
    // Choosing 5 keeps the live maximum at the key value: the full interval.
    CHECK(atom_branch(4, 4, 2, 5, 4) == std::vector<int>{2, 3, 4});
}

TEST_CASE("demazure branch is the bounded interval") {
    CHECK(demazure_branch(6, 6, 3, 6, 7) == std::vector<int>{3, 4, 5});
    CHECK(demazure_branch(3, 4, 2, 4, 4) == std::vector<int>{2, 3});
    // A live value above the key value kills the cell outright.
    CHECK(demazure_branch(7, 6, 3, 6, 7).empty());
    CHECK(atom_branch(7, 6, 3, 6, 7).empty());
}

TEST_CASE("condition sets on the worked example") {
    const Tableau filled = example9::filled();
    const Permutation pi = example9::pi();
    // The filled tableau scans exactly to the key, so every cell value lies
    // in all three right hand side sets.
    for (int l = 1; l <= 4; ++l)
        for (int k = 1; k <= filled.shape().column_length(l); ++k) {
            const int v = filled.at(l, k);
            CAPTURE(l);
            CAPTURE(k);
            CHECK(a_set(filled, pi, l, k).contains(v));
            CHECK(b_set(filled, pi, l, k).contains(v));
            CHECK(c_set(filled, pi, l, k).contains(v));
        }
    CHECK(is_demazure(filled, pi));
    CHECK(is_demazure(filled, pi, Route::cellwise));
    CHECK(is_exact_demazure(filled, pi));
    CHECK(is_exact_demazure(filled, pi, Route::cellwise));
    // Against the identity's key the scan is far too large.
    CHECK_FALSE(is_demazure(filled, Permutation::identity(9)));
    CHECK_FALSE(is_demazure(filled, Permutation::identity(9), Route::cellwise));
}

TEST_CASE("left sets force values beyond the original entries") {
    // Columns (1,2) and (2,3): left exact for the identity, and the G set at
    // (2,1) must read the truncated state, not the original tableau, to
    // admit the value 2 that actually sits there.
    const Tableau t(Partition(3, {2, 2, 0}), {{1, 2}, {2, 3}});
    const Permutation id = Permutation::identity(3);
    CHECK(is_left_exact(t, id));
    CHECK(is_left_exact(t, id, Route::cellwise));
    CHECK(g_set(t, id, 2, 1).values == std::vector<int>{1, 2});
    CHECK(is_left_bounded(t, id));
    CHECK(is_left_bounded(t, id, Route::cellwise));

    const ConditionSet f = f_set(t, id, 2, 1);
    CHECK(f.kind == SetKind::F);
    CHECK(f.col == 2);
    CHECK(f.row == 1);
    CHECK(f.contains(2));
}

TEST_CASE("cellwise routes agree exhaustively on a small shape") {
    const Partition lambda(3, {2, 1, 0});
    std::vector<Permutation> perms;
    {
        std::vector<int> e{1, 2, 3};
        do perms.emplace_back(e);
        while (std::next_permutation(e.begin(), e.end()));
    }
    for_each_tableau(lambda, [&](const Tableau& t) {
        const std::string pic = render(t);
        for (const Permutation& p : perms) {
            CAPTURE(pic);
            CHECK(is_demazure(t, p) == is_demazure(t, p, Route::cellwise));
            CHECK(is_exact_demazure(t, p) == is_exact_demazure(t, p, Route::cellwise));
            CHECK(is_left_bounded(t, p) == is_left_bounded(t, p, Route::cellwise));
            CHECK(is_left_exact(t, p) == is_left_exact(t, p, Route::cellwise));
        }
    });
}

TEST_CASE("sets reject cells outside the shape") {
    const Tableau t(Partition(3, {2, 1, 0}), {{1, 2}, {1}});
    const Permutation id = Permutation::identity(3);
    CHECK_THROWS_AS(a_set(t, id, 2, 2), validation_error);
    CHECK_THROWS_AS(g_set(t, id, 3, 1), validation_error);
}
