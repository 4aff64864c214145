#include <doctest.h>

#include <algorithm>
#include <set>

#include "keypoly/shapes.hpp"
#include "example9.hpp"

using namespace keypoly;

TEST_CASE("partition parts and column lengths") {
    const Partition lambda = example9::shape();
    CHECK(lambda.n() == 9);
    CHECK(lambda.parts() == std::vector<int>{4, 4, 3, 3, 2, 1, 1, 0, 0});
    CHECK(lambda.column_lengths() == std::vector<int>{7, 5, 4, 2});
    CHECK(lambda.num_columns() == 4);
    CHECK(lambda.cell_count() == 18);
    CHECK(lambda.part(1) == 4);
    CHECK(lambda.part(9) == 0);
    CHECK(lambda.contains(4, 2));
    CHECK_FALSE(lambda.contains(4, 3));
    CHECK(lambda.distinct_column_lengths() == std::vector<int>{2, 4, 5, 7});
    CHECK(lambda.blocks() == std::vector<std::pair<int, int>>{
                                 {1, 2}, {3, 4}, {5, 5}, {6, 7}, {8, 9}});
}

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition(3, {2, 1}));  // short part lists pad with zeros
    CHECK(Partition(3, {2, 1}).parts() == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(Partition(3, {1, 2}), validation_error);
    CHECK_THROWS_AS(Partition(3, {2, -1}), validation_error);
    CHECK_THROWS_AS(Partition(2, {3, 2, 1}), validation_error);
    CHECK_THROWS_AS(from_column_lengths(2, {3}), validation_error);
    CHECK_THROWS_AS(from_column_lengths(3, {1, 2}), validation_error);
    CHECK(from_column_lengths(3, {}).cell_count() == 0);
}

TEST_CASE("zero partition") {
    const Partition z = Partition::zero(3);
    CHECK(z.num_columns() == 0);
    CHECK(z.cell_count() == 0);
    CHECK(z.blocks() == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(s_n_lambda(z).size() == 1);  // only the identity increases on [1,n]
}

TEST_CASE("permutation basics and reduced words") {
    const Permutation pi = example9::pi();
    CHECK(pi.inversions() == 21);
    const ReducedWord w = reduced_word(pi);
    CHECK(w.size() == 21);
    CHECK(apply_word(w, 9) == pi);
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(Permutation::longest(3).entries() == std::vector<int>{3, 2, 1});

    const Permutation t = Permutation::identity(4).value_swap(2);
    CHECK(t.entries() == std::vector<int>{1, 3, 2, 4});
    CHECK(t.inversions() == 1);
}

TEST_CASE("all reduced words of small longest elements") {
    const auto words3 = all_reduced_words(Permutation::longest(3));
    const std::set<ReducedWord> expect{{1, 2, 1}, {2, 1, 2}};
    CHECK(std::set<ReducedWord>(words3.begin(), words3.end()) == expect);
    for (const ReducedWord& w : words3)
        CHECK(apply_word(w, 3) == Permutation::longest(3));

    // The longest element of rank 4 has sixteen reduced words.
    const auto words4 = all_reduced_words(Permutation::longest(4));
    CHECK(words4.size() == 16);
    CHECK(std::set<ReducedWord>(words4.begin(), words4.end()).size() == 16);
    for (const ReducedWord& w : words4) {
        CHECK(w.size() == 6);
        CHECK(apply_word(w, 4) == Permutation::longest(4));
    }
}

TEST_CASE("block increasing permutations") {
    const Partition lambda = example9::shape();
    CHECK(in_s_n_lambda(example9::pi(), lambda));
    CHECK_FALSE(in_s_n_lambda(Permutation::longest(9), lambda));
    CHECK(project_s_n_lambda(Permutation::longest(9), lambda).entries() ==
          std::vector<int>{8, 9, 6, 7, 5, 3, 4, 1, 2});

    // Shape (2,1,0) cuts [1,3] into singleton blocks, so nothing is excluded.
    const Partition small(3, {2, 1, 0});
    CHECK(s_n_lambda(small).size() == 6);
    CHECK(s_n_lambda_count(small) == 6);

    // One column of length 2 in rank 4: blocks {1,2} and {3,4}.
    const Partition col(4, {1, 1, 0, 0});
    const auto members = s_n_lambda(col);
    CHECK(members.size() == 6);
    CHECK(s_n_lambda_count(col) == 6);
    for (const Permutation& p : members) {
        CHECK(p.entry(1) < p.entry(2));
        CHECK(p.entry(3) < p.entry(4));
    }
    CHECK(s_n_lambda_count(example9::shape()) == s_n_lambda(example9::shape()).size());
}

TEST_CASE("partition sweep enumeration") {
    const auto shapes = partitions_up_to(3, 4);
    CHECK(shapes.size() == 11);
    CHECK(shapes.front().parts() == std::vector<int>{0, 0, 0});
    CHECK(shapes.back().parts() == std::vector<int>{4, 0, 0});
    CHECK(std::is_sorted(shapes.begin(), shapes.end(),
                         [](const Partition& a, const Partition& b) {
                             return a.parts() < b.parts();
                         }));
    const auto has = [&](std::vector<int> parts) {
        return std::any_of(shapes.begin(), shapes.end(), [&](const Partition& p) {
            return p.parts() == parts;
        });
    };
    CHECK(has({1, 1, 1}));  // the full column case
    CHECK(has({2, 2, 0}));
    CHECK_FALSE(has({2, 2, 1}));  // five cells, outside the budget
}
