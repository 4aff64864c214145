#include <doctest.h>

#include <algorithm>

#include "keypoly/tableau.hpp"
#include "example9.hpp"

using namespace keypoly;

namespace {

// Independent count of semistandard tableaux with entries bounded by n: the
// hook-free ratio form of the Weyl dimension formula,
// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
long long tableau_count_formula(const Partition& lambda) {
    long long num = 1, den = 1;
    for (int i = 1; i <= lambda.n(); ++i)
        for (int j = i + 1; j <= lambda.n(); ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

} // namespace

TEST_CASE("cell access and boundary conventions") {
    const Tableau t = example9::filled();
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(3, 2) == 4);
    CHECK(t.at(4, 2) == 8);
    // West of column 1 reads the row index, east of the last column reads n,
    // south of a column bottom reads n + 1.
    CHECK(t.west(1, 3) == 3);
    CHECK(t.west(2, 3) == t.at(1, 3));
    CHECK(t.east(4, 1) == 9);
    CHECK(t.east(2, 2) == t.at(3, 2));
    CHECK(t.south(1, 7) == 10);
    CHECK(t.south(2, 3) == t.at(2, 4));
    CHECK_THROWS_AS(t.at(5, 1), validation_error);
    CHECK_THROWS_AS(t.at(1, 8), validation_error);
}

TEST_CASE("tableau validation names the offending cell") {
    const Partition lambda(3, {2, 1, 0});
    CHECK_THROWS_WITH_AS(Tableau(lambda, {{2, 2}, {1}}),
                         "column not strictly increasing at (1,2)", validation_error);
    CHECK_THROWS_WITH_AS(Tableau(lambda, {{1, 2}, {4}}),
                         "value 4 outside [1,3] at (2,1)", validation_error);
    CHECK_THROWS_WITH_AS(Tableau(lambda, {{2, 3}, {1}}),
                         "row not weakly increasing at (2,1)", validation_error);
    CHECK_THROWS_AS(Tableau(lambda, {{1, 2}}), validation_error);
    CHECK_NOTHROW(Tableau(lambda, {{1, 2}, {1}}));
}

TEST_CASE("weight and key recognition") {
    CHECK(weight(example9::filled()) == example9::filled_weight);
    CHECK_FALSE(is_key(example9::filled()));
    CHECK(is_key(example9::key()));
    CHECK(is_key(Tableau::minimal(example9::shape())));
    CHECK(weight(Tableau::minimal(example9::shape())) == example9::shape().parts());
}

TEST_CASE("key construction from the worked example") {
    const Tableau key = make_key(example9::shape(), example9::pi());
    CHECK(key.columns() == example9::key_cols);
    CHECK(key_to_perm(key) == example9::pi());
    // The key only depends on the block increasing representative.
    const Permutation shuffled({8, 6, 7, 3, 4, 1, 9, 5, 2});
    CHECK(make_key(example9::shape(), shuffled).columns() == example9::key_cols);
}

TEST_CASE("key to permutation rejects non nested columns") {
    const Partition lambda(3, {2, 1, 0});
    const Tableau not_nested(lambda, {{1, 3}, {2}});
    CHECK(is_key(Tableau(lambda, {{1, 3}, {1}})));
    CHECK_FALSE(is_key(not_nested));
    CHECK_THROWS_AS(key_to_perm(not_nested), validation_error);
}

TEST_CASE("domination is entrywise") {
    CHECK(dominated_by(example9::filled(), example9::key()));
    CHECK_FALSE(dominated_by(example9::key(), example9::filled()));
    CHECK(dominated_by(Tableau::minimal(example9::shape()), example9::filled()));
}

TEST_CASE("enumeration matches the dimension formula") {
    const std::vector<std::vector<int>> shapes{
        {2, 1, 0}, {1, 1, 1}, {2, 0, 0}, {2, 2, 0}, {3, 1, 0}};
    for (const auto& parts : shapes) {
        const Partition lambda(3, parts);
        CHECK(static_cast<long long>(all_tableaux(lambda).size()) ==
              tableau_count_formula(lambda));
    }
    CHECK(all_tableaux(Partition(3, {2, 1, 0})).size() == 8);
    // The enumeration order is deterministic and duplicate free.
    const auto ts = all_tableaux(Partition(3, {2, 1, 0}));
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK_FALSE(ts[i - 1] == ts[i]);
}

TEST_CASE("rendering") {
    CHECK(render(example9::filled()) ==
          "1 1 3 6\n"
          "2 3 4 8\n"
          "4 5 7\n"
          "5 6 8\n"
          "6 7\n"
          "7\n"
          "9\n");
    CHECK(render(Tableau(Partition(12, {2, 1}), {{1, 11}, {10}})) ==
          " 1 10\n"
          "11\n");
}
