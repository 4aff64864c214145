#include <doctest.h>

#include <set>

#include "keypoly/scanning.hpp"
#include "example9.hpp"

using namespace keypoly;

namespace {

// Two columns (1,2) and (2,3) in rank 3: small enough to scan by hand, rich
// enough to exercise path removal in both directions.
Tableau small_pair() {
    return Tableau(Partition(3, {2, 2, 0}), {{1, 2}, {2, 3}});
}

} // namespace

TEST_CASE("right scan of a hand traced tableau") {
    const ScanResult rs = right_scan(small_pair());
    CHECK(rs.scan.columns() == std::vector<std::vector<int>>{{2, 3}, {2, 3}});

    // From (1,2): origin 2, then the bottom 3 of column 2.
    CHECK(rs.path(1, 2).cells == std::vector<Cell>{{1, 2}, {2, 2}});
    CHECK(rs.path(1, 2).values == std::vector<int>{2, 3});
    CHECK(rs.path(1, 2).terminal() == 3);
    // From (1,1): the 3 is gone, so the path picks up the 2 above it.
    CHECK(rs.path(1, 1).cells == std::vector<Cell>{{1, 1}, {2, 1}});
    CHECK(rs.path(1, 1).values == std::vector<int>{1, 2});
    // Column 2 paths stay at home.
    CHECK(rs.path(2, 2).values == std::vector<int>{3});
    CHECK(rs.path(2, 1).values == std::vector<int>{2});
    CHECK(rs.path(2, 1).visits({2, 1}));
    CHECK_FALSE(rs.path(2, 1).visits({1, 1}));
}

TEST_CASE("left scan of a hand traced tableau") {
    const ScanResult ls = left_scan(small_pair());
    CHECK(ls.scan.columns() == std::vector<std::vector<int>>{{1, 2}, {1, 2}});
    CHECK(ls.path(2, 2).cells == std::vector<Cell>{{2, 2}, {1, 2}});
    CHECK(ls.path(2, 2).values == std::vector<int>{3, 2});
    CHECK(ls.path(2, 2).terminal() == 2);
    CHECK(ls.path(2, 1).values == std::vector<int>{2, 1});
    CHECK(ls.path(1, 2).values == std::vector<int>{2});
}

TEST_CASE("worked example scan and remnant route") {
    const Tableau filled = example9::filled();
    const ScanResult rs = right_scan(filled);
    CHECK(rs.scan == example9::key());

    // The independent route: each scan entry is the largest column bottom of
    // the remnant at and east of its column.
    for (int j = 1; j <= 4; ++j)
        for (int i = 1; i <= filled.shape().column_length(j); ++i)
            CHECK(rs.scan.at(j, i) == scan_value_from_remnant(filled, j, i));

    // Paths from one originating column never share a cell.
    for (int j = 1; j <= 4; ++j) {
        std::set<Cell> seen;
        for (int i = 1; i <= filled.shape().column_length(j); ++i)
            for (const Cell& c : rs.path(j, i).cells)
                CHECK(seen.insert(c).second);
    }
}

TEST_CASE("scans fix keys") {
    CHECK(right_scan(example9::key()).scan == example9::key());
    CHECK(left_scan(example9::key()).scan == example9::key());
}

TEST_CASE("remnant removes whole paths") {
    // Removing the path from (1,2) of the small pair pops (1,2) and (2,2).
    const Remnant r = remnant(small_pair(), 1, 1);
    CHECK(r.origin == small_pair().shape());
    CHECK(r.cols == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(m_value(r) == 2);

    // Keeping both cells of column 1 removes nothing.
    CHECK(remnant(small_pair(), 1, 2).cols ==
          std::vector<std::vector<int>>{{1, 2}, {2, 3}});
}

TEST_CASE("scan steps on raw columns") {
    // The earliest weakly increasing walk from the partial state of the
    // worked example: placing 7 takes the two 8s, placing 6 takes the 7.
    std::vector<std::vector<int>> live{{3, 4, 7, 8}, {6, 8}};
    std::vector<Cell> cells;
    std::vector<int> values;
    CHECK(ewis_remove(live, 0, 7, &cells, &values) == 8);
    CHECK(values == std::vector<int>{8, 8});
    CHECK(cells == std::vector<Cell>{{1, 4}, {2, 2}});
    values.clear();
    CHECK(ewis_remove(live, 0, 6, nullptr, &values) == 7);
    CHECK(values == std::vector<int>{7});
    CHECK(live == std::vector<std::vector<int>>{{3, 4}, {6}});

    // The deepest weakly decreasing walk used by left scanning.
    const std::vector<std::vector<int>> cols{{1, 2}, {2, 3}};
    const ScanPath p = mwds_path(cols, 2, 2);
    CHECK(p.cells == std::vector<Cell>{{2, 2}, {1, 2}});
    CHECK(p.values == std::vector<int>{3, 2});
    std::vector<std::vector<int>> cut = cols;
    truncate_at(cut, p);
    CHECK(cut == std::vector<std::vector<int>>{{1}, {2}});
}
