#pragma once

#include <functional>
#include <string>
#include <vector>

#include "keypoly/shapes.hpp"

namespace keypoly {

// Semistandard filling of a partition shape, stored column-major: column j
// holds ζ_j values, strictly increasing down the column, weakly increasing
// along rows, all in [1,n]. Construction validates and throws
// validation_error naming the offending cell.
//
// The three boundary reads used throughout the scanning method live in the
// accessors west/east/south so call sites never special-case edges:
//   west(l,k)  = T(l-1,k), or k when l = 1
//   east(l,k)  = T(l+1,k), or n when column l+1 has no row k
//   south(l,k) = T(l,k+1), or n+1 when k = ζ_l
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> columns);

    // Minimal filling: every row i constant equal to i.
    static Tableau minimal(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int at(int j, int i) const;
    int west(int l, int k) const;
    int east(int l, int k) const;
    int south(int l, int k) const;
    const std::vector<int>& column(int j) const;
    const std::vector<std::vector<int>>& columns() const { return cols_; }

    bool operator==(const Tableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> cols_;
};

// Lexicographic order on (shape parts, columns); used for sorting and sets.
bool operator<(const Tableau& a, const Tableau& b);

// Entrywise comparison: true iff T(j,i) <= U(j,i) for every cell. Shapes
// must match.
bool dominated_by(const Tableau& t, const Tableau& u);

// Content vector: exponents[v-1] counts occurrences of the value v.
std::vector<int> weight(const Tableau& t);

// Maximum over the bottom values of the nonempty columns; 1 when there is no
// column. Remnant overload below.
int m_value(const Tableau& t);

// True iff the value set of each column contains the value set of the column
// to its east.
bool is_key(const Tableau& t);

// Partial state of a tableau whose columns have been eaten from the bottom:
// column j keeps a top prefix of its values, possibly empty. Scanning path
// removal only ever pops current column bottoms, so a prefix is all that is
// ever needed.
struct Remnant {
    Partition origin;
    std::vector<std::vector<int>> cols;  // cols[j-1] is the live prefix of column j

    static Remnant of(const Tableau& t) { return Remnant{t.shape(), t.columns()}; }
    // Empty columns 1..l, keeping the east part.
    void drop_columns_through(int l);
    bool all_empty() const;
};

int m_value(const Remnant& r);

// The key of shape lambda for pi: column j is the sorted first ζ_j entries
// of pi.
Tableau make_key(const Partition& lambda, const Permutation& pi);

// Inverse of make_key on keys: the unique block-increasing permutation whose
// key is t. Throws validation_error when t is not a key.
Permutation key_to_perm(const Tableau& t);

// Enumerate every semistandard tableau of the shape, filling columns east to
// west, rows bottom to top within a column, candidate values ascending. The
// callback sees each tableau exactly once, in that order.
void for_each_tableau(const Partition& shape,
                      const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> all_tableaux(const Partition& shape);

// ASCII rendering: one line per nonempty row, northwest justified,
// space-padded integers.
std::string render(const Tableau& t);

} // namespace keypoly
