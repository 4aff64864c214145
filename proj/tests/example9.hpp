#pragma once

// The nine variable worked example used across the tests: shape with column
// lengths (7,5,4,2), the block increasing permutation (6,8,3,7,4,1,9,2,5),
// its key, and a hand checked semistandard filling whose right scan is
// exactly that key.

#include <vector>

#include "keypoly/tableau.hpp"

namespace example9 {

inline const int n = 9;
inline const std::vector<int> zeta{7, 5, 4, 2};
inline const std::vector<int> pi_entries{6, 8, 3, 7, 4, 1, 9, 2, 5};
inline const std::vector<std::vector<int>> key_cols{
    {1, 3, 4, 6, 7, 8, 9}, {3, 4, 6, 7, 8}, {3, 6, 7, 8}, {6, 8}};
inline const std::vector<std::vector<int>> filled_cols{
    {1, 2, 4, 5, 6, 7, 9}, {1, 3, 5, 6, 7}, {3, 4, 7, 8}, {6, 8}};
inline const std::vector<int> filled_weight{2, 1, 2, 2, 2, 3, 3, 2, 1};

inline keypoly::Partition shape() { return keypoly::from_column_lengths(n, zeta); }
inline keypoly::Permutation pi() { return keypoly::Permutation(pi_entries); }
inline keypoly::Tableau key() { return keypoly::Tableau(shape(), key_cols); }
inline keypoly::Tableau filled() { return keypoly::Tableau(shape(), filled_cols); }

} // namespace example9
