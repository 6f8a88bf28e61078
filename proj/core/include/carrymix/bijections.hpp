#pragma once

#include "carrymix/column_array.hpp"
#include "carrymix/permutation.hpp"

#include <vector>

namespace carrymix {

struct ShuffleTrace;

/// Carries kappa_1..kappa_m from ordinary column-by-column addition of the n rows.
/// Cross-checked against carries of the prefix sums of rightmost-j tuples
/// (throws ConsistencyError on disagreement).
CarryTrace column_carry_trace(const ColumnArray& columns);

/// Positions i in [1, n-1] where adding tuple i+1 to the sum of the first i tuples
/// raises the amount carried out of the j-digit window.
std::vector<int> carry_positions(const TupleList& tuples);

/// Positions i in [1, n-1] where tuple i+1 is smaller than tuple i.
std::vector<int> descent_positions(const TupleList& tuples);

/// Row i of the image holds the rightmost j digits of the sum of rows 1..i.
TupleList bar_map(const ColumnArray& columns);
ColumnArray bar_inverse(const TupleList& tuples);

/// Column 1 is copied; column k+1 receives the entries of A_{k+1} reordered by the
/// labeling permutation of the first k output columns.
ColumnArray star_map(const ColumnArray& columns);
ColumnArray star_inverse(const ColumnArray& starred);

/// Ranks the tuples from smallest to largest; equal tuples are ranked top-down.
/// Entry i of the result is the rank of row i.
Permutation pi_label(const TupleList& tuples);
/// Same labeling applied to the rows of a column array (C_m most significant).
Permutation pi_label(const ColumnArray& columns);
/// Labeling of a single column of digits.
Permutation pi_label(const std::vector<int>& column);

/// tau_j = pi_label(bar_map(C_j..C_1)) for j = 1..m. Asserts descents(tau_j) = kappa_j.
ShuffleTrace tau_trace(const ColumnArray& columns);

/// pi(A_j) ... pi(A_1) == pi[(A_j ... A_1)*] for every prefix j.
bool starkey_product_check(const ColumnArray& columns);

}  // namespace carrymix
