#pragma once

#include "carrymix/column_array.hpp"
#include "carrymix/matrix.hpp"
#include "carrymix/montecarlo.hpp"
#include "carrymix/shuffling.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace carrymix {

/// One matrix row per line, entries as "p/q" separated by commas.
std::string matrix_to_csv(const RationalMatrix& m);
/// Array of arrays of "p/q" strings.
std::string matrix_to_json(const RationalMatrix& m);
/// Inverse of matrix_to_json. Throws ValidationError on malformed input.
RationalMatrix matrix_from_json(std::string_view text);

std::string vector_to_csv(const RationalVector& v);
std::string vector_to_json(const RationalVector& v);

/// Object mapping one-line permutation strings ("4 5 3 2 1 6") to "p/q".
std::string distribution_to_json(const DistributionTable& dist);
DistributionTable distribution_from_json(std::string_view text);

/// Object mapping comma-joined traces ("0,1,1") to "p/q" or to integer counts.
std::string joint_law_to_json(const JointLaw& law);

/// Column-array text format:
///
///     n m b
///     <row 1>
///     ...
///     <row n>
///
/// Each row lists its m digits most significant first (leftmost = C_m), either as
/// m characters from 0-9a-z or as m whitespace-separated integers.
/// Lines starting with '#' and blank lines are ignored.
ColumnArray read_column_array(std::istream& in);
ColumnArray parse_column_array(std::string_view text);
std::string format_column_array(const ColumnArray& array);

}  // namespace carrymix
