#ifndef FACTHANKEL_SERIALIZE_HPP
#define FACTHANKEL_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "facthankel/float_lab.hpp"
#include "facthankel/matrix.hpp"

namespace facthankel {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json, matrix_market };

// Tag carried by the JSON form; CSV and Matrix Market do not record it.
enum class MatrixKind { matrix, hankel, inverse };

std::string_view kind_name(MatrixKind kind);
MatrixKind kind_from_name(std::string_view name);

// Shortest decimal string that parses back to exactly the same binary64.
std::string format_double_shortest(double value);

/*
 * Matrix serialization. CSV and JSON are exact: entries are rendered as
 * canonical "p" or "p/q" strings. Matrix Market uses the `array real
 * general` form with column-major entries rounded to binary64, and is
 * therefore lossy by design.
 */
std::string format_matrix(const RationalMatrix& matrix, MatrixKind kind,
                          OutputFormat format);

// Inverse of format_matrix for all three formats (Matrix Market entries
// come back as the exact dyadic rationals of their binary64 values).
// Throws ParseError on malformed input.
RationalMatrix parse_matrix(std::string_view text, OutputFormat format,
                            MatrixKind* kind_out = nullptr);

/*
 * Conditioning-study serialization. One record per order with fields
 * (n, cond_inf, lu_max_rel_err, formula_max_rel_err); cond_inf is exact in
 * CSV and JSON, binary64 in Matrix Market (an n_max x 4 array).
 */
std::string format_reports(const std::vector<ErrorReport>& reports,
                           OutputFormat format);

}  // namespace facthankel

#endif  // FACTHANKEL_SERIALIZE_HPP
