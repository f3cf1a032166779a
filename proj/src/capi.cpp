#include "facthankel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "facthankel/combinatorics.hpp"
#include "facthankel/float_lab.hpp"
#include "facthankel/hankel.hpp"
#include "facthankel/matrix.hpp"
#include "facthankel/serialize.hpp"

struct fh_matrix {
  facthankel::RationalMatrix values;
  fh_kind kind;
};

namespace {

using facthankel::MatrixKind;
using facthankel::OutputFormat;

// Runs a callable and maps C++ failures onto status codes. Exceptions must
// not cross the C boundary.
template <typename Fn>
fh_status guarded(Fn&& fn) {
  try {
    fn();
    return FH_OK;
  } catch (const std::invalid_argument&) {
    return FH_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return FH_ERROR_INVALID_ARGUMENT;
  } catch (const facthankel::SingularMatrixError&) {
    return FH_ERROR_SINGULAR;
  } catch (const facthankel::ParseError&) {
    return FH_ERROR_PARSE;
  } catch (const std::overflow_error&) {
    return FH_ERROR_OVERFLOW;
  } catch (const std::bad_alloc&) {
    return FH_ERROR_NOMEM;
  } catch (...) {
    return FH_ERROR_INTERNAL;
  }
}

char* copy_to_c_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::size_t checked_order(int64_t order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return static_cast<std::size_t>(order);
}

void require(bool condition) {
  if (!condition) throw std::invalid_argument("null argument");
}

OutputFormat to_output_format(fh_format format) {
  switch (format) {
    case FH_FORMAT_CSV:
      return OutputFormat::csv;
    case FH_FORMAT_JSON:
      return OutputFormat::json;
    case FH_FORMAT_MATRIX_MARKET:
      return OutputFormat::matrix_market;
  }
  throw std::invalid_argument("unknown format");
}

MatrixKind to_matrix_kind(fh_kind kind) {
  switch (kind) {
    case FH_KIND_MATRIX:
      return MatrixKind::matrix;
    case FH_KIND_HANKEL:
      return MatrixKind::hankel;
    case FH_KIND_INVERSE:
      return MatrixKind::inverse;
  }
  throw std::invalid_argument("unknown kind");
}

fh_kind from_matrix_kind(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::matrix:
      return FH_KIND_MATRIX;
    case MatrixKind::hankel:
      return FH_KIND_HANKEL;
    case MatrixKind::inverse:
      return FH_KIND_INVERSE;
  }
  throw std::invalid_argument("unknown kind");
}

void entry_index(const fh_matrix* matrix, int64_t row, int64_t col,
                 std::size_t& i, std::size_t& j) {
  const auto n = static_cast<int64_t>(matrix->values.order());
  if (row < 1 || row > n || col < 1 || col > n) {
    throw std::invalid_argument("entry index out of range");
  }
  i = static_cast<std::size_t>(row - 1);
  j = static_cast<std::size_t>(col - 1);
}

}  // namespace

extern "C" {

const char* fh_version(void) { return "1.0.0"; }

const char* fh_status_string(fh_status status) {
  switch (status) {
    case FH_OK:
      return "ok";
    case FH_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case FH_ERROR_SINGULAR:
      return "matrix is singular";
    case FH_ERROR_PARSE:
      return "parse error";
    case FH_ERROR_OVERFLOW:
      return "value exceeds binary64 range";
    case FH_ERROR_NOMEM:
      return "out of memory";
    case FH_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void fh_string_free(char* text) { std::free(text); }

fh_status fh_hankel_create(int64_t order, fh_matrix** out) {
  return guarded([&] {
    require(out != nullptr);
    *out = new fh_matrix{facthankel::hankel(checked_order(order)),
                         FH_KIND_HANKEL};
  });
}

fh_status fh_inverse_create(int64_t order, fh_method method, fh_matrix** out) {
  return guarded([&] {
    require(out != nullptr);
    const std::size_t n = checked_order(order);
    facthankel::RationalMatrix values(1);
    switch (method) {
      case FH_METHOD_CLOSED:
        values = facthankel::inverse_closed_form(n).to_rational();
        break;
      case FH_METHOD_GOVER_FACTORIAL:
        values = facthankel::inverse_gover_factorial(n).to_rational();
        break;
      case FH_METHOD_GOVER_BINOMIAL:
        values = facthankel::inverse_gover_binomial(n).to_rational();
        break;
      case FH_METHOD_GAUSS:
        values = facthankel::gauss_inverse(facthankel::hankel(n));
        break;
      default:
        throw std::invalid_argument("unknown method");
    }
    *out = new fh_matrix{std::move(values), FH_KIND_INVERSE};
  });
}

void fh_matrix_destroy(fh_matrix* matrix) { delete matrix; }

fh_status fh_matrix_order(const fh_matrix* matrix, int64_t* out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = static_cast<int64_t>(matrix->values.order());
  });
}

fh_status fh_matrix_kind(const fh_matrix* matrix, fh_kind* out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = matrix->kind;
  });
}

fh_status fh_matrix_entry(const fh_matrix* matrix, int64_t row, int64_t col,
                          char** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    std::size_t i, j;
    entry_index(matrix, row, col, i, j);
    *out = copy_to_c_string(matrix->values.at(i, j).to_string());
  });
}

fh_status fh_matrix_set_entry(fh_matrix* matrix, int64_t row, int64_t col,
                              const char* value) {
  return guarded([&] {
    require(matrix != nullptr && value != nullptr);
    std::size_t i, j;
    entry_index(matrix, row, col, i, j);
    matrix->values.at(i, j) = facthankel::Rational::from_string(value);
  });
}

fh_status fh_matrix_mul(const fh_matrix* a, const fh_matrix* b,
                        fh_matrix** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr);
    *out = new fh_matrix{facthankel::mat_mul(a->values, b->values),
                         FH_KIND_MATRIX};
  });
}

fh_status fh_matrix_gauss_inverse(const fh_matrix* matrix, fh_matrix** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = new fh_matrix{facthankel::gauss_inverse(matrix->values),
                         FH_KIND_MATRIX};
  });
}

fh_status fh_matrix_is_identity(const fh_matrix* matrix, int* out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = facthankel::is_identity(matrix->values) ? 1 : 0;
  });
}

fh_status fh_matrix_equal(const fh_matrix* a, const fh_matrix* b, int* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr);
    *out = (a->values == b->values) ? 1 : 0;
  });
}

fh_status fh_matrix_inf_norm(const fh_matrix* matrix, char** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = copy_to_c_string(facthankel::inf_norm(matrix->values).to_string());
  });
}

fh_status fh_matrix_format(const fh_matrix* matrix, fh_format format,
                           char** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    *out = copy_to_c_string(facthankel::format_matrix(
        matrix->values, to_matrix_kind(matrix->kind), to_output_format(format)));
  });
}

fh_status fh_matrix_parse(const char* text, fh_format format,
                          fh_matrix** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr);
    MatrixKind kind = MatrixKind::matrix;
    facthankel::RationalMatrix values =
        facthankel::parse_matrix(text, to_output_format(format), &kind);
    *out = new fh_matrix{std::move(values), from_matrix_kind(kind)};
  });
}

fh_status fh_factorial(int64_t n, char** out) {
  return guarded([&] {
    require(out != nullptr);
    *out = copy_to_c_string(facthankel::factorial(n).to_string());
  });
}

fh_status fh_binomial(int64_t upper, int64_t lower, char** out) {
  return guarded([&] {
    require(out != nullptr);
    *out = copy_to_c_string(facthankel::binomial(upper, lower).to_string());
  });
}

fh_status fh_reflection_holds(int64_t upper, int64_t m, int* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = facthankel::check_reflection(upper, m) ? 1 : 0;
  });
}

fh_status fh_chu_vandermonde_holds(int64_t s, int64_t t, int64_t m, int* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = facthankel::check_chu_vandermonde(s, t, m) ? 1 : 0;
  });
}

fh_status fh_verify_inverse(int64_t order, int* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = facthankel::verify_inverse(checked_order(order)) ? 1 : 0;
  });
}

fh_status fh_formulas_agree(int64_t order, int* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = facthankel::formulas_agree(checked_order(order)) ? 1 : 0;
  });
}

fh_status fh_matrix_is_inverse_of_hankel(const fh_matrix* matrix, int* out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr);
    facthankel::RationalMatrix h = facthankel::hankel(matrix->values.order());
    *out = (facthankel::is_identity(facthankel::mat_mul(matrix->values, h)) &&
            facthankel::is_identity(facthankel::mat_mul(h, matrix->values)))
               ? 1
               : 0;
  });
}

fh_status fh_row_sum_identity_holds(int64_t order, int64_t i, int64_t l,
                                    int64_t k, int* out) {
  return guarded([&] {
    require(out != nullptr);
    *out = facthankel::check_row_sum_identity(checked_order(order), i, l, k)
               ? 1
               : 0;
  });
}

fh_status fh_delta_sum(int64_t order, int64_t i, int64_t l, char** out) {
  return guarded([&] {
    require(out != nullptr);
    *out = copy_to_c_string(
        facthankel::delta_sum(checked_order(order), i, l).to_string());
  });
}

fh_status fh_cond_inf(int64_t order, char** exact_out, double* approx_out) {
  return guarded([&] {
    facthankel::Rational value =
        facthankel::cond_inf_exact(checked_order(order));
    if (approx_out != nullptr) *approx_out = value.to_double();
    if (exact_out != nullptr) *exact_out = copy_to_c_string(value.to_string());
  });
}

fh_status fh_study_format(int64_t max_order, fh_format format, char** out) {
  return guarded([&] {
    require(out != nullptr);
    *out = copy_to_c_string(facthankel::format_reports(
        facthankel::study(checked_order(max_order)), to_output_format(format)));
  });
}

}  // extern "C"
