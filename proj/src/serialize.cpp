#include "facthankel/serialize.hpp"

#include <charconv>
#include <cstddef>
#include <system_error>

#include <json.hpp>

namespace facthankel {

namespace {

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(separator, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                           text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

Rational parse_entry(std::string_view text) {
  try {
    return Rational::from_string(strip(text));
  } catch (const std::exception& error) {
    throw ParseError(std::string("bad matrix entry: ") + error.what());
  }
}

double parse_double(std::string_view text) {
  text = strip(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad floating-point value");
  }
  return value;
}

std::string matrix_to_csv(const RationalMatrix& matrix) {
  std::string out;
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      if (j != 0) out += ',';
      out += matrix.at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

RationalMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  for (std::string_view line : split(text, '\n')) {
    if (strip(line).empty()) continue;
    std::vector<Rational> row;
    for (std::string_view field : split(line, ',')) {
      row.push_back(parse_entry(field));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  RationalMatrix matrix(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ParseError("matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      matrix.at(i, j) = std::move(rows[i][j]);
    }
  }
  return matrix;
}

std::string matrix_to_json(const RationalMatrix& matrix, MatrixKind kind) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      row.push_back(matrix.at(i, j).to_string());
    }
    entries.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["n"] = matrix.order();
  doc["kind"] = std::string(kind_name(kind));
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

RationalMatrix matrix_from_json(std::string_view text, MatrixKind* kind_out) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError("malformed JSON document");
  }
  if (!doc.contains("n") || !doc.contains("kind") || !doc.contains("entries")) {
    throw ParseError("JSON matrix needs fields n, kind, entries");
  }
  if (!doc["n"].is_number_unsigned() || !doc["kind"].is_string() ||
      !doc["entries"].is_array()) {
    throw ParseError("JSON matrix fields have wrong types");
  }
  const auto n = doc["n"].get<std::size_t>();
  if (n == 0) throw ParseError("matrix order must be >= 1");
  MatrixKind kind = kind_from_name(doc["kind"].get<std::string>());
  if (doc["entries"].size() != n) throw ParseError("entry rows do not match n");
  RationalMatrix matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["entries"][i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("entry row has wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_string()) throw ParseError("entries must be strings");
      matrix.at(i, j) = parse_entry(row[j].get<std::string>());
    }
  }
  if (kind_out != nullptr) *kind_out = kind;
  return matrix;
}

constexpr std::string_view kMatrixMarketHeader =
    "%%MatrixMarket matrix array real general";

std::string matrix_to_matrix_market(const RationalMatrix& matrix) {
  std::string out(kMatrixMarketHeader);
  out += '\n';
  out += std::to_string(matrix.order());
  out += ' ';
  out += std::to_string(matrix.order());
  out += '\n';
  // Array format stores entries column by column.
  for (std::size_t j = 0; j < matrix.order(); ++j) {
    for (std::size_t i = 0; i < matrix.order(); ++i) {
      out += format_double_shortest(matrix.at(i, j).to_double());
      out += '\n';
    }
  }
  return out;
}

RationalMatrix matrix_from_matrix_market(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split(text, '\n')) {
    line = strip(line);
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty() || lines[0] != kMatrixMarketHeader) {
    throw ParseError("expected header '" + std::string(kMatrixMarketHeader) +
                     "'");
  }
  std::size_t pos = 1;
  while (pos < lines.size() && lines[pos].front() == '%') ++pos;
  if (pos == lines.size()) throw ParseError("missing size line");
  std::vector<std::string_view> dims = split(lines[pos], ' ');
  std::erase_if(dims, [](std::string_view d) { return strip(d).empty(); });
  if (dims.size() != 2) throw ParseError("bad size line");
  std::size_t rows = 0, cols = 0;
  auto parse_dim = [](std::string_view d, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), out);
    if (ec != std::errc() || ptr != d.data() + d.size()) {
      throw ParseError("bad size line");
    }
  };
  parse_dim(strip(dims[0]), rows);
  parse_dim(strip(dims[1]), cols);
  if (rows == 0 || rows != cols) {
    throw ParseError("expected a square matrix");
  }
  ++pos;
  if (lines.size() - pos != rows * cols) {
    throw ParseError("entry count does not match size line");
  }
  RationalMatrix matrix(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      matrix.at(i, j) = Rational::from_double(parse_double(lines[pos++]));
    }
  }
  return matrix;
}

}  // namespace

std::string_view kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::matrix:
      return "matrix";
    case MatrixKind::hankel:
      return "hankel";
    case MatrixKind::inverse:
      return "inverse";
  }
  throw std::invalid_argument("unknown matrix kind");
}

MatrixKind kind_from_name(std::string_view name) {
  if (name == "matrix") return MatrixKind::matrix;
  if (name == "hankel") return MatrixKind::hankel;
  if (name == "inverse") return MatrixKind::inverse;
  throw ParseError("unknown matrix kind '" + std::string(name) + "'");
}

std::string format_double_shortest(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buffer, ptr);
}

std::string format_matrix(const RationalMatrix& matrix, MatrixKind kind,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return matrix_to_csv(matrix);
    case OutputFormat::json:
      return matrix_to_json(matrix, kind);
    case OutputFormat::matrix_market:
      return matrix_to_matrix_market(matrix);
  }
  throw std::invalid_argument("unknown output format");
}

RationalMatrix parse_matrix(std::string_view text, OutputFormat format,
                            MatrixKind* kind_out) {
  if (kind_out != nullptr) *kind_out = MatrixKind::matrix;
  switch (format) {
    case OutputFormat::csv:
      return matrix_from_csv(text);
    case OutputFormat::json:
      return matrix_from_json(text, kind_out);
    case OutputFormat::matrix_market:
      return matrix_from_matrix_market(text);
  }
  throw std::invalid_argument("unknown output format");
}

std::string format_reports(const std::vector<ErrorReport>& reports,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out;
      for (const ErrorReport& report : reports) {
        out += std::to_string(report.n);
        out += ',';
        out += report.cond_inf.to_string();
        out += ',';
        out += format_double_shortest(report.lu_max_rel_err);
        out += ',';
        out += format_double_shortest(report.formula_max_rel_err);
        out += '\n';
      }
      return out;
    }
    case OutputFormat::json: {
      nlohmann::json entries = nlohmann::json::array();
      for (const ErrorReport& report : reports) {
        entries.push_back({std::to_string(report.n),
                           report.cond_inf.to_string(),
                           format_double_shortest(report.lu_max_rel_err),
                           format_double_shortest(report.formula_max_rel_err)});
      }
      nlohmann::json doc;
      doc["n"] = reports.size();
      doc["kind"] = "report";
      doc["entries"] = std::move(entries);
      return doc.dump() + "\n";
    }
    case OutputFormat::matrix_market: {
      // One row per order, columns n, cond_inf, lu error, formula error.
      std::string out = "%%MatrixMarket matrix array real general\n";
      out += std::to_string(reports.size());
      out += " 4\n";
      auto column = [&reports](std::size_t c, const ErrorReport& r) {
        switch (c) {
          case 0:
            return static_cast<double>(r.n);
          case 1:
            return r.cond_inf.to_double();
          case 2:
            return r.lu_max_rel_err;
          default:
            return r.formula_max_rel_err;
        }
      };
      for (std::size_t c = 0; c < 4; ++c) {
        for (const ErrorReport& report : reports) {
          out += format_double_shortest(column(c, report));
          out += '\n';
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown output format");
}

}  // namespace facthankel
