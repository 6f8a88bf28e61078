#include "carrymix/serialize.hpp"

#include "carrymix/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <istream>
#include <sstream>

namespace carrymix {

using nlohmann::json;

namespace {

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join_trace(const TraceKey& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(key[i]);
  }
  return out;
}

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  throw ValidationError(std::string("column array: bad digit character '") + ch + "'");
}

char digit_char(int d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

bool skip_line(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

std::string matrix_to_csv(const RationalMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const RationalMatrix& m) { return matrix_json(m).dump(); }

RationalMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("matrix json: ") + e.what());
  }
  if (!doc.is_array()) throw ValidationError("matrix json: expected an array of rows");
  std::vector<RationalVector> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ValidationError("matrix json: every row must be an array");
    RationalVector values;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ValidationError("matrix json: entries must be \"p/q\" strings");
      values.push_back(parse_rational(cell.get<std::string>()));
    }
    rows.push_back(std::move(values));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const ShapeError& e) {
    throw ValidationError(e.what());
  }
}

std::string vector_to_csv(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(v[i]);
  }
  return out + '\n';
}

std::string vector_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr.dump();
}

std::string distribution_to_json(const DistributionTable& dist) {
  json obj = json::object();
  for (const auto& [perm, p] : dist) obj[perm.to_string()] = to_string(p);
  return obj.dump();
}

DistributionTable distribution_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("distribution json: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("distribution json: expected an object");
  DistributionTable dist;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) throw ValidationError("distribution json: values must be \"p/q\" strings");
    dist.emplace(Permutation::parse(key), parse_rational(value.get<std::string>()));
  }
  return dist;
}

std::string joint_law_to_json(const JointLaw& law) {
  json obj = json::object();
  if (law.mode == LawMode::exact) {
    for (const auto& [key, p] : law.probabilities) obj[join_trace(key)] = to_string(p);
  } else {
    for (const auto& [key, c] : law.counts) obj[join_trace(key)] = c;
  }
  return obj.dump();
}

ColumnArray read_column_array(std::istream& in) {
  std::string line;
  long n = -1;
  long m = -1;
  long b = -1;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    std::istringstream header(line);
    if (!(header >> n >> m >> b) || n < 1 || m < 1 || b < 2) {
      throw ValidationError("column array: header must be \"n m b\" with n, m >= 1 and b >= 2");
    }
    std::string extra;
    if (header >> extra) throw ValidationError("column array: trailing text in header");
    break;
  }
  if (n < 0) throw ValidationError("column array: missing header");

  std::vector<std::vector<int>> rows;
  while (static_cast<long>(rows.size()) < n && std::getline(in, line)) {
    if (skip_line(line)) continue;
    std::vector<int> digits;
    // bases above 36 have no single-character digits, so rows are always integer tokens there
    if (b > 36 || line.find_first_of(" \t") != std::string::npos) {
      std::istringstream tokens(line);
      long d = 0;
      while (tokens >> d) digits.push_back(static_cast<int>(d));
      if (!tokens.eof()) throw ValidationError("column array: bad token in row " + std::to_string(rows.size() + 1));
    } else {
      for (char ch : line) {
        if (ch == '\r') continue;
        digits.push_back(digit_value(ch));
      }
    }
    if (static_cast<long>(digits.size()) != m) {
      throw ValidationError("column array: row " + std::to_string(rows.size() + 1) + " has " +
                            std::to_string(digits.size()) + " digits, expected " + std::to_string(m));
    }
    rows.push_back(std::move(digits));
  }
  if (static_cast<long>(rows.size()) != n) {
    throw ValidationError("column array: expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  }
  while (std::getline(in, line)) {
    if (!skip_line(line)) throw ValidationError("column array: unexpected content after the last row");
  }
  return ColumnArray::from_rows(rows, b);
}

ColumnArray parse_column_array(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_column_array(in);
}

std::string format_column_array(const ColumnArray& array) {
  std::string out = std::to_string(array.n()) + ' ' + std::to_string(array.m()) + ' ' + std::to_string(array.base()) + '\n';
  for (std::size_t r = 0; r < array.n(); ++r) {
    const auto digits = array.row_digits(r);
    for (std::size_t c = 0; c < digits.size(); ++c) {
      if (array.base() > 36) {
        out += (c ? " " : "") + std::to_string(digits[c]);
      } else {
        out += digit_char(digits[c]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace carrymix
