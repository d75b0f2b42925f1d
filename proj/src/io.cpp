#include "hre/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hre/errors.hpp"

namespace hre::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

double parse_number(std::string_view s, std::size_t line, std::size_t column) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("invalid number '" + std::string(s) + "'", line, column);
  }
  return value;
}

// Maps a byte offset into (line, column), both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
}

}  // namespace

double parse_cell(std::string_view cell, std::size_t line, std::size_t column) {
  const std::string_view s = trim(cell);
  if (s.empty()) throw ParseError("empty cell", line, column);
  const auto slash = s.find('/');
  double value = 0.0;
  if (slash == std::string_view::npos) {
    value = parse_number(s, line, column);
  } else {
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (is_integer_literal(num) && is_integer_literal(den) && num.size() < 16 &&
        den.size() < 16) {
      // Integers below 2^53 convert exactly, so the quotient rounds once.
      unsigned long long p = 0;
      unsigned long long q = 0;
      std::from_chars(num.data(), num.data() + num.size(), p);
      std::from_chars(den.data(), den.data() + den.size(), q);
      if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", line, column);
      value = static_cast<double>(p) / static_cast<double>(q);
    } else {
      const double p = parse_number(num, line, column);
      const double q = parse_number(den, line, column);
      if (q == 0.0) throw ParseError("zero denominator in '" + std::string(s) + "'", line, column);
      value = p / q;
    }
  }
  if (!std::isfinite(value) || value <= 0.0)
    throw ParseError("judgment '" + std::string(s) + "' must be positive and finite", line, column);
  return value;
}

PcMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;
  std::vector<std::vector<std::size_t>> cell_columns;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::vector<double> row;
    std::vector<std::size_t> columns;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
      row.push_back(parse_cell(line.substr(start, stop - start), line_no, start + 1));
      columns.push_back(start + 1);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
    cell_columns.push_back(std::move(columns));
    if (end == text.size()) break;
  }
  if (rows.size() < 2) throw ParseError("matrix needs at least 2 rows", line_no, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw ParseError("row has " + std::to_string(rows[r].size()) + " cells, expected " +
                           std::to_string(rows.size()),
                       row_lines[r], 0);
    }
  }
  try {
    return PcMatrix::from_rows(rows);
  } catch (const ValidationError& e) {
    if (e.cell()) {
      const auto [i, j] = *e.cell();
      throw ParseError(e.what(), row_lines[i], cell_columns[i][j]);
    }
    throw;
  }
}

ReferenceAssignment parse_known_json(std::string_view text, std::size_t n) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("known values must be a JSON object", 1, 1);
  std::map<std::size_t, double> known;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (!is_integer_literal(key))
      throw ParseError("known-value key '" + key + "' is not a concept index", 1, 0);
    const std::size_t index = std::stoul(key);
    if (index < 1 || index > n)
      throw ParseError("known-value key '" + key + "' is outside 1.." + std::to_string(n), 1, 0);
    if (!it.value().is_number())
      throw ParseError("known value for '" + key + "' is not a number", 1, 0);
    const double value = it.value().get<double>();
    if (!std::isfinite(value) || value <= 0.0)
      throw ParseError("known value for '" + key + "' must be positive", 1, 0);
    known.emplace(index - 1, value);
  }
  if (known.empty()) throw ParseError("known values must not be empty", 1, 1);
  return ReferenceAssignment(std::move(known));
}

std::vector<double> parse_solution_json(std::string_view text, std::size_t n) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_array() || doc.size() != n)
    throw ParseError("solution must be a JSON array of " + std::to_string(n) + " numbers", 1, 1);
  std::vector<double> out;
  for (const auto& v : doc) {
    if (!v.is_number()) throw ParseError("solution entries must be numbers", 1, 0);
    const double x = v.get<double>();
    if (!std::isfinite(x) || x <= 0.0) throw ParseError("solution entries must be positive", 1, 0);
    out.push_back(x);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hre::io
