#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hre/pc_matrix.hpp"

namespace hre::io {

/// CSV with n rows of n cells. Blank lines and lines starting with '#' are
/// skipped. A cell is a decimal number or a fraction "p/q". Throws
/// ParseError with the 1-based line and column of the offending cell.
PcMatrix parse_matrix_csv(std::string_view text);

/// Parses one CSV cell; `line` and `column` locate it for error messages.
double parse_cell(std::string_view cell, std::size_t line, std::size_t column);

/// JSON object mapping a 1-based concept index (as a string) to a positive
/// value, e.g. {"2": 5, "3": 7}. Indices are checked against n.
ReferenceAssignment parse_known_json(std::string_view text, std::size_t n);

/// JSON array of n positive numbers in concept order.
std::vector<double> parse_solution_json(std::string_view text, std::size_t n);

/// Throws ParseError(line 0) if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace hre::io
