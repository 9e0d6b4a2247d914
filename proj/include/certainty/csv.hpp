#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace certainty::csv {

struct Row {
  std::size_t line = 0;  // 1-based line of the row's first character
  std::vector<std::string> cells;
};

// Comma-separated records with optional double-quote quoting ("" escapes a
// quote). Unquoted cells are trimmed of surrounding blanks; blank lines are
// skipped. Throws ParseError (attributed to `file`) on an unterminated quote.
std::vector<Row> parse(std::string_view text, const std::string& file);

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

// Strict: the whole cell must be a finite number.
std::optional<double> to_number(std::string_view cell);

}  // namespace certainty::csv
