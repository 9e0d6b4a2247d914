#include "certainty/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "certainty/error.hpp"

namespace certainty::csv {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Row> parse(std::string_view text, const std::string& file) {
  std::vector<Row> rows;
  std::size_t pos = 0, line = 1;
  while (pos < text.size()) {
    Row row;
    row.line = line;
    bool blank_line = true;
    for (;;) {
      // One cell.
      std::string cell;
      std::size_t start = pos;
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      if (pos < text.size() && text[pos] == '"') {
        blank_line = false;
        const std::size_t open_line = line;
        ++pos;
        for (;;) {
          if (pos >= text.size())
            throw ParseError(file, open_line, std::to_string(row.cells.size() + 1),
                             "unterminated quoted cell");
          const char c = text[pos++];
          if (c == '"') {
            if (pos < text.size() && text[pos] == '"') {
              cell.push_back('"');
              ++pos;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            cell.push_back(c);
          }
        }
        while (pos < text.size() && text[pos] != ',' && text[pos] != '\n') {
          if (text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r')
            throw ParseError(file, line, std::to_string(row.cells.size() + 1),
                             "unexpected text after closing quote");
          ++pos;
        }
      } else {
        pos = start;
        while (pos < text.size() && text[pos] != ',' && text[pos] != '\n') ++pos;
        auto raw = trim(text.substr(start, pos - start));
        if (!raw.empty() || (pos < text.size() && text[pos] == ',')) blank_line = false;
        cell.assign(raw);
      }
      row.cells.push_back(std::move(cell));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        blank_line = false;
        continue;
      }
      break;
    }
    if (pos < text.size() && text[pos] == '\n') {
      ++pos;
      ++line;
    }
    if (!blank_line) rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<double> to_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

}  // namespace certainty::csv
