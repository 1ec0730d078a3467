#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "outrank/basketball.hpp"
#include "outrank/error.hpp"

namespace outrank::csv {

/// Box-score columns in canonical (writer) order. Readers accept any order.
inline constexpr std::array<std::string_view, 23> kBoxScoreColumns = {
    "player_id", "position", "games", "Min", "Pts", "P2",  "P2A", "P3",
    "P3A",       "FT",       "FTA",   "FG",  "FGA", "ORB", "DRB", "AST",
    "STL",       "BLK",      "BLKR",  "TOV", "PF",  "PFR", "PM"};

/// Splits one record. Double quotes delimit fields containing commas; a
/// doubled quote inside a quoted field is a literal quote.
inline std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string quote_if_needed(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Shortest decimal that parses back to the same double.
inline std::string format_shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw Error(ErrorKind::InternalInvariant, "to_chars failed");
  return std::string(buf, end);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] inline void parse_error(std::size_t line, std::string_view column,
                                     const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column '" +
                                    std::string(column) + "': " + what);
}

inline double parse_real(std::string_view cell, std::size_t line, std::string_view col) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
    parse_error(line, col, "not a number: '" + std::string(cell) + "'");
  }
  return v;
}

inline long parse_integer(std::string_view cell, std::size_t line, std::string_view col) {
  cell = trim(cell);
  long v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
    parse_error(line, col, "not an integer: '" + std::string(cell) + "'");
  }
  return v;
}

}  // namespace detail

inline std::vector<basketball::BoxScoreLine> parse_boxscore_csv(std::string_view text) {
  using basketball::BoxScoreLine;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  std::size_t header_line = 0;
  while (header_line < lines.size() && detail::trim(lines[header_line]).empty())
    ++header_line;
  if (header_line == lines.size()) {
    throw Error(ErrorKind::Schema, "missing header row");
  }

  std::unordered_map<std::string, std::size_t> column_of;
  {
    const auto header = split_record(detail::trim(lines[header_line]));
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string name(detail::trim(header[c]));
      if (!column_of.emplace(name, c).second) {
        throw Error(ErrorKind::Schema, "duplicate column '" + name + "'");
      }
    }
  }
  std::array<std::size_t, kBoxScoreColumns.size()> idx{};
  for (std::size_t k = 0; k < kBoxScoreColumns.size(); ++k) {
    auto it = column_of.find(std::string(kBoxScoreColumns[k]));
    if (it == column_of.end()) {
      throw Error(ErrorKind::Schema,
                  "missing required column '" + std::string(kBoxScoreColumns[k]) + "'");
    }
    idx[k] = it->second;
  }

  std::vector<BoxScoreLine> out;
  std::unordered_set<std::string> seen;
  for (std::size_t ln = header_line + 1; ln < lines.size(); ++ln) {
    const auto raw = detail::trim(lines[ln]);
    if (raw.empty()) continue;
    const std::size_t line_no = ln + 1;
    const auto fields = split_record(raw);
    auto cell = [&](std::size_t k) -> std::string_view {
      if (idx[k] >= fields.size()) {
        detail::parse_error(line_no, kBoxScoreColumns[k], "missing cell");
      }
      return fields[idx[k]];
    };
    auto real = [&](std::size_t k) {
      return detail::parse_real(cell(k), line_no, kBoxScoreColumns[k]);
    };

    BoxScoreLine l;
    l.player_id = std::string(detail::trim(cell(0)));
    const auto pos = detail::trim(cell(1));
    if (auto p = basketball::parse_position(pos)) {
      l.position = *p;
    } else {
      detail::parse_error(line_no, "position", "unknown position '" + std::string(pos) + "'");
    }
    l.games = detail::parse_integer(cell(2), line_no, "games");
    double* targets[] = {&l.Min, &l.Pts, &l.P2,  &l.P2A, &l.P3,  &l.P3A, &l.FT,
                         &l.FTA, &l.FG,  &l.FGA, &l.ORB, &l.DRB, &l.AST, &l.STL,
                         &l.BLK, &l.BLKR, &l.TOV, &l.PF, &l.PFR, &l.PM};
    for (std::size_t k = 3; k < kBoxScoreColumns.size(); ++k) *targets[k - 3] = real(k);

    try {
      basketball::validate(l);
    } catch (const Error& e) {
      throw Error(ErrorKind::Validation,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(l.player_id).second) {
      throw Error(ErrorKind::Duplicate, "line " + std::to_string(line_no) +
                                            ": duplicate player_id '" + l.player_id + "'");
    }
    out.push_back(std::move(l));
  }
  return out;
}

inline std::string write_boxscore_csv(const std::vector<basketball::BoxScoreLine>& lines) {
  std::string out;
  for (std::size_t k = 0; k < kBoxScoreColumns.size(); ++k) {
    if (k) out += ',';
    out += kBoxScoreColumns[k];
  }
  out += '\n';
  for (const auto& l : lines) {
    out += quote_if_needed(l.player_id);
    out += ',';
    out += basketball::code(l.position);
    out += ',';
    out += std::to_string(l.games);
    const double values[] = {l.Min, l.Pts, l.P2,  l.P2A, l.P3,  l.P3A, l.FT,
                             l.FTA, l.FG,  l.FGA, l.ORB, l.DRB, l.AST, l.STL,
                             l.BLK, l.BLKR, l.TOV, l.PF, l.PFR, l.PM};
    for (double v : values) {
      out += ',';
      out += format_shortest(v);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::NotFound, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<basketball::BoxScoreLine> load_boxscore_csv(const std::string& path) {
  return parse_boxscore_csv(read_file(path));
}

}  // namespace outrank::csv
