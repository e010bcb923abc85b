#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ovt::csv {

/// Splits one CSV record. Fields may be double-quoted; `""` inside quotes
/// is a literal quote. Surrounding whitespace of unquoted fields is trimmed.
inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  auto flush = [&] {
    if (!was_quoted) {
      auto b = field.find_first_not_of(" \t");
      auto e = field.find_last_not_of(" \t");
      field = b == std::string::npos ? std::string{} : field.substr(b, e - b + 1);
    }
    fields.push_back(std::move(field));
    field.clear();
    was_quoted = false;
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
      was_quoted = true;
      field.clear();
    } else if (ch == ',') {
      flush();
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  flush();
  return fields;
}

/// Strict decimal parse: the whole field must be consumed.
inline std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

/// Quotes a field when it contains a separator or quote.
inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace ovt::csv
