#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sakhr {

// In-memory CSV table. RFC 4180 dialect: header row required, UTF-8 bytes
// passed through untouched, quoted fields may contain commas, quotes and
// newlines. Every row has exactly header.size() fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
  // Throws a schema error naming the column when it is absent.
  std::size_t require_column(std::string_view name, std::string_view source) const;
};

CsvTable parse_csv(std::string_view text, std::string_view source_name);
CsvTable read_csv(const std::string& path);

// Minimal quoting: a field is quoted only when it contains a comma, a quote
// or a line break. Lines end with '\n'. Deterministic byte-for-byte.
std::string format_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sakhr
