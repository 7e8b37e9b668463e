#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eventlens::csv {

using Row = std::vector<std::string>;

/// Parsed CSV with a header row. Quoted fields may contain commas, doubled
/// quotes and newlines (RFC 4180).
struct Table {
  Row header;
  std::vector<Row> rows;
  /// 1-based source line where each row starts, for error messages.
  std::vector<std::size_t> lines;

  std::optional<std::size_t> column(std::string_view name) const;
  /// Throws Error(MissingColumn).
  std::size_t require_column(std::string_view name) const;
};

Table parse(std::string_view text);
Table read_file(const std::string& path);

std::string read_text_file(const std::string& path);

/// Quotes a field only when it contains a delimiter, quote or line break.
std::string escape(std::string_view field);

/// Accumulates CSV text; rows are terminated with '\n'.
class Writer {
 public:
  explicit Writer(const Row& header) { write_row(header); }

  void write_row(const Row& fields);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

}  // namespace eventlens::csv
