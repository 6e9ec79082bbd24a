#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace levyslab::cli {

/// Shortest decimal that reads back to the same double; non-finite values
/// become nan or a signed inf. Independent of the locale.
std::string format_number(double x);
std::string format_number(std::int64_t x);
inline std::string format_number(int x) { return format_number(std::int64_t{x}); }

/// Quotes a field if it contains a comma, quote or line break.
std::string quote_field(std::string_view field);

/// In-memory CSV document with a mandatory header row.
class Csv {
 public:
  explicit Csv(std::initializer_list<std::string_view> header);

  /// Appends one record; the field count must match the header.
  void add_row(const std::vector<std::string>& fields);

  template <class... T>
  void row(const T&... fields) {
    add_row({field(fields)...});
  }

  const std::string& text() const noexcept { return text_; }
  std::size_t columns() const noexcept { return columns_; }

 private:
  static std::string field(double x) { return format_number(x); }
  static std::string field(int x) { return format_number(x); }
  static std::string field(std::int64_t x) { return format_number(x); }
  static std::string field(std::string_view s) { return quote_field(s); }
  static std::string field(const std::string& s) { return quote_field(s); }
  static std::string field(const char* s) { return quote_field(s); }

  std::size_t columns_;
  std::string text_;
};

/// Minimal CSV reader for numeric tables written by Csv: a header row, then
/// records of plain numbers. Throws std::invalid_argument on malformed input.
struct NumericTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column index by name, or -1.
  int column(std::string_view name) const;
};
NumericTable parse_numeric_csv(std::string_view text);

struct OutputFile {
  std::string name;
  std::string content;
};

/// Writes each file into `dir` (created if missing), in order.
/// Throws IoError on failure.
void write_outputs(const std::filesystem::path& dir,
                   const std::vector<OutputFile>& files);

/// Whole file as a string. Throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace levyslab::cli
