#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "run_config.hpp"

namespace levyslab::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_number(std::int64_t x) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

Csv::Csv(std::initializer_list<std::string_view> header) : columns_(header.size()) {
  std::vector<std::string> names;
  for (auto h : header) names.push_back(quote_field(h));
  add_row(names);
}

void Csv::add_row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) {
    throw std::logic_error("Csv: field count does not match the header");
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    text_ += fields[i];
  }
  text_ += '\n';
}

int NumericTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": '" + s + "' is not a number");
  }
  return v;
}

}  // namespace

NumericTable parse_numeric_csv(std::string_view text) {
  NumericTable table;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": wrong number of fields");
    }
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_double(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw std::invalid_argument("missing header row");
  return table;
}

void write_outputs(const std::filesystem::path& dir,
                   const std::vector<OutputFile>& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir.string() +
                  "': " + ec.message());
  }
  for (const auto& f : files) {
    const auto path = dir / f.name;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os.write(f.content.data(), static_cast<std::streamsize>(f.content.size()));
    os.close();
    if (!os) throw IoError("cannot write '" + path.string() + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw IoError("cannot read '" + path.string() + "'");
  return ss.str();
}

}  // namespace levyslab::cli
