#include "zslab/csv.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace zslab {

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw CsvError("failed to format double");
  return std::string(buf.data(), ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), path_(path), columns_(columns.size()) {
  if (!out_) throw CsvError("cannot open for writing: " + path);
  bool first = true;
  for (const std::string& c : columns) write_raw(c, first);
  out_ << '\n';
}

void CsvWriter::write_raw(const std::string& s, bool& first) {
  if (!first) out_ << ',';
  out_ << s;
  first = false;
}

void CsvWriter::flush() {
  out_.flush();
  if (!out_) throw CsvError("write failed: " + path_);
}

CsvTable CsvTable::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open for reading: " + path);

  CsvTable table;
  std::string line;
  auto split = [](const std::string& text) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(text);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!text.empty() && text.back() == ',') fields.emplace_back();
    return fields;
  };

  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      table.columns = split(line);
      have_header = true;
      continue;
    }
    std::vector<std::string> fields = split(line);
    if (fields.size() != table.columns.size()) {
      throw CsvError("ragged csv row in " + path);
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw CsvError("empty csv file: " + path);
  return table;
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw CsvError("csv column not found: " + name);
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const std::string& cell = row[idx];
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
      throw CsvError("non-numeric value '" + cell + "' in column " + name);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace zslab
