#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zslab {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest representation that parses back to the same double ("0.15", not
// "0.14999999999999999"); NaN prints as "nan". Keeps output byte-deterministic.
std::string format_double(double v);

// Comma-separated writer with a fixed column set; every row must provide
// exactly that many fields. UTF-8, '\n' line ends, '.' decimal separator.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);

  template <typename... Ts>
  void row(const Ts&... values) {
    if (sizeof...(values) != columns_) {
      throw CsvError("csv row width does not match header: " + path_);
    }
    bool first = true;
    (write_field(values, first), ...);
    out_ << '\n';
  }

  void flush();

 private:
  void write_field(double v, bool& first) { write_raw(format_double(v), first); }
  void write_field(std::uint64_t v, bool& first) { write_raw(std::to_string(v), first); }
  void write_field(int v, bool& first) { write_raw(std::to_string(v), first); }
  void write_field(const std::string& v, bool& first) { write_raw(v, first); }
  void write_field(const char* v, bool& first) { write_raw(v, first); }
  void write_raw(const std::string& s, bool& first);

  std::ofstream out_;
  std::string path_;
  std::size_t columns_ = 0;
};

// Minimal reader for the files this project writes (no quoting, no embedded
// commas). Used by the plot command.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  static CsvTable read_file(const std::string& path);

  std::size_t column_index(const std::string& name) const;  // throws CsvError when absent
  std::vector<double> numeric_column(const std::string& name) const;
};

}  // namespace zslab
