#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

// Deterministic artifact emission: CSV numeric tables with a leading config
// comment line, and JSON metadata describing the fully resolved run
// configuration. All floats are printed with 17 significant digits so that
// artifacts round-trip bit-exactly.

namespace mnchain {

using ConfigValue = std::variant<bool, long long, double, std::string>;
using ConfigMap = std::map<std::string, ConfigValue>;

std::string format_double(double v);  // 17 significant digits

class CsvWriter {
 public:
  CsvWriter(std::string path, std::vector<std::string> columns,
            const ConfigMap& config);

  void write_row(const std::vector<double>& values);
  void write_row(const std::vector<std::string>& cells);

  // Flushes and closes; without it the destructor removes the partial file.
  void finish();

  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

 private:
  std::string path_;
  std::size_t n_columns_;
  std::string buffer_;
  bool finished_ = false;
};

// Serializes the config map (sorted keys) plus a fixed format version.
void write_metadata_json(const std::string& path, const ConfigMap& config);

// Single-line rendering of a config map, used for the CSV comment header.
std::string config_comment(const ConfigMap& config);

}  // namespace mnchain
