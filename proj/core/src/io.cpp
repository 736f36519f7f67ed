#include "mnchain/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mnchain {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string value_to_string(const ConfigValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const long long* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const double* d = std::get_if<double>(&v)) return format_double(*d);
  return std::get<std::string>(v);
}

}  // namespace

std::string config_comment(const ConfigMap& config) {
  std::ostringstream out;
  out << "#";
  for (const auto& [key, value] : config) out << " " << key << "=" << value_to_string(value);
  return out.str();
}

CsvWriter::CsvWriter(std::string path, std::vector<std::string> columns,
                     const ConfigMap& config)
    : path_(std::move(path)), n_columns_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CSV needs at least one column");
  buffer_ = config_comment(config) + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += columns[i];
  }
  buffer_ += '\n';
}

void CsvWriter::write_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  write_row(cells);
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
  if (cells.size() != n_columns_)
    throw std::invalid_argument("CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
}

void CsvWriter::finish() {
  if (finished_) return;
  std::ofstream out(path_, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path_);
  out << buffer_;
  if (!out.good()) throw std::runtime_error("write failed: " + path_);
  finished_ = true;
}

CsvWriter::~CsvWriter() {
  if (!finished_) {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
}

void write_metadata_json(const std::string& path, const ConfigMap& config) {
  nlohmann::json j;
  j["format_version"] = 1;
  for (const auto& [key, value] : config) {
    std::visit([&](const auto& v) { j["config"][key] = v; }, value);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mnchain
