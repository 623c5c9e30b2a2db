#include "cli/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "cavity/version.hpp"

namespace cavity::cli {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf.data(), res.ptr};
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& row) {
  if (row.size() != width_) throw std::logic_error("CSV row width mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += format_double(row[i]);
  }
  buffer_ += '\n';
}

std::string CsvWriter::str() const { return buffer_; }

void CsvWriter::save(const std::filesystem::path& path) const {
  write_text(path, buffer_);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

nlohmann::json sidecar(const nlohmann::json& config) {
  nlohmann::json j;
  j["tool"] = "cavity_rpm";
  j["version"] = kVersion;
  j["config"] = config;
  return j;
}

}  // namespace cavity::cli
