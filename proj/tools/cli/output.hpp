#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace cavity::cli {

// 17 significant digits, '%g' style, '.' decimal point.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<double>& row);
  std::string str() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::size_t width_;
  std::string buffer_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

// Common envelope for every JSON artifact: tool name, version, command and
// the full effective configuration.
nlohmann::json sidecar(const nlohmann::json& config);

}  // namespace cavity::cli
