#include "wmark/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wmark {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Splits "key = value"; returns false for non-matching lines.
bool parse_kv(const std::string& line, std::string* key, std::string* value) {
  const auto eq = line.find(" = ");
  if (eq == std::string::npos) return false;
  *key = line.substr(0, eq);
  *value = line.substr(eq + 3);
  return true;
}

}  // namespace

std::string serialize_embed_report(const EmbedReport& rep) {
  std::ostringstream os;
  os << "embedded_count = " << rep.embedded_count << "\n";
  os << "psnr = " << fmt(rep.psnr) << "\n";
  os << "corr = " << fmt(rep.corr) << "\n";
  os << "zero_payload_warning = " << (rep.zero_payload_warning ? 1 : 0) << "\n";
  os << "positions:\n";
  for (const auto& [r, c] : rep.positions) os << r << "," << c << "\n";
  return os.str();
}

EmbedReport parse_embed_report(const std::string& text) {
  EmbedReport rep;
  std::istringstream is(text);
  std::string line;
  bool in_positions = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "positions:") {
      in_positions = true;
      continue;
    }
    if (in_positions) {
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw io_error("bad position line: " + line);
      rep.positions.emplace_back(std::stoi(line.substr(0, comma)),
                                 std::stoi(line.substr(comma + 1)));
      continue;
    }
    std::string key, value;
    if (!parse_kv(line, &key, &value)) throw io_error("bad report line: " + line);
    if (key == "embedded_count") rep.embedded_count = std::stoi(value);
    else if (key == "psnr") rep.psnr = std::stod(value);
    else if (key == "corr") rep.corr = std::stod(value);
    else if (key == "zero_payload_warning") rep.zero_payload_warning = value == "1";
  }
  return rep;
}

std::string serialize_extraction_report(const ExtractionReport& rep) {
  std::ostringstream os;
  os << "extracted_count = " << rep.extracted_count << "\n";
  os << "nc = " << fmt(rep.nc) << "\n";
  if (rep.error_rate_percent)
    os << "error_rate_percent = " << fmt(*rep.error_rate_percent) << "\n";
  os << "recovered:\n";
  for (const auto& [pos, bit] : rep.recovered)
    os << pos.first << "," << pos.second << " = " << int(bit) << "\n";
  return os.str();
}

ExtractionReport parse_extraction_report(const std::string& text) {
  ExtractionReport rep;
  std::istringstream is(text);
  std::string line;
  bool in_recovered = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "recovered:") {
      in_recovered = true;
      continue;
    }
    std::string key, value;
    if (!parse_kv(line, &key, &value)) throw io_error("bad report line: " + line);
    if (in_recovered) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw io_error("bad recovered line: " + line);
      rep.recovered[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
          std::uint8_t(std::stoi(value));
      continue;
    }
    if (key == "extracted_count") rep.extracted_count = std::stoi(value);
    else if (key == "nc") rep.nc = std::stod(value);
    else if (key == "error_rate_percent") rep.error_rate_percent = std::stod(value);
  }
  return rep;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot write " + path);
  f << text;
  if (!f) throw io_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace wmark
