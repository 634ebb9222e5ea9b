#pragma once

#include <string>

#include "wmark/watermark.hpp"

namespace wmark {

// Line-oriented plain-text report format: `key = value` pairs, positions as
// `i,j` pairs one per line after a `positions:` marker.

std::string serialize_embed_report(const EmbedReport& rep);
EmbedReport parse_embed_report(const std::string& text);

std::string serialize_extraction_report(const ExtractionReport& rep);
ExtractionReport parse_extraction_report(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace wmark
