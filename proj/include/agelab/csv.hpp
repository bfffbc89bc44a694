#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace agelab::csv {

/// One parsed row; fields are unescaped.
using Row = std::vector<std::string>;

/// Parses a single CSV line (RFC 4180 quoting, no embedded newlines).
Row parse_line(const std::string& line);

/// Reads a whole file. Quoted fields may not span lines; the manifest
/// format never needs that.
std::vector<Row> read_file(const std::filesystem::path& path);

/// Escapes a field if it contains a comma, quote, or newline.
std::string escape(const std::string& field);

std::string join(const Row& row);

/// Canonical number formatting: integral values print without a decimal
/// point so that save/load round-trips are byte-identical.
std::string format_number(double value);

}  // namespace agelab::csv
