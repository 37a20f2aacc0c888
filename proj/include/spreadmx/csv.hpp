#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spreadmx {

/// Header plus rows of a comma-separated file (RFC 4180 quoting).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in, const std::string& source_name);

}  // namespace spreadmx
