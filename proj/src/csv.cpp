#include "spreadmx/csv.hpp"

#include <istream>

#include "spreadmx/error.hpp"

namespace spreadmx {

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

CsvTable read_csv(std::istream& in, const std::string& source_name) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  int line = 1;
  int record_line = 1;

  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    if (table.header.empty()) {
      table.header = std::move(record);
    } else if (!(record.size() == 1 && record[0].empty())) {
      if (record.size() != table.header.size()) {
        throw ParseError(source_name, record_line, "expected " + std::to_string(table.header.size()) +
                                                       " fields, found " + std::to_string(record.size()));
      }
      table.rows.push_back(std::move(record));
    }
    record.clear();
    any = false;
  };

  char c;
  while (in.get(c)) {
    if (!any) record_line = line;
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
      ++line;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(source_name, line, "unterminated quoted field");
  if (any) end_record();
  if (table.header.empty()) throw ParseError(source_name, 1, "missing header");
  return table;
}

}  // namespace spreadmx
