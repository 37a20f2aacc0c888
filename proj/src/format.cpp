#include "spreadmx/format.hpp"

#include <cstdio>

namespace spreadmx {

std::string format_real(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace spreadmx
