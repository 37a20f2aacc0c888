#pragma once

#include <string>

namespace spreadmx {

/// Real number as written to every CSV: 12 significant digits, %g style.
std::string format_real(double value);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace spreadmx
