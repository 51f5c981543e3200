#pragma once

#include <string>

namespace drpslte {

// Shortest decimal form that parses back to exactly the same double.
// Locale-independent, '.' decimal separator.
std::string format_double(double value);

std::string format_int(long long value);

}  // namespace drpslte
