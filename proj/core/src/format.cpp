#include "drpslte/format.hpp"

#include <charconv>

namespace drpslte {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;  // 64 bytes always suffice for a double
    return std::string(buf, ptr);
}

std::string format_int(long long value) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace drpslte
