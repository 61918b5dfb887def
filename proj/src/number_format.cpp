#include "dunkl/number_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace dunkl {

std::string format_number(double v, int digits)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

double round_significant(double v, int digits)
{
    if (!std::isfinite(v) || v == 0.0) {
        return v;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, digits - 1);
    double out = v;
    std::from_chars(buf, res.ptr, out);
    return out;
}

int precision_from_environment()
{
    const char* raw = std::getenv("DUNKL_OSC_PRECISION");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultPrecision;
    }
    const std::string_view text(raw);
    int digits = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), digits);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || digits < 1 || digits > 17) {
        throw std::invalid_argument("DUNKL_OSC_PRECISION must be an integer between 1 and 17, got '" +
                                    std::string(text) + "'");
    }
    return digits;
}

}  // namespace dunkl
