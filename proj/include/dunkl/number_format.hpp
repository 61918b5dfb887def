#pragma once

#include <string>

namespace dunkl {

/// Default significant digits for printed numbers.
inline constexpr int kDefaultPrecision = 12;

/// Locale-independent shortest form of v rounded to `digits` significant
/// digits ("inf", "-inf", "nan" for non-finite values).
std::string format_number(double v, int digits = kDefaultPrecision);

/// v rounded to `digits` significant digits, so that a shortest round-trip
/// printer emits at most that many digits. Non-finite values pass through.
double round_significant(double v, int digits = kDefaultPrecision);

/// Digits from DUNKL_OSC_PRECISION, or the default when unset. Throws
/// std::invalid_argument unless the value is an integer in [1, 17].
int precision_from_environment();

}  // namespace dunkl
