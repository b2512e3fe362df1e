#include "elliptic/bigint.hpp"

#include <cmath>
#include <limits>

// GCC 11 reports a bogus memcpy overflow inside cpp_int right shifts.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif

namespace elliptic {

std::string to_decimal(const BigInt& value) { return value.str(); }

double log_abs(const BigInt& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  BigInt mag = abs(value);
  std::size_t bits = boost::multiprecision::msb(mag) + 1;
  if (bits <= 1000) return std::log(mag.convert_to<double>());
  // Keep the top 64 bits; the discarded tail is below double resolution.
  std::size_t shift = bits - 64;
  BigInt top = mag >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace elliptic
