#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace borel {

using BigInt = boost::multiprecision::cpp_int;

/// base^exponent for a non-negative exponent.
inline BigInt ipow(const BigInt& base, unsigned long long exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1ull) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

inline BigInt binomial(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  BigInt result = 1;
  for (long long k = 1; k <= bottom; ++k) {
    result *= top - bottom + k;
    result /= k;
  }
  return result;
}

}  // namespace borel
