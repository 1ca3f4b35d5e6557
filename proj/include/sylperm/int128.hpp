#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylperm {

// Exact signed accumulator for permanents. per(H_32) is bounded by
// 32^16 ~ 1.2e24, past 64 bits; restricted column-sum products stay
// below 2^127 for Hadamard inputs (Parseval bound), so a checked
// 128-bit integer is wide enough everywhere this toolkit computes.
using Int128 = __int128;

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("int128 overflow in addition");
  return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error("int128 overflow in subtraction");
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("int128 overflow in multiplication");
  return r;
}

inline Int128 checked_pow(Int128 base, unsigned exp) {
  Int128 r = 1;
  while (exp != 0) {
    if (exp & 1u) r = checked_mul(r, base);
    exp >>= 1u;
    if (exp != 0) base = checked_mul(base, base);
  }
  return r;
}

inline std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline Int128 int128_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty int128 literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign-only int128 literal");
  Int128 v = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in int128 literal");
    v = checked_add(checked_mul(v, 10), neg ? -(c - '0') : (c - '0'));
  }
  return v;
}

}  // namespace sylperm
