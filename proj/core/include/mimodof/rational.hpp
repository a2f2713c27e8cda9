#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mimodof {

// All region arithmetic is exact. Magnitudes stay tiny (antenna counts and
// 0/1 facet coefficients), so a 64-bit rational is ample.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline long long lcm_ll(long long a, long long b) {
  return std::lcm(a, b);
}

// Positive part (x)^+, used throughout the null-space budget formulas.
inline Rat pos_part(const Rat& r) { return r > Rat(0) ? r : Rat(0); }

// "p/q" with q > 0 and gcd(p,q) = 1; plain "p" for integers.
std::string format_rat(const Rat& r);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

}  // namespace mimodof
