#include "mimodof/rational.hpp"

#include <charconv>

namespace mimodof {

std::string format_rat(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

namespace {

long long parse_ll(std::string_view text) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_ll(text));
  }
  const long long num = parse_ll(text.substr(0, slash));
  const long long den = parse_ll(text.substr(slash + 1));
  if (den <= 0) {
    throw std::invalid_argument("rational denominator must be positive: '" +
                                std::string(text) + "'");
  }
  return Rat(num, den);
}

}  // namespace mimodof
