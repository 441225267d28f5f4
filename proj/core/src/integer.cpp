#include "pzeta/integer.hpp"

#include "pzeta/error.hpp"

namespace pzeta {

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) throw Error("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw Error("not an integer: '" + text + "'");
  }
  // Leading zeros would switch cpp_int's string parser into octal mode.
  std::size_t digits = start;
  while (digits + 1 < text.size() && text[digits] == '0') ++digits;
  Integer value(text.substr(digits));
  return start == 1 ? Integer(-value) : value;
}

std::string to_decimal(const Integer& value) { return value.str(); }

Integer factorial(std::int64_t n) {
  if (n < 0) throw Error("factorial of negative argument");
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 1) throw Error("prime_factors requires n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace pzeta
