#include "capa/sexagesimal.hpp"

#include "capa/errors.hpp"

namespace capa {

Int thirds_from_components(const Int& minutes, int seconds, int thirds,
                           int sign) {
  if (minutes < 0) throw RangeError("minutes component must be nonnegative");
  if (seconds < 0 || seconds >= 60)
    throw RangeError("seconds component out of [0, 60)");
  if (thirds < 0 || thirds >= 60)
    throw RangeError("thirds component out of [0, 60)");
  if (sign != 1 && sign != -1) throw RangeError("sign must be +1 or -1");
  return sign * (minutes * 3600 + seconds * 60 + thirds);
}

Components components_from_thirds(const Int& v) {
  Components c;
  c.sign = v < 0 ? -1 : 1;
  const Int a = abs(v);
  c.minutes = a / 3600;
  const int rem = static_cast<int>(a % 3600);
  c.seconds = rem / 60;
  c.thirds = rem % 60;
  return c;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Int parse_sexagesimal(std::string_view text) {
  std::size_t pos = 0;

  int sign = 1;
  if (pos < text.size() && text[pos] == '-') {
    sign = -1;
    ++pos;
  }

  const auto read_digits = [&](std::size_t max_len) -> Int {
    const std::size_t start = pos;
    Int value = 0;
    while (pos < text.size() && is_digit(text[pos]) &&
           (max_len == 0 || pos - start < max_len)) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected digits", pos);
    return value;
  };

  const auto read_marks = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= text.size() || text[pos] != '\'')
        throw ParseError("expected " + std::string(count, '\''), pos);
      ++pos;
    }
    if (pos < text.size() && text[pos] == '\'')
      throw ParseError("too many prime marks", pos);
  };

  const Int minutes = read_digits(0);
  read_marks(1);
  Int seconds = 0;
  Int thirds = 0;
  if (pos < text.size()) {
    seconds = read_digits(2);
    if (seconds >= 60)
      throw ParseError("seconds component out of 0..59", pos - 2);
    read_marks(2);
    if (pos < text.size()) {
      thirds = read_digits(2);
      if (thirds >= 60)
        throw ParseError("thirds component out of 0..59", pos - 2);
      read_marks(3);
    }
  }
  if (pos != text.size())
    throw ParseError("unexpected trailing characters", pos);
  return sign * (minutes * 3600 + seconds * 60 + thirds);
}

std::string format_sexagesimal(const Int& v, bool unicode_primes) {
  const Components c = components_from_thirds(v);
  const char* mark1 = unicode_primes ? "′" : "'";
  const char* mark2 = unicode_primes ? "″" : "''";
  const char* mark3 = unicode_primes ? "‴" : "'''";
  std::string out;
  if (c.sign < 0) out += '-';
  out += c.minutes.str();
  out += mark1;
  if (c.seconds < 10) out += '0';
  out += std::to_string(c.seconds);
  out += mark2;
  if (c.thirds < 10) out += '0';
  out += std::to_string(c.thirds);
  out += mark3;
  return out;
}

Rat minutes_from_thirds(const Int& v) { return Rat(v, 3600); }

Int round_to_thirds(const Rat& minutes, RoundMode mode) {
  return round_rat(minutes * 3600, mode);
}

}  // namespace capa
