#include "capa/numbers.hpp"

#include "capa/errors.hpp"

namespace capa {

Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

Int round_rat(const Rat& x, RoundMode mode) {
  const Int n = numerator(x);
  const Int d = denominator(x);  // always positive
  switch (mode) {
    case RoundMode::floor:
      return floor_div(n, d);
    case RoundMode::ceil:
      return -floor_div(-n, d);
    case RoundMode::nearest:
      break;
  }
  if (n >= 0) return floor_div(2 * n + d, 2 * d);
  return -floor_div(-2 * n + d, 2 * d);
}

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("square root of a negative value");
  return boost::multiprecision::sqrt(n);
}

Int icbrt(const Int& n) {
  if (n < 0) throw DomainError("cube root of a negative value");
  if (n == 0) return 0;
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Int x = Int(1) << (bits / 3 + 1);
  while (true) {
    const Int next = (2 * x + n / (x * x)) / 3;
    if (next >= x) break;
    x = next;
  }
  while (x * x * x > n) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
  return x;
}

namespace {

Int check_precision(const Int& precision) {
  if (precision <= 0) throw DomainError("root precision must be positive");
  // Halving the certified error makes the floor-biased result land within
  // 1/precision of the true root.
  return 2 * precision;
}

}  // namespace

Rat isqrt_rational(const Rat& x, const Int& precision) {
  if (x < 0) throw DomainError("square root of a negative value");
  const Int m = check_precision(precision);
  const Int scaled = floor_div(numerator(x) * m * m, denominator(x));
  return Rat(isqrt(scaled), m);
}

Rat icbrt_rational(const Rat& x, const Int& precision) {
  if (x < 0) throw DomainError("cube root of a negative value");
  const Int m = check_precision(precision);
  const Int scaled = floor_div(numerator(x) * m * m * m, denominator(x));
  return Rat(icbrt(scaled), m);
}

}  // namespace capa
