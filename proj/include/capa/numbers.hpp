#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace capa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RoundMode { nearest, floor, ceil };

/// Floor division (quotient rounded toward negative infinity), d != 0.
Int floor_div(const Int& n, const Int& d);

/// Rounds an exact rational to an integer. Nearest mode breaks ties away
/// from zero.
Int round_rat(const Rat& x, RoundMode mode = RoundMode::nearest);

/// Floor square root of a nonnegative integer.
Int isqrt(const Int& n);

/// Floor cube root of a nonnegative integer.
Int icbrt(const Int& n);

/// Certified rational square root: returns y with
/// sqrt(x) - 1/precision <= y <= sqrt(x). Monotone in x; exact when x is the
/// square of an integer.
Rat isqrt_rational(const Rat& x, const Int& precision = 8);

/// Certified rational cube root, same contract as isqrt_rational.
Rat icbrt_rational(const Rat& x, const Int& precision = 8);

}  // namespace capa
