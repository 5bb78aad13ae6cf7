#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "capa/numbers.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

// Software floating point, 50 significant digits. Used wherever a true
// trigonometric value is needed; never a platform double.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Int& n);
Real to_real(const Rat& q);
Real pi_real();

/// Rounds to the nearest integer, ties away from zero.
Int round_real(const Real& x);

/// r sin(arc / r), both in thirds.
Real oracle_jya(const Int& arc_thirds, const Radius& r);

/// r asin(jya / r), both in thirds.
Real oracle_arc(const Int& jya_thirds, const Radius& r);

}  // namespace capa
