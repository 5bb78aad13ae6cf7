#pragma once

#include <string>
#include <string_view>

#include "capa/numbers.hpp"

namespace capa {

// Arc quantities use two carriers throughout the library:
//   Int  counts arc-thirds (1''' = 1/3600 arc-minute), the discrete unit of
//        every tabulated value;
//   Rat  counts arc-minutes, the lossless intermediate for series and roots.
using ArcThirds = Int;
using RationalArc = Rat;

struct Components {
  int sign;  // +1 or -1; +1 for zero
  Int minutes;
  int seconds;
  int thirds;
};

struct Radius {
  Int thirds;
};

/// The standard trijya, 3437'44''48''' = 12375888'''.
inline Radius standard_trijya() { return Radius{Int(12375888)}; }

Int thirds_from_components(const Int& minutes, int seconds, int thirds,
                           int sign = 1);
Components components_from_thirds(const Int& v);

/// Grammar: [-]M'[S''[T''']] with ASCII apostrophes; M any nonnegative
/// integer, S and T one or two digits in 0..59.
Int parse_sexagesimal(std::string_view text);

/// Canonical emission: all three fields, minutes unpadded, seconds and
/// thirds two digits. The unicode flag switches to prime marks for
/// documentation output.
std::string format_sexagesimal(const Int& v, bool unicode_primes = false);

Rat minutes_from_thirds(const Int& v);
Int round_to_thirds(const Rat& minutes, RoundMode mode = RoundMode::nearest);

}  // namespace capa
