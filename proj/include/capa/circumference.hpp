#pragma once

#include <utility>
#include <vector>

#include "capa/numbers.hpp"

namespace capa {

// All quantities in this module are rational minutes on a circle of
// diameter D; squared rows are square minutes.

struct JyaSeries {
  Rat a_star;
  std::vector<Rat> terms;  // signed, exact
};

/// Partial sum of a* = arc - arc^3/(D^2 1*2*3) + arc^5/(D^4 1*...*5) - ...
/// keeping terms while |term| >= cutoff (default 1/8''').
JyaSeries jya_on_diameter_circle(const Rat& arc, const Rat& D,
                                 const Rat& cutoff = Rat(1, 28800));

struct CircumferenceTrace {
  Rat D;
  Rat C_star;
  std::vector<Rat> series_terms;
  Rat a_star;  // series sum rounded to thirds, as the worked computation
               // carries it into the squares
  Rat a_star_sq;
  Rat b_star_sq;
  Rat sqrt_half_a;
  Rat sqrt_half_b;
  Rat delta_jya;   // Delta
  Rat delta_arc;   // delta = Delta + Delta^3 / (6 D^2)
  Rat correction;  // 4 delta
  Rat C;
  int direction;  // sign of C - C_star
};

struct CircumferenceResult {
  Rat C;
  CircumferenceTrace trace;
};

/// One round of the Yuktibhasa refinement of an approximate circumference
/// C* of a circle of diameter D. C* must lie within 10% of pi D.
CircumferenceResult refine_circumference(const Rat& D, const Rat& C_star);

/// jya(C/4) = kojya(C/4) = sqrt(D^2 / 2), both returned.
std::pair<Rat, Rat> quadrant_jya_constants(const Rat& D);

}  // namespace capa
