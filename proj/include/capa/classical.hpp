#pragma once

#include <vector>

#include "capa/numbers.hpp"
#include "capa/oracle.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

/// Bhaskara I's rational sine approximation 4x(180-x) / (40500 - x(180-x)),
/// x in degrees on [0, 180]. Exact at 0, 30, 90, 150, 180.
Rat bhaskara_sin(const Rat& x_deg);

/// r * bhaskara_sin(x); result in the unit of r (thirds).
Rat bhaskara_jya(const Rat& x_deg, const Radius& r);

struct BhaskaraFit {
  Rat a;
  Rat b;
};

/// Solves the two-constraint linear system behind the denominator of the
/// approximation: a + 4500 b = 9000, a + 8100 b = 8100. Verifies that
/// g / (a + b g) reproduces bhaskara_sin before returning.
BhaskaraFit fit_bhaskara_constants();

/// Brahmagupta's inversion s = 90 - sqrt(8100 - 10125 m / (m/4 + r));
/// m and r in any common unit, result in degrees on [0, 90].
Rat brahmagupta_arcsin(const Rat& m, const Rat& r);

struct ScanRow {
  Rat x_deg;
  Real approx;
  Real exact;
  Real rel_err_percent;  // signed
};

struct ScanResult {
  std::vector<ScanRow> rows;
  Real max_abs_rel_err_percent;
  Rat argmax_deg;
  Real small_x_limit_percent;  // limit of the relative error as x -> 0+
};

/// Scans x = step, 2 step, ... (excluding 180) against the high-precision
/// sine. Serial reference implementation.
ScanResult bhaskara_error_scan(const Rat& step_deg);

/// Same scan, rows computed by an OpenMP parallel loop. Produces rows
/// identical to the serial reference.
ScanResult bhaskara_error_scan_parallel(const Rat& step_deg);

}  // namespace capa
