#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capa/errors.hpp"
#include "capa/numbers.hpp"
#include "capa/oracle.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

/// Madhava-Newton jya series, s and r in thirds, |s| <= 5400'. Terms are
/// added while they stay >= 1/8''', then the exact partial sum is rounded.
Int madhava_jya(const Int& s, const Radius& r);

/// jya(s) ~ s - s^3 / (6 r^2), rounded to thirds.
Int cubic_jya(const Int& s, const Radius& r);

/// arc(m) ~ m + m^3 / (6 r^2), rounded to thirds. Requires 0 <= m <= r.
Int arcsin_poly3(const Int& m, const Radius& r);

/// Exact partial sum of arcsin(x) = x + x^3/6 + 3x^5/40 + ... with the
/// first `terms` coefficients.
Rat arcsin_series(const Rat& x, int terms);

/// The first n coefficients (2k)! / (4^k (k!)^2 (2k+1)).
std::vector<Rat> arcsin_series_coefficients(int n);

struct IterationStep {
  Int delta;  // rounded Delta_i
  Int s;      // m + Delta_i
};

struct IterationTrace {
  Int m;
  Int r;
  std::vector<IterationStep> steps;
  bool converged = false;
};

struct ConvergenceError : Error {
  IterationTrace trace;
  ConvergenceError(const std::string& what, IterationTrace t)
      : Error(what), trace(std::move(t)) {}
};

struct VariyarResult {
  Int s;
  IterationTrace trace;
};

/// Sankara Variyar's fixed-point iteration Delta_i = (m + Delta_{i-1})^3 /
/// (6 r^2) with each Delta rounded to thirds, stopping when successive arcs
/// agree exactly. Inputs with 9 m^2 > 8 r^2 have no fixed point and raise
/// ConvergenceError up front.
VariyarResult variyar_arcsin(const Int& m, const Radius& r, int max_iter = 50);

/// The same iteration on exact rationals with no rounding; runs exactly
/// `iterations` steps.
Rat variyar_arcsin_exact(const Rat& m, const Rat& r, int iterations);

/// Coefficients c_a of s_n = sum c_a t^a x^(2a+1) under the formal
/// iteration s_i = x + t s_{i-1}^3 truncated at grade `order`. Truncation
/// is exact for every grade <= order.
std::vector<Int> iterate_coeff_series(int n, int order);

/// a_j = (3j)! / (j! (2j+1)!).
Int a001764(int j);

/// Closed form (2 / sqrt(3t)) sin(asin((3 sqrt(3t)/2) x) / 3) of the
/// stabilized coefficient series, evaluated at 100 digits internally.
Real gf_closed_form(const Rat& t, const Rat& x);

}  // namespace capa
