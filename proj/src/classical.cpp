#include "capa/classical.hpp"

#include <stdexcept>

#include "capa/errors.hpp"

namespace capa {

namespace {

Rat chord_product(const Rat& x) { return x * (180 - x); }

void check_degree_domain(const Rat& x) {
  if (x < 0 || x > 180)
    throw DomainError("angle must lie in [0, 180] degrees");
}

}  // namespace

Rat bhaskara_sin(const Rat& x_deg) {
  check_degree_domain(x_deg);
  const Rat g = chord_product(x_deg);
  return 4 * g / (40500 - g);
}

Rat bhaskara_jya(const Rat& x_deg, const Radius& r) {
  return Rat(r.thirds) * bhaskara_sin(x_deg);
}

BhaskaraFit fit_bhaskara_constants() {
  // a + 4500 b = 9000, a + 8100 b = 8100
  const Rat b = Rat(9000 - 8100) / (4500 - 8100);
  const Rat a = 9000 - 4500 * b;
  for (int x = 1; x <= 5; ++x) {
    const Rat g = chord_product(x);
    if (g / (a + b * g) != bhaskara_sin(x))
      throw std::logic_error("fit does not reproduce the sine formula");
  }
  return {a, b};
}

Rat brahmagupta_arcsin(const Rat& m, const Rat& r) {
  if (m < 0 || m > r) throw DomainError("jya must lie in [0, r]");
  const Rat radicand = 8100 - 10125 * m / (m / 4 + r);
  if (radicand < 0)
    throw DomainError("negative radicand in Brahmagupta's inversion");
  return 90 - isqrt_rational(radicand, Int("1000000000000"));
}

namespace {

ScanRow scan_row(const Rat& x, const Real& pi) {
  ScanRow row;
  row.x_deg = x;
  row.approx = to_real(bhaskara_sin(x));
  row.exact = sin(to_real(x) * pi / 180);
  row.rel_err_percent = (row.approx - row.exact) / row.exact * 100;
  return row;
}

void finalize(ScanResult& result, const Real& pi) {
  result.max_abs_rel_err_percent = 0;
  result.argmax_deg = 0;
  for (const ScanRow& row : result.rows) {
    const Real a = abs(row.rel_err_percent);
    if (a > result.max_abs_rel_err_percent) {
      result.max_abs_rel_err_percent = a;
      result.argmax_deg = row.x_deg;
    }
  }
  // approx/x -> 4/225 per degree while sin(x deg) -> x pi/180
  result.small_x_limit_percent = (Real(720) / (225 * pi) - 1) * 100;
}

long long row_count(const Rat& step) {
  const Rat q = Rat(180) / step;
  const Int fl = round_rat(q, RoundMode::floor);
  const Int n = (q == fl) ? fl - 1 : fl;
  return n.convert_to<long long>();
}

}  // namespace

ScanResult bhaskara_error_scan(const Rat& step_deg) {
  if (step_deg <= 0 || step_deg >= 180)
    throw DomainError("scan step must lie in (0, 180) degrees");
  const Real pi = pi_real();
  ScanResult result;
  for (Rat x = step_deg; x < 180; x += step_deg)
    result.rows.push_back(scan_row(x, pi));
  finalize(result, pi);
  return result;
}

ScanResult bhaskara_error_scan_parallel(const Rat& step_deg) {
  if (step_deg <= 0 || step_deg >= 180)
    throw DomainError("scan step must lie in (0, 180) degrees");
  const Real pi = pi_real();
  const long long n = row_count(step_deg);
  ScanResult result;
  result.rows.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    result.rows[static_cast<std::size_t>(i)] = scan_row(step_deg * (i + 1), pi);
  finalize(result, pi);
  return result;
}

}  // namespace capa
