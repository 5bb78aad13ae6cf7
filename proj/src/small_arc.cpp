#include "capa/small_arc.hpp"

namespace capa {

namespace {

const Int kQuadrantThirds = Int(5400) * 3600;

Rat six_r_squared(const Radius& r) {
  if (r.thirds <= 0) throw DomainError("radius must be positive");
  return Rat(6) * r.thirds * r.thirds;
}

}  // namespace

Int madhava_jya(const Int& s, const Radius& r) {
  if (abs(s) > kQuadrantThirds)
    throw DomainError("madhava_jya is defined for |s| <= 5400'");
  const Rat r2 = Rat(r.thirds) * r.thirds;
  if (r.thirds <= 0) throw DomainError("radius must be positive");
  const Rat cutoff(1, 8);
  const Rat s2 = Rat(s) * s;
  Rat term = s;
  Rat sum = 0;
  for (int k = 1; abs(term) >= cutoff; ++k) {
    sum += term;
    term *= -s2 / (r2 * (2 * k) * (2 * k + 1));
  }
  return round_rat(sum);
}

Int cubic_jya(const Int& s, const Radius& r) {
  return round_rat(Rat(s) - Rat(s * s * s) / six_r_squared(r));
}

Int arcsin_poly3(const Int& m, const Radius& r) {
  if (m < 0 || m > r.thirds) throw DomainError("jya must lie in [0, r]");
  return round_rat(Rat(m) + Rat(m * m * m) / six_r_squared(r));
}

std::vector<Rat> arcsin_series_coefficients(int n) {
  if (n < 0) throw DomainError("coefficient count must be nonnegative");
  std::vector<Rat> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  Rat central = 1;  // (2k)! / (4^k (k!)^2)
  for (int k = 0; k < n; ++k) {
    coeffs.push_back(central / (2 * k + 1));
    central *= Rat(2 * k + 1, 2 * k + 2);
  }
  return coeffs;
}

Rat arcsin_series(const Rat& x, int terms) {
  if (terms < 1) throw DomainError("at least one series term is required");
  if (x < -1 || x > 1) throw DomainError("arcsin domain is [-1, 1]");
  const std::vector<Rat> coeffs = arcsin_series_coefficients(terms);
  const Rat x2 = x * x;
  Rat power = x;
  Rat sum = 0;
  for (const Rat& c : coeffs) {
    sum += c * power;
    power *= x2;
  }
  return sum;
}

VariyarResult variyar_arcsin(const Int& m, const Radius& r, int max_iter) {
  if (m < 0 || m > r.thirds) throw DomainError("jya must lie in [0, r]");
  IterationTrace trace{m, r.thirds, {}, false};
  if (9 * m * m > 8 * r.thirds * r.thirds)
    throw ConvergenceError(
        "no fixed point of s = m + s^3/(6 r^2) for 9 m^2 > 8 r^2; "
        "use the large-arc method",
        std::move(trace));
  const Rat denom = six_r_squared(r);
  Int prev = m;
  for (int i = 1; i <= max_iter; ++i) {
    const Int delta = round_rat(Rat(prev * prev * prev) / denom);
    const Int s = m + delta;
    trace.steps.push_back({delta, s});
    if (s == prev) {
      trace.converged = true;
      return {s, std::move(trace)};
    }
    prev = s;
  }
  throw ConvergenceError("arc did not stabilize within max_iter",
                         std::move(trace));
}

Rat variyar_arcsin_exact(const Rat& m, const Rat& r, int iterations) {
  if (r <= 0) throw DomainError("radius must be positive");
  const Rat denom = 6 * r * r;
  Rat s = m;
  for (int i = 0; i < iterations; ++i) s = m + s * s * s / denom;
  return s;
}

std::vector<Int> iterate_coeff_series(int n, int order) {
  if (n < 0) throw DomainError("iteration count must be nonnegative");
  if (order < n) throw DomainError("truncation order must be >= n");
  const int N = order;
  std::vector<Int> c(static_cast<std::size_t>(N) + 1, Int(0));
  c[0] = 1;
  for (int it = 0; it < n; ++it) {
    std::vector<Int> sq(c.size(), Int(0));
    std::vector<Int> cube(c.size(), Int(0));
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) sq[a + b] += c[a] * c[b];
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) cube[a + b] += sq[a] * c[b];
    std::vector<Int> next(c.size(), Int(0));
    next[0] = 1;  // the x term
    for (int g = 1; g <= N; ++g) next[g] = cube[g - 1];
    c = std::move(next);
  }
  return c;
}

Int a001764(int j) {
  if (j < 0) throw DomainError("index must be nonnegative");
  const auto factorial = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  return factorial(3 * j) / (factorial(j) * factorial(2 * j + 1));
}

Real gf_closed_form(const Rat& t, const Rat& x) {
  using Wide = boost::multiprecision::cpp_bin_float_100;
  if (t <= 0) throw DomainError("t must be positive");
  const Wide tw = Wide(numerator(t)) / Wide(denominator(t));
  const Wide xw = Wide(numerator(x)) / Wide(denominator(x));
  const Wide root = sqrt(3 * tw);
  const Wide u = 3 * root / 2 * xw;
  if (abs(u) > 1) throw DomainError("arcsin argument out of [-1, 1]");
  return Real(2 / root * sin(asin(u) / 3));
}

}  // namespace capa
