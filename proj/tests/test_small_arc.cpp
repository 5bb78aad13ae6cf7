#include <doctest.h>

#include <random>
#include <vector>

#include "capa/oracle.hpp"
#include "capa/small_arc.hpp"

using namespace capa;

namespace {
const Radius kR = standard_trijya();
}

TEST_SUITE("small_arc") {

TEST_CASE("series anchors at table nodes") {
  CHECK(madhava_jya(Int(810000), kR) == 809422);    // 225'
  CHECK(madhava_jya(Int(1620000), kR) == 1615378);  // 450'
  CHECK(madhava_jya(Int(6480000), kR) == 6187944);  // 1800'
  CHECK(madhava_jya(Int(12960000), kR) == 10717834);  // 3600'
  CHECK(madhava_jya(Int(13770000), kR) == 11099597);  // 3825'
  CHECK(madhava_jya(Int(19440000), kR) == 12375888);  // 5400' -> r
  CHECK(madhava_jya(Int(0), kR) == 0);
}

TEST_CASE("series is odd") {
  CHECK(madhava_jya(Int(-810000), kR) == -809422);
  CHECK(madhava_jya(Int(-19440000), kR) == -12375888);
}

TEST_CASE("series matches the oracle within rounding") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Int s = Int(rng() % 19440001);
    const Int expected = round_real(oracle_jya(s, kR));
    CHECK(abs(madhava_jya(s, kR) - expected) <= 1);
  }
}

TEST_CASE("series domain") {
  CHECK_THROWS_AS(madhava_jya(Int(19440001), kR), DomainError);
  CHECK_THROWS_AS(madhava_jya(Int(810000), Radius{Int(0)}), DomainError);
}

TEST_CASE("cubic truncation") {
  CHECK(cubic_jya(kR.thirds, kR) == 10313240);  // r - r/6 exactly
  CHECK(cubic_jya(Int(0), kR) == 0);
  // below one table step the cubic agrees with the full series to 1'''
  for (Int s = 90000; s <= 810000; s += 90000)
    CHECK(abs(cubic_jya(s, kR) - madhava_jya(s, kR)) <= 1);
}

TEST_CASE("cubic arc recovery") {
  CHECK(arcsin_poly3(Int(809422), kR) == 809999);
  CHECK(arcsin_poly3(Int(1615378), kR) == 1619965);
  CHECK(arcsin_poly3(Int(0), kR) == 0);
  CHECK_THROWS_AS(arcsin_poly3(Int(-1), kR), DomainError);
  CHECK_THROWS_AS(arcsin_poly3(kR.thirds + 1, kR), DomainError);
}

TEST_CASE("arcsin series coefficients") {
  const std::vector<Rat> c = arcsin_series_coefficients(5);
  REQUIRE(c.size() == 5);
  CHECK(c[0] == Rat(1));
  CHECK(c[1] == Rat(1, 6));
  CHECK(c[2] == Rat(3, 40));
  CHECK(c[3] == Rat(5, 112));
  CHECK(c[4] == Rat(35, 1152));
  CHECK(arcsin_series(Rat(1, 2), 1) == Rat(1, 2));
  CHECK(arcsin_series(Rat(1, 2), 2) == Rat(25, 48));
  CHECK_THROWS_AS(arcsin_series(Rat(1, 2), 0), DomainError);
  CHECK_THROWS_AS(arcsin_series(Rat(3, 2), 3), DomainError);
}

TEST_CASE("arcsin series converges to the oracle") {
  const Real target = asin(Real(1) / 2);
  const Real value = to_real(arcsin_series(Rat(1, 2), 40));
  CHECK(abs(value - target) < Real("1e-20"));
}

TEST_CASE("iteration reproduces the first worked trace") {
  const VariyarResult result = variyar_arcsin(Int(809422), kR);
  CHECK(result.s == 810000);
  CHECK(result.trace.converged);
  REQUIRE(result.trace.steps.size() == 3);
  CHECK(result.trace.steps[0].delta == 577);
  CHECK(result.trace.steps[0].s == 809999);
  CHECK(result.trace.steps[1].delta == 578);
  CHECK(result.trace.steps[1].s == 810000);
  CHECK(result.trace.steps[2].delta == 578);
  CHECK(result.trace.steps[2].s == 810000);
}

TEST_CASE("iteration reproduces the second worked trace") {
  const VariyarResult result = variyar_arcsin(Int(1615378), kR);
  CHECK(result.s == 1620004);
  REQUIRE(result.trace.steps.size() == 3);
  CHECK(result.trace.steps[0].delta == 4587);
  CHECK(result.trace.steps[0].s == 1619965);
  CHECK(result.trace.steps[1].delta == 4626);
  CHECK(result.trace.steps[1].s == 1620004);
  CHECK(result.trace.steps[2].delta == 4626);
  CHECK(result.trace.steps[2].s == 1620004);
}

TEST_CASE("iteration diverges beyond the fixed-point bound") {
  const Int m = 11757094;  // 0.95 r, where 9 m^2 > 8 r^2
  CHECK_THROWS_AS(variyar_arcsin(m, kR), ConvergenceError);
  try {
    variyar_arcsin(m, kR);
  } catch (const ConvergenceError& e) {
    CHECK(e.trace.steps.empty());
    CHECK(e.trace.m == m);
  }
}

TEST_CASE("iteration cap raises with the partial trace attached") {
  try {
    variyar_arcsin(Int(1615378), kR, 1);
    CHECK(false);
  } catch (const ConvergenceError& e) {
    CHECK(e.trace.steps.size() == 1);
    CHECK_FALSE(e.trace.converged);
  }
}

TEST_CASE("exact iteration") {
  CHECK(variyar_arcsin_exact(Rat(1, 2), Rat(1), 0) == Rat(1, 2));
  CHECK(variyar_arcsin_exact(Rat(1, 2), Rat(1), 1) == Rat(25, 48));
  CHECK(variyar_arcsin_exact(Rat(1, 2), Rat(1), 2) == Rat(347401, 663552));
  // the iterates approach the root of y - y^3/6 = x, the inverse of the
  // cubic sine model, not arcsin itself
  const auto residual = [](const Rat& y) -> Rat {
    return abs(y - y * y * y / 6 - Rat(1, 2));
  };
  const Rat y5 = variyar_arcsin_exact(Rat(1, 2), Rat(1), 5);
  const Rat y9 = variyar_arcsin_exact(Rat(1, 2), Rat(1), 9);
  CHECK(residual(y9) < residual(y5));
  CHECK(to_real(residual(y9)) < Real("1e-6"));
  // for small x the model bias is negligible and arcsin comes back
  const Real small = to_real(variyar_arcsin_exact(Rat(1, 50), Rat(1), 8));
  CHECK(abs(small - asin(Real(1) / 50)) < Real("1e-9"));
}

TEST_CASE("coefficient engine against the printed expansions") {
  CHECK(iterate_coeff_series(0, 2) == std::vector<Int>{1, 0, 0});
  CHECK(iterate_coeff_series(2, 4) == std::vector<Int>{1, 1, 3, 3, 1});
  CHECK(iterate_coeff_series(3, 6) ==
        std::vector<Int>{1, 1, 3, 12, 28, 57, 96});
  CHECK(iterate_coeff_series(4, 6) ==
        std::vector<Int>{1, 1, 3, 12, 55, 192, 618});
  CHECK(iterate_coeff_series(5, 6) ==
        std::vector<Int>{1, 1, 3, 12, 55, 273, 1185});
  CHECK_THROWS_AS(iterate_coeff_series(-1, 2), DomainError);
  CHECK_THROWS_AS(iterate_coeff_series(3, 2), DomainError);
}

TEST_CASE("coefficients stabilize to the ternary-tree numbers") {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Int> c = iterate_coeff_series(n, n + 2);
    for (int a = 0; a <= n; ++a) CHECK(c[a] == a001764(a));
    CHECK(c[n + 1] != a001764(n + 1));
  }
}

TEST_CASE("ternary-tree sequence") {
  CHECK(a001764(0) == 1);
  CHECK(a001764(1) == 1);
  CHECK(a001764(2) == 3);
  CHECK(a001764(3) == 12);
  CHECK(a001764(4) == 55);
  CHECK(a001764(5) == 273);
  CHECK(a001764(6) == 1428);
  CHECK(a001764(7) == 7752);
  CHECK_THROWS_AS(a001764(-1), DomainError);
}

TEST_CASE("closed form of the stabilized series") {
  const Rat t(1, 100);
  const Rat x(1, 10);
  Rat partial = 0;
  Rat term = x;
  const Rat txx = t * x * x;
  for (int a = 0; a <= 20; ++a) {
    partial += Rat(a001764(a)) * term;
    term *= txx;
  }
  const Real closed = gf_closed_form(t, x);
  CHECK(abs(closed - to_real(partial)) / abs(closed) < Real("1e-30"));
  CHECK_THROWS_AS(gf_closed_form(Rat(0), x), DomainError);
  CHECK_THROWS_AS(gf_closed_form(Rat(1), Rat(1)), DomainError);
}

}  // TEST_SUITE
