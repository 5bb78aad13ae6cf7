#include "capa/large_arc.hpp"

#include "capa/errors.hpp"

namespace capa {

const Int& MadhavaSineTable::at(int j) const {
  if (j < 1 || j > 24) throw RangeError("table index must lie in 1..24");
  return jya[static_cast<std::size_t>(j - 1)];
}

Int MadhavaSineTable::kojya(int j) const {
  if (j < 1 || j > 24) throw RangeError("table index must lie in 1..24");
  return j == 24 ? Int(0) : at(24 - j);
}

MadhavaSineTable build_madhava_table(const Radius& r) {
  if (r.thirds <= 0) throw DomainError("radius must be positive");
  MadhavaSineTable table{r, {}};
  for (int j = 1; j <= 24; ++j)
    table.jya[static_cast<std::size_t>(j - 1)] =
        round_real(oracle_jya(Int(j) * 810000, r));
  return table;
}

Int kojya_from_jya(const Int& m, const Radius& r) {
  if (m < 0 || m > r.thirds) throw DomainError("jya must lie in [0, r]");
  return round_rat(isqrt_rational(Rat(r.thirds * r.thirds - m * m), 8));
}

Rat arc_difference(const Rat& jya1, const Rat& kojya1, const Rat& jya2,
                   const Rat& kojya2, const Rat& r) {
  const Rat denom = kojya1 + kojya2;
  if (denom == 0)
    throw DomainError("degenerate input: both arcs sit at the quadrant");
  return 2 * r * (jya2 - jya1) / denom;
}

LargeArcResult arcsin_large(const Int& m, const Radius& r,
                            const MadhavaSineTable& table) {
  if (m > r.thirds) throw DomainError("jya cannot exceed the radius");
  if (m < table.at(1))
    throw DomainError(
        "jya below the first table entry; use the small-arc method "
        "(variyar_arcsin)");
  int best = 1;
  for (int j = 2; j <= 24; ++j)
    if (abs(m - table.at(j)) < abs(m - table.at(best))) best = j;
  const Int kojya_m = kojya_from_jya(m, r);
  const Int s1 = Int(best) * 810000;
  if (m == table.at(best)) return {s1, s1, Int(0), kojya_m};
  const Rat p = arc_difference(Rat(table.at(best)), Rat(table.kojya(best)),
                               Rat(m), Rat(kojya_m), Rat(r.thirds));
  const Int p_rounded = round_rat(p);
  return {s1 + p_rounded, s1, p_rounded, kojya_m};
}

Int max_error_bound(const Radius& r, const Int& table_step) {
  if (r.thirds <= 0) throw DomainError("radius must be positive");
  const Real rr = to_real(r.thirds);
  const Real x = to_real(table_step);
  return round_real(abs(2 * rr * tan(x / (2 * rr)) - x));
}

}  // namespace capa
