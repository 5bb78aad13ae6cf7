#pragma once

#include <array>

#include "capa/numbers.hpp"
#include "capa/oracle.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

struct MadhavaSineTable {
  Radius radius;
  std::array<Int, 24> jya;  // entry j holds jya(j * 225'), j = 1..24

  const Int& at(int j) const;  // 1-based
  /// kojya of entry j via quadrant symmetry: jya((24 - j) * 225').
  Int kojya(int j) const;
};

/// Generates all 24 entries from the high-precision sine.
MadhavaSineTable build_madhava_table(const Radius& r);

/// round(sqrt(r^2 - m^2)), 0 <= m <= r, thirds.
Int kojya_from_jya(const Int& m, const Radius& r);

/// Nilakantha's difference of arcs: 2 r (jya2 - jya1) / (kojya2 + kojya1),
/// exact rational in the unit of the inputs; sign follows jya2 - jya1.
Rat arc_difference(const Rat& jya1, const Rat& kojya1, const Rat& jya2,
                   const Rat& kojya2, const Rat& r);

struct LargeArcResult {
  Int s;
  Int s1;       // chosen table arc
  Int p;        // signed correction, s = s1 + p
  Int kojya_m;  // kojya of the queried jya
};

/// Arc of a jya at least as large as the first table entry: pick the entry
/// with the nearest jya (ties to the smaller index) and correct by the
/// difference-of-arcs formula.
LargeArcResult arcsin_large(const Int& m, const Radius& r,
                            const MadhavaSineTable& table);

/// |2 r tan(step / 2r) - step| rounded to thirds: the worst-case error of
/// the single-step correction across one table interval.
Int max_error_bound(const Radius& r, const Int& table_step = Int(810000));

}  // namespace capa
