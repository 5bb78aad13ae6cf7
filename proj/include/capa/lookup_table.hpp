#pragma once

#include <string>
#include <vector>

#include "capa/numbers.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

// Two readings of the table construction s - m = k'':
//   commentary     arc = cbrt(k r^2 / 10) rounded to seconds, jya = arc - k''
//                  (reproduces the Laghuvivrti values to ~2'')
//   paper_literal  jya = the rounded cube root, arc = jya + k''
//                  (the equation as printed; drifts to 22'' at k = 24)
enum class TableMode { commentary, paper_literal };

struct LookupEntry {
  int k;  // arc-seconds, 1..24
  Int jya;
  Int arc;  // both in thirds, stored at second resolution
  std::string katapayadi;
};

struct LookupTable {
  Rat radius;  // minutes
  TableMode mode;
  std::vector<LookupEntry> entries;
};

LookupTable build_lookup_table(const Rat& r_minutes,
                               TableMode mode = TableMode::commentary);

struct LookupHit {
  Int arc;
  LookupEntry entry;
  Int distance;  // m - entry.jya
};

/// Nearest-jya lookup; ties go to the smaller k. The query must lie within
/// [first jya - 30'', last jya + 30''].
LookupHit lookup_arc(const LookupTable& table, const Int& m);

/// round(7 r / 80), the largest jya the lunar longitude correction needs.
Int max_candra_jya(const Radius& r);

}  // namespace capa
