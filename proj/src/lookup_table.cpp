#include "capa/lookup_table.hpp"

#include "capa/errors.hpp"

namespace capa {

namespace {

// Table 1 mnemonics, stored verbatim; the katapayadi decoding is not
// implemented.
const char* const kKatapayadi[24] = {
    "lavaṇaṃ nindyaṃ", "kapilā gopī",     "cararāśaya",      "stavārthitayā",
    "laghunoddiṣṭo",   "rājñaḥ praḷayo",  "dhāmnāṃ trinetra", "narakapuram",
    "savadhūṭīndro",   "jalasūradrī",     "himavān guru",    "striśaṅkuvaraḥ",
    "varado vajrī",    "tilabhūrmeruḥ",   "kālena tatra",    "nṛpaticaraḥ",
    "tilakaṃ sāndraṃ", "dhāvatisarit",    "na me kuñjaro",   "nivṛttajaraḥ",
    "śreṣṭhakaḷatra",  "mamāśādhātrī",    "dhūpo'gnīnā",     "mbutilavanagaḥ",
};

}  // namespace

LookupTable build_lookup_table(const Rat& r_minutes, TableMode mode) {
  if (r_minutes <= 0) throw DomainError("radius must be positive");
  LookupTable table{r_minutes, mode, {}};
  table.entries.reserve(24);
  for (int k = 1; k <= 24; ++k) {
    const Rat root = icbrt_rational(k * r_minutes * r_minutes / 10, 28800);
    const Int root_seconds = round_rat(root * 60);
    Int jya;
    Int arc;
    if (mode == TableMode::commentary) {
      arc = root_seconds * 60;
      jya = arc - 60 * k;
    } else {
      jya = root_seconds * 60;
      arc = jya + 60 * k;
    }
    table.entries.push_back({k, jya, arc, kKatapayadi[k - 1]});
  }
  return table;
}

LookupHit lookup_arc(const LookupTable& table, const Int& m) {
  const Int lo = table.entries.front().jya - 1800;
  const Int hi = table.entries.back().jya + 1800;
  if (m < lo || m > hi)
    throw RangeError("jya outside the covered interval [" +
                     format_sexagesimal(lo) + ", " + format_sexagesimal(hi) +
                     "]");
  const LookupEntry* best = &table.entries.front();
  for (const LookupEntry& e : table.entries)
    if (abs(m - e.jya) < abs(m - best->jya)) best = &e;
  return {best->arc, *best, m - best->jya};
}

Int max_candra_jya(const Radius& r) {
  if (r.thirds <= 0) throw DomainError("radius must be positive");
  const Int result = round_rat(Rat(7 * r.thirds, 80));
  if (r.thirds == standard_trijya().thirds) {
    const LookupTable table =
        build_lookup_table(minutes_from_thirds(r.thirds));
    const Int& k23 = table.entries[22].jya;
    const Int& k24 = table.entries[23].jya;
    if (!(k23 < result && result < k24))
      throw Error("7r/80 fell outside the k=23..24 jya band");
  }
  return result;
}

}  // namespace capa
