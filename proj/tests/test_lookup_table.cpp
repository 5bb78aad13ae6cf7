#include <doctest.h>

#include "capa/errors.hpp"
#include "capa/lookup_table.hpp"

using namespace capa;

namespace {
const Rat kRMinutes = minutes_from_thirds(standard_trijya().thirds);
}

TEST_SUITE("lookup_table") {

TEST_CASE("commentary construction") {
  const LookupTable table = build_lookup_table(kRMinutes);
  REQUIRE(table.entries.size() == 24);
  CHECK(table.mode == TableMode::commentary);
  // k = 1: root 105'44'' to the nearest second
  CHECK(table.entries[0].k == 1);
  CHECK(table.entries[0].arc == 380640);
  CHECK(table.entries[0].jya == 380580);
  // k = 24: root 304'58'', two seconds shy of the printed 305'00''
  CHECK(table.entries[23].k == 24);
  CHECK(table.entries[23].arc == 1097880);
  CHECK(table.entries[23].jya == 1096440);
}

TEST_CASE("paper-literal construction") {
  const LookupTable table =
      build_lookup_table(kRMinutes, TableMode::paper_literal);
  // k = 1: jya takes the rounded root, arc sits one second above
  CHECK(table.entries[0].jya == 380640);
  CHECK(table.entries[0].arc == 380700);
  // the literal reading drifts to 22'' above the printed arc at k = 24
  CHECK(table.entries[23].jya == 1097880);
  CHECK(table.entries[23].arc == 1099320);
}

TEST_CASE("difference identity and monotonicity") {
  for (const TableMode mode :
       {TableMode::commentary, TableMode::paper_literal}) {
    const LookupTable table = build_lookup_table(kRMinutes, mode);
    Int prev = -1;
    for (const LookupEntry& e : table.entries) {
      CHECK(e.arc - e.jya == Int(e.k) * 60);
      CHECK(e.jya > prev);
      CHECK(e.jya % 60 == 0);  // stored at second resolution
      CHECK(e.arc % 60 == 0);
      prev = e.jya;
    }
  }
}

TEST_CASE("katapayadi labels ride along") {
  const LookupTable table = build_lookup_table(kRMinutes);
  CHECK(table.entries[0].katapayadi == "lavaṇaṃ nindyaṃ");
  CHECK(table.entries[23].katapayadi == "mbutilavanagaḥ");
  for (const LookupEntry& e : table.entries)
    CHECK_FALSE(e.katapayadi.empty());
}

TEST_CASE("nearest-jya lookup") {
  const LookupTable table = build_lookup_table(kRMinutes);
  const LookupHit hit = lookup_arc(table, Int(720000));  // 200'
  CHECK(hit.entry.k == 7);
  CHECK(hit.arc == 728100);  // 202'15''
  CHECK(hit.distance == 720000 - hit.entry.jya);
  // querying a tabulated jya returns its own arc
  for (const LookupEntry& e : table.entries)
    CHECK(lookup_arc(table, e.jya).arc == e.arc);
}

TEST_CASE("ties go to the smaller k") {
  const LookupTable table = build_lookup_table(kRMinutes);
  for (std::size_t i = 0; i + 1 < table.entries.size(); ++i) {
    const Int sum = table.entries[i].jya + table.entries[i + 1].jya;
    if (sum % 2 != 0) continue;
    const LookupHit hit = lookup_arc(table, sum / 2);
    CHECK(hit.entry.k == table.entries[i].k);
  }
}

TEST_CASE("coverage window") {
  const LookupTable table = build_lookup_table(kRMinutes);
  const Int lo = table.entries.front().jya;
  const Int hi = table.entries.back().jya;
  CHECK(lookup_arc(table, lo - 1800).entry.k == 1);
  CHECK(lookup_arc(table, hi + 1800).entry.k == 24);
  CHECK_THROWS_AS(lookup_arc(table, lo - 1801), RangeError);
  CHECK_THROWS_AS(lookup_arc(table, hi + 1801), RangeError);
}

TEST_CASE("largest jya the lunar correction needs") {
  CHECK(max_candra_jya(standard_trijya()) == 1082890);  // 300'48''10'''
  const LookupTable table = build_lookup_table(kRMinutes);
  CHECK(max_candra_jya(standard_trijya()) > table.entries[22].jya);
  CHECK(max_candra_jya(standard_trijya()) < table.entries[23].jya);
}

TEST_CASE("radius domain") {
  CHECK_THROWS_AS(build_lookup_table(Rat(0)), DomainError);
  CHECK_THROWS_AS(build_lookup_table(Rat(-10)), DomainError);
  CHECK_THROWS_AS(max_candra_jya(Radius{Int(0)}), DomainError);
}

}  // TEST_SUITE
