#include "doctest.h"

#include <algorithm>

#include "fccs/tables.hpp"

using namespace fccs;

TEST_CASE("table catalogue") {
  const auto ids = table_ids();
  CHECK(ids.size() == 15);
  CHECK(std::find(ids.begin(), ids.end(), "T1") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "T15") != ids.end());
  CHECK_THROWS(run_table("T99"));
}

TEST_CASE("cheap table reproduces and serializes deterministically") {
  const TableReport a = run_table("T1");
  CHECK(a.pass());
  CHECK(!a.cells.empty());
  const TableReport b = run_table("T1", false, 4);
  CHECK(table_csv(a) == table_csv(b));
  CHECK(table_csv(a).rfind("table,", 0) == 0);  // header row first
}

TEST_CASE("expensive tiers refuse with a cost estimate") {
  const TableReport r = run_table("T10");
  CHECK(r.refused);
  CHECK(!r.pass());
  CHECK(r.message.find("solves") != std::string::npos);
  const std::string csv = table_csv(r);
  CHECK(csv.find("refused") != std::string::npos);
}
