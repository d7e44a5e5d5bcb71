#pragma once

#include <string>
#include <vector>

#include "fccs/cheb.hpp"

namespace fccs {

// One checked (or informational) cell of a reproduction table.
struct TableCell {
  std::vector<std::pair<std::string, std::string>> params;  // name -> value
  double computed = 0.0;
  double reference = 0.0;
  bool has_reference = false;
  std::string ref_kind;  // "fixed" (frozen constant), "protocol" (recomputed), "info"
  bool checked = false;
  bool pass = true;
  std::string note;
};

struct TableReport {
  std::string id;
  std::string title;
  std::vector<TableCell> cells;
  bool refused = false;
  std::string message;
  bool pass() const {
    if (refused) return false;
    for (const auto& c : cells)
      if (c.checked && !c.pass) return false;
    return true;
  }
};

std::vector<std::string> table_ids();

// Recomputes table `id` (T1..T15).  Expensive tiers refuse unless allowed,
// reporting the estimated cost.  `jobs` parallelizes independent cells;
// the output order is fixed regardless of scheduling.
TableReport run_table(const std::string& id, bool expensive = false, int jobs = 1);

// CSV serialization: params..., computed, reference, ref_kind, checked, pass.
std::string table_csv(const TableReport& rep);

}  // namespace fccs
