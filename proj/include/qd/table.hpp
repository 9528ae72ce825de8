#pragma once

#include <vector>

#include "qd/classify.hpp"

namespace qd {

// Classification table: every zero-free stratum with at most max_points
// singularities, per genus, with summary counts.
struct StratumTable {
  int max_genus = 0;
  int max_points = 0;
  std::vector<std::vector<ComponentReport>> by_genus;  // index = genus
  int connected_count = 0;
  int two_component_count = 0;
  int empty_count = 0;
};

StratumTable build_table(int max_genus, int max_points);

}  // namespace qd
