#include "qd/table.hpp"

namespace qd {

StratumTable build_table(int max_genus, int max_points) {
  if (max_genus < 0)
    fail(ErrorCode::ParameterOutOfRange, "max_genus must be non-negative");
  StratumTable table;
  table.max_genus = max_genus;
  table.max_points = max_points;
  table.by_genus.resize(static_cast<std::size_t>(max_genus) + 1);
  for (int g = 0; g <= max_genus; ++g) {
    for (const SingularityPattern& pattern : enumerate_strata(g, max_points)) {
      ComponentReport report = classify(pattern);
      switch (report.status) {
        case StratumStatus::Empty: ++table.empty_count; break;
        case StratumStatus::Connected: ++table.connected_count; break;
        case StratumStatus::TwoComponents: ++table.two_component_count; break;
      }
      table.by_genus[static_cast<std::size_t>(g)].push_back(std::move(report));
    }
  }
  return table;
}

}  // namespace qd
