#include "qd/json_render.hpp"

#include <sstream>

namespace qd {

Json render(const SingularityPattern& pattern) {
  return Json(pattern.orders());
}

Json render(const AbelianPattern& cover) {
  Json doc;
  doc["zero_orders"] = cover.zero_orders;
  doc["marked_count"] = cover.marked_count;
  doc["cover_genus"] = cover.genus;
  return doc;
}

Json render(const ComponentReport& report) {
  Json doc;
  doc["pattern"] = render(report.stratum.pattern);
  doc["genus"] = report.stratum.genus;
  doc["dimension"] = dimension(report.stratum);
  doc["status"] = std::string(to_string(report.status));
  Json components = Json::array();
  for (ComponentLabel label : report.components)
    components.push_back(std::string(to_string(label)));
  doc["components"] = std::move(components);
  if (report.family) {
    doc["family"] = Json{{"family_id", std::string(to_string(report.family->family))},
                         {"g", report.family->g},
                         {"k", report.family->k}};
  } else {
    doc["family"] = nullptr;
  }
  doc["source"] = report.source;
  return doc;
}

Json render(const StratumMap& map) {
  Json doc;
  doc["base"] = Json{{"pattern", render(map.base.pattern)},
                     {"genus", map.base.genus}};
  doc["degree"] = map.covering.degree();
  Json profile = Json::array();
  for (const FiberProfile& fiber : map.covering.fibers())
    profile.push_back(Json{{"order", fiber.base_order},
                           {"partition", fiber.ram_indices}});
  doc["profile"] = std::move(profile);
  doc["target"] = Json{{"pattern", render(map.target)},
                       {"genus", map.target_genus}};
  doc["dims"] = Json{{"base", map.base_dim}, {"target", map.target_dim}};
  doc["tag"] = std::string(to_string(map.tag));
  return doc;
}

Json render(const StratumTable& table) {
  Json doc;
  doc["max_genus"] = table.max_genus;
  doc["max_points"] = table.max_points;
  Json genera = Json::array();
  for (int g = 0; g <= table.max_genus; ++g) {
    Json block;
    block["genus"] = g;
    Json strata = Json::array();
    for (const ComponentReport& report :
         table.by_genus[static_cast<std::size_t>(g)])
      strata.push_back(render(report));
    block["strata"] = std::move(strata);
    genera.push_back(std::move(block));
  }
  doc["genera"] = std::move(genera);
  doc["summary"] = Json{{"connected", table.connected_count},
                        {"two_components", table.two_component_count},
                        {"empty", table.empty_count}};
  return doc;
}

Json render(const SurfaceAnalysis& analysis) {
  Json doc;
  doc["pattern"] = render(analysis.pattern);
  doc["genus"] = analysis.genus;
  doc["is_square"] = analysis.square;
  Json classes = Json::array();
  for (const VertexClass& vertex : analysis.classes)
    classes.push_back(Json{{"corners", vertex.corners.size()},
                           {"angle_multiple", vertex.angle_multiple},
                           {"order", vertex.order}});
  doc["vertex_classes"] = std::move(classes);
  return doc;
}

std::string render_markdown(const StratumTable& table) {
  std::ostringstream out;
  out << "# Strata up to genus " << table.max_genus << " (at most "
      << table.max_points << " singularities)\n";
  for (int g = 0; g <= table.max_genus; ++g) {
    out << "\n## Genus " << g << "\n\n";
    out << "| stratum | dim | status | components | family |\n";
    out << "|---|---|---|---|---|\n";
    for (const ComponentReport& report :
         table.by_genus[static_cast<std::size_t>(g)]) {
      out << "| Q(" << report.stratum.pattern.to_string() << ") | "
          << dimension(report.stratum) << " | " << to_string(report.status)
          << " | ";
      for (std::size_t i = 0; i < report.components.size(); ++i)
        out << (i ? ", " : "") << to_string(report.components[i]);
      out << " | ";
      if (report.family)
        out << to_string(report.family->family) << " (g="
            << report.family->g << ", k=" << report.family->k << ")";
      out << " |\n";
    }
  }
  out << "\n| summary | count |\n|---|---|\n";
  out << "| connected | " << table.connected_count << " |\n";
  out << "| two components | " << table.two_component_count << " |\n";
  out << "| empty | " << table.empty_count << " |\n";
  return out.str();
}

}  // namespace qd
