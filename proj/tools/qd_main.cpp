#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qd/classify.hpp"
#include "qd/json_render.hpp"
#include "qd/stratum_map.hpp"
#include "qd/surface_cover.hpp"
#include "qd/surface_json.hpp"
#include "qd/table.hpp"

namespace {

using qd::Json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitEmptyStratum = 3;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) qd::fail(qd::ErrorCode::FileSchema, "cannot write '" + path + "'");
    out << text << "\n";
  }
  void write(const Json& doc) const { write(doc.dump(2)); }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      values.push_back(v);
    } catch (const std::exception&) {
      qd::fail(qd::ErrorCode::PatternSyntax, "bad integer '" + part + "'");
    }
  }
  return values;
}

// Marks the queried stratum's emptiness in the body and upgrades the exit
// code; an empty stratum is an answer, not an input error.
int annotate_empty(Json& doc, const qd::SingularityPattern& pattern) {
  bool empty = qd::is_empty(pattern);
  doc["empty"] = empty;
  if (!empty) return kExitOk;
  doc["masur_smillie_exception"] = qd::empty_stratum_name(pattern);
  return kExitEmptyStratum;
}

void add_bounds_flags(CLI::App* cmd, qd::SearchBounds& bounds) {
  cmd->add_option("--max-degree", bounds.max_degree, "largest covering degree")
      ->capture_default_str();
  cmd->add_option("--max-genus", bounds.max_base_genus, "largest base genus")
      ->capture_default_str();
  cmd->add_option("--max-order", bounds.max_order,
                  "largest base singularity order")
      ->capture_default_str();
  cmd->add_option("--max-points", bounds.max_points,
                  "largest number of base singularities")
      ->capture_default_str();
  cmd->add_option("--min-degree", bounds.min_degree,
                  "smallest covering degree (debug)")
      ->capture_default_str();
}

Json maps_to_json(const std::vector<qd::StratumMap>& maps) {
  Json arr = Json::array();
  for (const qd::StratumMap& map : maps) arr.push_back(qd::render(map));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strata of meromorphic quadratic differentials: invariants, "
               "classification, covering constructions, flat surfaces"};
  app.require_subcommand(1);

  Output output;
  std::string pattern_text;
  auto add_pattern = [&pattern_text](CLI::App* cmd) {
    cmd->add_option("-p,--pattern", pattern_text,
                    "singularity pattern, e.g. \"3,1,-1^8\"")
        ->required();
  };

  int exit_code = kExitOk;

  // stratum-info
  auto* info_cmd = app.add_subcommand(
      "stratum-info", "genus, dimension and emptiness of a stratum");
  add_pattern(info_cmd);
  info_cmd->callback([&] {
    auto pattern = qd::SingularityPattern::parse(pattern_text);
    Json doc;
    doc["pattern"] = qd::render(pattern);
    doc["stripped"] = qd::render(qd::strip_marked(pattern));
    doc["genus"] = qd::genus_of(pattern);
    doc["dimension"] = qd::dimension(pattern);
    exit_code = annotate_empty(doc, pattern);
    output.write(doc);
  });

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "connected-component classification of a stratum");
  add_pattern(classify_cmd);
  classify_cmd->callback([&] {
    auto pattern = qd::SingularityPattern::parse(pattern_text);
    qd::ComponentReport report = qd::classify(pattern);
    Json doc = qd::render(report);
    if (report.status == qd::StratumStatus::Empty) {
      doc["masur_smillie_exception"] = qd::empty_stratum_name(pattern);
      exit_code = kExitEmptyStratum;
    }
    output.write(doc);
  });

  // table
  auto* table_cmd = app.add_subcommand(
      "table", "classification table over all strata up to a genus");
  int table_genus = 4;
  int table_points = 10;
  std::string table_format = "json";
  table_cmd->add_option("--max-genus", table_genus, "largest genus")
      ->capture_default_str();
  table_cmd->add_option("--max-points", table_points,
                        "largest number of singularities")
      ->capture_default_str();
  table_cmd->add_option("--format", table_format, "json or md")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  table_cmd->callback([&] {
    qd::StratumTable table = qd::build_table(table_genus, table_points);
    if (table_format == "md")
      output.write(qd::render_markdown(table));
    else
      output.write(qd::render(table));
  });

  // cover-canonical
  auto* canonical_cmd = app.add_subcommand(
      "cover-canonical",
      "orientation double cover data of a quadratic pattern");
  add_pattern(canonical_cmd);
  canonical_cmd->callback([&] {
    auto pattern = qd::SingularityPattern::parse(pattern_text);
    qd::AbelianPattern cover = qd::canonical_double_cover(pattern);
    Json doc;
    doc["base"] = qd::render(pattern);
    doc["base_genus"] = qd::genus_of(pattern);
    doc.update(qd::render(cover));
    exit_code = annotate_empty(doc, pattern);
    output.write(doc);
  });

  // cover-pattern
  auto* pullback_cmd = app.add_subcommand(
      "cover-pattern", "pull a pattern back along a covering type");
  add_pattern(pullback_cmd);
  int degree = 2;
  std::string partitions_text;
  pullback_cmd->add_option("--degree", degree, "covering degree")->required();
  pullback_cmd
      ->add_option("--partitions", partitions_text,
                   "one partition per pattern entry (canonical order), "
                   "e.g. \"1,1;2;2\"")
      ->required();
  pullback_cmd->callback([&] {
    auto pattern = qd::SingularityPattern::parse(pattern_text);
    std::vector<std::string> chunks = split(partitions_text, ';');
    if (chunks.size() != pattern.size())
      qd::fail(qd::ErrorCode::FiberMismatch,
               std::to_string(chunks.size()) + " partitions for " +
                   std::to_string(pattern.size()) + " pattern entries");
    std::vector<qd::FiberProfile> fibers;
    for (std::size_t i = 0; i < chunks.size(); ++i)
      fibers.push_back({pattern.orders()[i], parse_int_list(chunks[i])});
    qd::CoveringType covering(degree, qd::genus_of(pattern),
                              std::move(fibers));
    qd::SingularityPattern target = qd::pullback_pattern(covering, pattern);
    Json doc;
    doc["base"] = qd::render(pattern);
    doc["base_genus"] = qd::genus_of(pattern);
    doc["degree"] = degree;
    doc["target"] = qd::render(target);
    doc["target_genus"] = qd::covered_genus(covering);
    doc["dims"] = Json{{"base", qd::dimension(pattern)},
                       {"target", qd::dimension(target)}};
    doc["dimension_gap"] = qd::dimension_gap(covering, pattern);
    doc["pullback_square"] =
        std::string(qd::to_string(qd::pullback_is_square(covering, pattern)));
    exit_code = annotate_empty(doc, pattern);
    output.write(doc);
  });

  // break2 / break3
  auto* break2_cmd =
      app.add_subcommand("break2", "break one singularity into two");
  auto* break3_cmd =
      app.add_subcommand("break3", "break one odd singularity into three");
  add_pattern(break2_cmd);
  add_pattern(break3_cmd);
  std::size_t break_index = 0;
  std::string parts_text;
  for (CLI::App* cmd : {break2_cmd, break3_cmd}) {
    cmd->add_option("--index", break_index,
                    "entry position in the canonical pattern")
        ->capture_default_str();
    cmd->add_option("--parts", parts_text, "comma-separated parts")
        ->required();
  }
  auto run_break = [&](int arity) {
    auto pattern = qd::SingularityPattern::parse(pattern_text);
    std::vector<int> parts = parse_int_list(parts_text);
    if (static_cast<int>(parts.size()) != arity)
      qd::fail(qd::ErrorCode::PatternSyntax,
               "expected " + std::to_string(arity) + " parts");
    qd::SingularityPattern result =
        arity == 2 ? qd::break_zero_two(pattern, break_index, parts[0],
                                        parts[1])
                   : qd::break_zero_three(pattern, break_index, parts[0],
                                          parts[1], parts[2]);
    Json doc;
    doc["pattern"] = qd::render(pattern);
    doc["index"] = break_index;
    doc["parts"] = parts;
    doc["result"] = qd::render(result);
    output.write(doc);
  };
  break2_cmd->callback([&] { run_break(2); });
  break3_cmd->callback([&] { run_break(3); });

  // search / catalog
  auto* search_cmd = app.add_subcommand(
      "search", "exhaustive search for dimension-preserving covering maps");
  qd::SearchBounds search_bounds;
  add_bounds_flags(search_cmd, search_bounds);
  search_cmd->callback([&] {
    output.write(maps_to_json(qd::search_dimension_preserving(search_bounds)));
  });
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "known dimension-preserving covering maps within bounds");
  qd::SearchBounds catalog_bounds;
  add_bounds_flags(catalog_cmd, catalog_bounds);
  catalog_cmd->callback(
      [&] { output.write(maps_to_json(qd::catalog(catalog_bounds))); });

  // surface subcommands
  std::string surface_path;
  auto add_surface = [&surface_path](CLI::App* cmd) {
    cmd->add_option("surface", surface_path, "surface JSON file")->required();
  };

  auto* analyze_cmd = app.add_subcommand(
      "surface-analyze", "singularities, genus and holonomy of a surface");
  add_surface(analyze_cmd);
  analyze_cmd->callback([&] {
    qd::FlatSurface surface = qd::read_surface(surface_path);
    std::vector<qd::Violation> violations = qd::validate(surface);
    if (!violations.empty()) {
      Json doc;
      doc["valid"] = false;
      Json list = Json::array();
      for (const qd::Violation& violation : violations)
        list.push_back(violation.message);
      doc["violations"] = std::move(list);
      output.write(doc);
      exit_code = kExitBadInput;
      return;
    }
    Json doc;
    doc["valid"] = true;
    doc.update(qd::render(qd::analyze(surface)));
    output.write(doc);
  });

  auto* cover_cmd = app.add_subcommand(
      "surface-doublecover", "double cover of a surface (canonical default)");
  add_surface(cover_cmd);
  std::string swaps_text;
  cover_cmd->add_option(
      "--swaps", swaps_text,
      "comma-separated 0/1 per pairing, in canonical pairing order");
  cover_cmd->callback([&] {
    qd::FlatSurface surface = qd::read_surface(surface_path);
    qd::CoverSpec spec;
    if (swaps_text.empty()) {
      spec = qd::canonical_cover_spec(surface);
    } else {
      spec.swaps = parse_int_list(swaps_text);
    }
    qd::DoubleCoverResult cover = qd::double_cover(surface, spec);
    Json doc;
    doc["swaps"] = spec.swaps;
    doc["connected"] = cover.connected;
    if (cover.connected) doc.update(qd::render(qd::analyze(cover.surface)));
    doc["surface"] = qd::surface_to_json(cover.surface);
    output.write(doc);
  });

  auto* act_cmd = app.add_subcommand(
      "surface-act", "apply a positive-determinant linear map");
  add_surface(act_cmd);
  std::string matrix_text;
  act_cmd->add_option("--matrix", matrix_text, "a,b,c,d as rationals")
      ->required();
  act_cmd->callback([&] {
    qd::FlatSurface surface = qd::read_surface(surface_path);
    std::vector<std::string> entries = split(matrix_text, ',');
    if (entries.size() != 4)
      qd::fail(qd::ErrorCode::PatternSyntax, "matrix needs four entries");
    std::array<qd::Rational, 4> matrix{
        qd::Rational::parse(entries[0]), qd::Rational::parse(entries[1]),
        qd::Rational::parse(entries[2]), qd::Rational::parse(entries[3])};
    output.write(qd::surface_to_json(qd::gl2_act(surface, matrix)));
  });

  auto* example_cmd =
      app.add_subcommand("surface-example", "emit a reference surface");
  std::string example_name;
  example_cmd
      ->add_option("name", example_name, "torus | pillowcase | figure2")
      ->required();
  example_cmd->callback(
      [&] { output.write(qd::surface_to_json(qd::example(example_name))); });

  for (CLI::App* cmd : app.get_subcommands(static_cast<bool (*)(const CLI::App*)>(nullptr)))
    cmd->add_option("--out", output.path, "write the document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const qd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qd::is_internal(e.code()) ? kExitInternal : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return exit_code;
}
