// Command-line front door: single-instance reports, batch scans over a
// catalog, and axiom verification of scheme files.
//
// Exit codes: 0 success, 2 parse or axiom error, 3 cap exceeded,
// 4 structural/brute inconsistency.

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "schemeforge/schemeforge.hpp"

namespace sf = schemeforge;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInconsistent = 4;

struct SourceFlags {
  std::string preset;
  std::string group_file;
  std::string scheme_file;
  std::optional<int> stabilizer_point;
};

sf::Caps caps_from_env(sf::Caps caps) {
  // SCHEMEFORGE_CAPS="group=40000,degree=512"
  const char* env = std::getenv("SCHEMEFORGE_CAPS");
  if (!env) return caps;
  std::string text(env);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq != std::string::npos) {
      std::string key = item.substr(0, eq);
      std::size_t value = std::stoull(item.substr(eq + 1));
      if (key == "group") caps.group_cap = value;
      if (key == "degree") caps.degree_cap = value;
    }
    pos = end + 1;
  }
  return caps;
}

struct Instance {
  std::string name;
  sf::Scheme scheme;
  std::optional<sf::PermGroup> group;
};

Instance load_instance(const SourceFlags& src, const sf::Caps& caps) {
  int chosen = (src.preset.empty() ? 0 : 1) + (src.group_file.empty() ? 0 : 1) +
               (src.scheme_file.empty() ? 0 : 1);
  if (chosen != 1) throw sf::ParseError("exactly one of --preset, --group, --scheme is required");

  Instance inst;
  if (!src.preset.empty()) {
    sf::Preset preset = sf::make_preset(src.preset, caps);
    inst.name = preset.name;
    inst.group = std::move(preset.group);
    inst.scheme = sf::from_orbitals(*inst.group);
    return inst;
  }
  if (!src.group_file.empty()) {
    sf::GroupSpec spec = sf::parse_group_spec(sf::load_json_file(src.group_file));
    sf::PermGroup g = sf::PermGroup::generate(spec.generators, caps);
    if (spec.has_subgroup) {
      inst.group = sf::coset_action(g, spec.subgroup_generators, caps).image;
    } else if (src.stabilizer_point) {
      sf::PermGroup stab = sf::point_stabilizer(g, *src.stabilizer_point, caps);
      inst.group = sf::coset_action(g, stab.generators, caps).image;
    } else {
      inst.group = std::move(g);
    }
    inst.name = spec.name;
    inst.scheme = sf::from_orbitals(*inst.group);
    return inst;
  }
  inst.name = src.scheme_file;
  inst.scheme = sf::from_color_matrix(sf::parse_scheme_spec(sf::load_json_file(src.scheme_file)));
  return inst;
}

sf::ClassificationReport run_report(Instance inst, const sf::ClassifyOptions& opts) {
  sf::ClassificationReport rep =
      sf::classify(inst.scheme, inst.group ? &*inst.group : nullptr, opts);
  rep.name = inst.name;
  return rep;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const sf::CapExceeded*>(&e)) return kExitCap;
  if (dynamic_cast<const sf::ParseError*>(&e)) return kExitParse;
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schemeforge: Terwilliger-algebra analysis of Schurian association schemes"};
  app.require_subcommand(1);

  sf::Caps base_caps = caps_from_env(sf::Caps{});

  SourceFlags src;
  sf::ClassifyOptions opts;
  opts.caps = base_caps;
  bool as_json = false;
  int parallel = 1;
  bool cross_check = false;

  auto add_caps_flags = [&](CLI::App* cmd) {
    cmd->add_option("--group-cap", opts.caps.group_cap, "maximum group order to enumerate");
    cmd->add_option("--degree-cap", opts.caps.degree_cap, "maximum permutation degree");
  };

  auto* report = app.add_subcommand("report", "classify a single group or scheme");
  report->add_option("--preset", src.preset, "preset name, e.g. a5-cosets or dihedral-7");
  report->add_option("--group", src.group_file, "GroupSpec JSON file");
  report->add_option("--scheme", src.scheme_file, "SchemeSpec JSON file");
  int stab_point = -1;
  report->add_option("--stabilizer-point", stab_point,
                     "act on cosets of the stabilizer of this point (group sources)");
  report->add_option("--base-point", opts.base_point, "Terwilliger base point (default 0)");
  report->add_flag("--json", as_json, "emit the report as JSON");
  report->add_flag("--cross-check-base", cross_check, "recompute dimensions at a second base point");
  add_caps_flags(report);

  auto* scan = app.add_subcommand("scan", "classify every instance in a catalog");
  std::string catalog_file;
  scan->add_option("catalog", catalog_file, "JSON catalog of presets / spec files")->required();
  scan->add_flag("--json", as_json, "emit one JSON report per row");
  scan->add_option("--parallel", parallel, "number of concurrent instances (default 1)");
  add_caps_flags(scan);

  auto* verify = app.add_subcommand("verify", "check the scheme axioms only");
  verify->add_option("--scheme", src.scheme_file, "SchemeSpec JSON file")->required();

  CLI11_PARSE(app, argc, argv);
  if (stab_point >= 0) src.stabilizer_point = stab_point;
  opts.cross_check_base = cross_check;

  try {
    if (report->parsed()) {
      sf::ClassificationReport rep = run_report(load_instance(src, opts.caps), opts);
      std::cout << (as_json ? sf::to_json(rep).dump(2) + "\n" : sf::report_to_text(rep));
      return rep.consistent ? 0 : kExitInconsistent;
    }

    if (verify->parsed()) {
      auto color = sf::parse_scheme_spec(sf::load_json_file(src.scheme_file));
      sf::AxiomReport rep = sf::verify_axioms(color);
      std::cout << rep.summary() << (rep.ok() ? "\n" : "");
      return rep.ok() ? 0 : kExitParse;
    }

    // scan: per-instance errors are recorded and the scan continues
    sf::json catalog = sf::load_json_file(catalog_file);
    const sf::json& items = catalog.is_array() ? catalog : catalog.at("instances");
    struct Row {
      std::string name;
      std::optional<sf::ClassificationReport> report;
      std::string error;
    };
    auto run_item = [&](const sf::json& item) -> Row {
      SourceFlags item_src;
      item_src.preset = item.value("preset", "");
      item_src.group_file = item.value("group", "");
      item_src.scheme_file = item.value("scheme", "");
      std::string name = item_src.preset.empty()
                             ? (item_src.group_file.empty() ? item_src.scheme_file : item_src.group_file)
                             : item_src.preset;
      Row row{name, std::nullopt, ""};
      try {
        row.report = run_report(load_instance(item_src, opts.caps), opts);
        row.name = row.report->name;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    };

    std::vector<Row> rows;
    if (parallel <= 1) {
      for (const auto& item : items) rows.push_back(run_item(item));
    } else {
      std::vector<std::future<Row>> futures;
      for (const auto& item : items)
        futures.push_back(std::async(std::launch::async, run_item, item));
      for (auto& f : futures) rows.push_back(f.get());
    }
    // deterministic output regardless of parallelism
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.name < b.name; });

    std::size_t triply_transitive = 0, triply_regular = 0, inconsistent = 0, failed = 0;
    for (const auto& row : rows) {
      if (!row.report) {
        ++failed;
        std::cout << row.name << ": ERROR " << row.error << "\n";
        continue;
      }
      const auto& r = *row.report;
      if (r.triply_regular_brute) ++triply_regular;
      if (r.is_triply_transitive()) ++triply_transitive;
      if (!r.consistent) ++inconsistent;
      if (as_json) {
        std::cout << sf::to_json(r).dump() << "\n";
      } else {
        std::cout << r.name << ": n=" << r.n << " rank=" << r.rank << " " << sf::to_string(r.thin)
                  << " dims(T0,T1,T" << (r.dim_t_tilde ? ",T~" : "") << ")=(" << r.dim_t0 << ","
                  << r.dim_t1 << "," << r.dim_t;
        if (r.dim_t_tilde) std::cout << "," << *r.dim_t_tilde;
        std::cout << ") diamonds=" << r.unordered_diamond_pairs
                  << (r.is_triply_transitive() ? " triply-transitive" : "")
                  << (r.consistent ? "" : " INCONSISTENT") << "\n";
      }
    }
    std::cout << "summary: " << rows.size() << " instances, " << triply_transitive
              << " triply transitive, " << triply_regular << " triply regular, " << inconsistent
              << " inconsistent, " << failed << " failed\n";
    return inconsistent > 0 ? kExitInconsistent : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
