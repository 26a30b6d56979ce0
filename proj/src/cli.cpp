#include "gsnn/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "gsnn/json_io.hpp"
#include "gsnn/presets.hpp"
#include "gsnn/verify.hpp"

namespace gsnn {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string group;       // preset name or inline JSON
  std::string group_file;
  std::string groups;      // comma-separated presets (table command)
  std::string mode = "auto";  // exact | float | auto
  double eps = 1e-9;
  double eps_orth = 1e-12;
  double eps_gap = 1e-9;  // invariance pass threshold
  std::string out_dir = "out";
  uint64_t seed = 0;
  int trials = 100;
  int max_order = kDefaultMaxGroupOrder;
};

json load_group_spec(const RunConfig& cfg) {
  if (!cfg.group_file.empty()) {
    std::ifstream in(cfg.group_file);
    if (!in) throw SpecError("cannot open group file: " + cfg.group_file);
    return json::parse(in);
  }
  if (cfg.group.empty()) throw SpecError("no group given; use --group or --group-file");
  if (!cfg.group.empty() && cfg.group.front() == '{') return json::parse(cfg.group);
  return preset_by_name(cfg.group).spec;
}

bool use_float(const RunConfig& cfg, const json& spec) {
  if (cfg.mode == "float") return true;
  if (cfg.mode == "exact") {
    if (spec_requires_float(spec)) throw SpecError("group spec requires float mode");
    return false;
  }
  return spec_requires_float(spec);
}

Tolerances tolerances(const RunConfig& cfg) {
  Tolerances t;
  t.eq = cfg.eps;
  t.pivot = cfg.eps;
  t.orth = cfg.eps_orth;
  return t;
}

void write_file(const fs::path& path, const std::string& contents) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << contents;
}

template <class S>
InstanceScalars<S> default_scalars(int /*dim*/) {
  InstanceScalars<S> s;
  s.a = S(1);
  if constexpr (ScalarTraits<S>::exact)
    s.b = ratio(1, 2);
  else
    s.b = 0.5;
  s.d = S(0);
  return s;
}

template <class S>
int cmd_enumerate(const RunConfig& cfg, const json& spec, std::ostream& out) {
  FiniteGroup<S> G = group_from_spec<S>(spec, cfg.max_order, tolerances(cfg));
  Enumeration<S> e = enumerate_architectures(G);
  for (const auto& a : e.archs)
    write_file(fs::path(cfg.out_dir) / ("arch_" + a.name + ".json"),
               architecture_to_json(a).dump(2) + "\n");
  std::set<int> rows_done;
  for (const auto& a : e.archs) {
    if (!rows_done.insert(a.row).second) continue;
    CohomologyGroup ring = cohomology_group(G.table, a.H, e.sub_classes.subgroups);
    write_file(fs::path(cfg.out_dir) / ("cohomology_ring_" + std::to_string(a.row) + ".json"),
               cohomology_to_json(ring, e.sub_classes).dump(2) + "\n");
  }
  write_file(fs::path(cfg.out_dir) / "summary.csv", summary_csv(e.archs));
  out << summary_csv(e.archs);
  return 0;
}

template <class S>
int cmd_describe(const RunConfig& cfg, const json& spec, std::ostream& out) {
  FiniteGroup<S> G = group_from_spec<S>(spec, cfg.max_order, tolerances(cfg));
  Enumeration<S> e = enumerate_architectures(G);
  json j;
  j["schema"] = kSchemaVersion;
  j["group"] = json{{"order", G.order()}, {"dim", G.dim},
                    {"mode", ScalarTraits<S>::exact ? "exact" : "float"}};
  json archs = json::array();
  for (const auto& a : e.archs) archs.push_back(architecture_to_json(a));
  j["architectures"] = archs;
  out << j.dump(2) << "\n";
  return 0;
}

template <class S>
int cmd_verify(const RunConfig& cfg, const json& spec, std::ostream& out, std::ostream& err) {
  FiniteGroup<S> G = group_from_spec<S>(spec, cfg.max_order, tolerances(cfg));
  Enumeration<S> e = enumerate_architectures(G);
  if (cfg.trials == 0) err << "warning: --trials 0 makes every check vacuous\n";
  bool all_pass = true;
  json reports = json::array();
  for (const auto& a : e.archs) {
    SNNInstance<S> inst = sample_instance(G, a, default_scalars<S>(G.dim));
    double gap = invariance_report(G, inst, cfg.trials, cfg.seed);
    bool pass = gap <= cfg.eps_gap;
    all_pass = all_pass && pass;
    reports.push_back(json{{"architecture", a.name},
                           {"trials", cfg.trials},
                           {"max_gap", gap},
                           {"pass", pass}});
  }
  json j;
  j["schema"] = kSchemaVersion;
  j["reports"] = reports;
  j["pass"] = all_pass;
  out << j.dump(2) << "\n";
  write_file(fs::path(cfg.out_dir) / "verify.json", j.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

template <class S>
int cmd_graph(const RunConfig& cfg, const json& spec, std::ostream& out) {
  FiniteGroup<S> G = group_from_spec<S>(spec, cfg.max_order, tolerances(cfg));
  Enumeration<S> e = enumerate_architectures(G);
  MorphismGraph g = build_morphism_graph(G, e.archs);
  std::string dot = morphism_dot(g);
  write_file(fs::path(cfg.out_dir) / "morphisms.dot", dot);
  write_file(fs::path(cfg.out_dir) / "morphisms.json", morphism_graph_to_json(g).dump(2) + "\n");
  for (const auto& a : e.archs)
    write_file(fs::path(cfg.out_dir) / ("cohomology_" + a.name + ".dot"),
               cohomology_dot(a.rep, G.generators, "architecture " + a.name));
  out << dot;
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<GroupPreset> groups;
  if (cfg.groups.empty()) {
    groups = table_presets();
  } else {
    std::stringstream ss(cfg.groups);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) groups.push_back(preset_by_name(name));
    }
  }
  std::string md = "| group | type 1 | type 2 |\n|---|---|---|\n";
  std::string csv = "group,type1,type2\n";
  for (const GroupPreset& p : groups) {
    try {
      TableCounts tc;
      if (spec_requires_float(p.spec)) {
        FiniteGroup<double> G = group_from_spec<double>(p.spec, cfg.max_order, tolerances(cfg));
        tc = table_counts(G);
      } else {
        FiniteGroup<Rat> G = group_from_spec<Rat>(p.spec, cfg.max_order, tolerances(cfg));
        tc = table_counts(G);
      }
      std::string t1 = std::to_string(tc.type1_admissible) + "/" + std::to_string(tc.type1_total);
      std::string t2 = std::to_string(tc.type2_admissible) + "/" + std::to_string(tc.type2_total);
      md += "| " + p.name + " | " + t1 + " | " + t2 + " |\n";
      csv += p.name + "," + t1 + "," + t2 + "\n";
    } catch (const std::exception& ex) {
      err << "group " << p.name << " failed: " << ex.what() << "\n";
      md += "| " + p.name + " | error | error |\n";
      csv += p.name + ",error,error\n";
    }
  }
  out << md;
  write_file(fs::path(cfg.out_dir) / "table.md", md);
  write_file(fs::path(cfg.out_dir) / "table.csv", csv);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and verify irreducible invariant shallow ReLU architectures "
               "of finite orthogonal matrix groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    if (needs_group) {
      cmd->add_option("--group", cfg.group, "group preset name or inline JSON spec");
      cmd->add_option("--group-file", cfg.group_file, "path to a JSON group spec");
    }
    cmd->add_option("--mode", cfg.mode, "exact|float|auto")->check(CLI::IsMember({"exact", "float", "auto"}));
    cmd->add_option("--eps", cfg.eps, "equality/pivot tolerance (float mode)");
    cmd->add_option("--eps-orth", cfg.eps_orth, "orthogonality tolerance");
    cmd->add_option("--eps-gap", cfg.eps_gap, "invariance pass threshold");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--trials", cfg.trials, "random trials for verification");
    cmd->add_option("--max-order", cfg.max_order, "group order bound")->check(CLI::PositiveNumber);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "write one JSON per architecture plus a CSV summary");
  CLI::App* describe = app.add_subcommand("describe", "print the full enumeration as JSON");
  CLI::App* verify = app.add_subcommand("verify", "sample instances and check invariance numerically");
  CLI::App* graph = app.add_subcommand("graph", "emit morphism and cohomology DOT files");
  CLI::App* table = app.add_subcommand("table", "admissible/total counts for the preset groups");
  for (CLI::App* c : {enumerate, describe, verify, graph}) add_common(c, true);
  add_common(table, false);
  table->add_option("--groups", cfg.groups, "comma-separated preset names (default: survey presets)");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table(cfg, out, err);
    json spec = load_group_spec(cfg);
    bool flt = use_float(cfg, spec);
    if (enumerate->parsed())
      return flt ? cmd_enumerate<double>(cfg, spec, out) : cmd_enumerate<Rat>(cfg, spec, out);
    if (describe->parsed())
      return flt ? cmd_describe<double>(cfg, spec, out) : cmd_describe<Rat>(cfg, spec, out);
    if (verify->parsed())
      return flt ? cmd_verify<double>(cfg, spec, out, err) : cmd_verify<Rat>(cfg, spec, out, err);
    if (graph->parsed())
      return flt ? cmd_graph<double>(cfg, spec, out) : cmd_graph<Rat>(cfg, spec, out);
  } catch (const SpecError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gsnn
