#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cdg/errors.hpp"
#include "cdg/export.hpp"
#include "cdg/group_file.hpp"
#include "cdg/verify.hpp"

namespace {

using namespace cdg;

/// Resolve a catalog name ("S4", "F(7,3)", "C12xC5", ...) or a group file
/// path into a built group.
std::pair<std::string, FiniteGroup> resolve_group(const std::string& spec) {
  if (auto entry = entry_from_name(spec)) return {entry->name, build(*entry)};
  if (!std::filesystem::exists(spec)) throw Error("no catalog group or file named '" + spec + "'");
  return {std::filesystem::path(spec).stem().string(), load_group_file(spec)};
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

int cmd_analyze(const std::string& spec) {
  auto [name, group] = resolve_group(spec);
  GroupAnalysis a = analyze_group(name, std::move(group));

  std::cout << "group: " << a.name << "\n";
  std::cout << "order: " << a.group.order() << "\n";
  std::cout << "exponent: " << a.group.exponent() << "\n";
  std::cout << "classes: " << a.cc.count() << "\n";
  std::cout << "class sizes:";
  for (auto s : a.cc.sizes) std::cout << " " << s;
  std::cout << "\ndegrees:";
  for (auto d : a.table.degrees) std::cout << " " << d;
  std::cout << "\ncodegrees: " << join_u64(nonprincipal_codegree_multiset(a.records)) << "\n";
  std::cout << "gamma: vertices=" << a.gamma_stats.vertex_count
            << " edges=" << a.gamma_stats.edge_count
            << " components=" << a.gamma_stats.component_count
            << " triangle=" << (a.gamma_stats.has_triangle ? "yes" : "no")
            << " complete=" << (a.gamma_stats.is_complete ? "yes" : "no") << "\n";
  std::cout << "delta: vertices=" << a.delta_stats.vertex_count
            << " edges=" << a.delta_stats.edge_count
            << " components=" << a.delta_stats.component_count << "\n";
  if (a.frobenius)
    std::cout << "frobenius: kernel=" << a.frobenius->kernel.order()
              << " complement=" << a.frobenius->complement.order() << "\n";
  else
    std::cout << "frobenius: none\n";
  if (a.two_frobenius)
    std::cout << "two-frobenius: K=" << a.two_frobenius->k.order()
              << " L=" << a.two_frobenius->l.order() << "\n";
  else
    std::cout << "two-frobenius: none\n";
  std::cout << "predicates: abelian=" << (a.predicates.is_abelian ? "yes" : "no")
            << " nilpotent=" << (a.predicates.is_nilpotent ? "yes" : "no")
            << " solvable=" << (a.predicates.is_solvable ? "yes" : "no")
            << " simple=" << (a.predicates.is_simple ? "yes" : "no");
  if (a.predicates.p_group_prime) std::cout << " p-group=" << *a.predicates.p_group_prime;
  std::cout << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const VerifyOptions& options,
               const std::string& report_path) {
  VerifyReport report = run_verify(suites.empty() ? std::vector<std::string>{"all"} : suites,
                                   options);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw Error("cannot write report file: " + report_path);
    out << report_to_jsonl(report);
  }
  std::cout << report_summary(report);
  return report.all_passed() ? 0 : 1;
}

int cmd_catalog_list(std::uint32_t max_order, bool as_json, std::ostream& out) {
  auto entries = verify_corpus(max_order);
  if (as_json) {
    out << catalog_manifest(entries).dump(2) << "\n";
  } else {
    for (const auto& e : entries)
      out << e.name << "  order=" << e.order << "  [" << recipe_to_string(e.recipe) << "]\n";
    out << entries.size() << " groups\n";
  }
  return 0;
}

int cmd_export_dot(const std::string& spec, const std::string& which, const std::string& path) {
  auto [name, group] = resolve_group(spec);
  GroupAnalysis a = analyze_group(name, std::move(group));
  std::string dot;
  if (which == "gamma")
    dot = gamma_to_dot(a.gamma, a.name);
  else if (which == "delta")
    dot = delta_to_dot(a.delta, a.name);
  else
    throw Error("graph must be 'gamma' or 'delta'");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write: " + path);
  out << dot;
  return 0;
}

int cmd_export_table(const std::string& spec, const std::string& path) {
  auto [name, group] = resolve_group(spec);
  auto cc = conjugacy_classes(group);
  auto table = character_table(group, cc);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write: " + path);
  out << table_to_json(table, name).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character codegrees and codegree graphs of small finite groups"};
  app.require_subcommand(1);

  std::string analyze_target;
  auto* analyze = app.add_subcommand("analyze", "order, classes, degrees, codegrees, graph summary");
  analyze->add_option("group", analyze_target, "catalog name or group file")->required();

  std::vector<std::string> verify_suites;
  VerifyOptions options;
  std::string report_path = "report.jsonl";
  auto* verify = app.add_subcommand("verify", "run theorem suites over the group corpus");
  verify->add_option("suites", verify_suites,
                     "suite ids (prime-powers, connectivity, triangle-free, lemmas, diophantine) "
                     "or 'all'");
  verify->add_option("--max-order", options.max_order, "corpus bound for the theorem suites");
  verify->add_option("--cyclic-limit", options.cyclic_limit,
                     "largest cyclic order for the totient count check");
  verify->add_option("--report", report_path, "JSON-lines report path ('' to skip)");
  verify->add_flag("--timing", options.timing, "include wall times in the report");

  std::uint32_t list_max_order = 60;
  bool list_json = false;
  auto* catalog = app.add_subcommand("catalog", "built-in group catalog");
  auto* catalog_list = catalog->add_subcommand("list", "print the catalog manifest");
  catalog_list->add_option("--max-order", list_max_order, "corpus bound");
  catalog_list->add_flag("--json", list_json, "manifest as JSON");

  std::string dot_target, dot_graph = "gamma", dot_out;
  auto* export_dot = app.add_subcommand("export-dot", "write a codegree graph as DOT");
  export_dot->add_option("group", dot_target, "catalog name or group file")->required();
  export_dot->add_option("--graph", dot_graph, "gamma or delta");
  export_dot->add_option("-o,--output", dot_out, "output path")->required();

  std::string table_target, table_out;
  auto* export_table = app.add_subcommand("export-table", "write the character table as JSON");
  export_table->add_option("group", table_target, "catalog name or group file")->required();
  export_table->add_option("-o,--output", table_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_target);
    if (*verify) return cmd_verify(verify_suites, options, report_path);
    if (*catalog_list) return cmd_catalog_list(list_max_order, list_json, std::cout);
    if (*catalog) {
      std::cerr << "catalog requires a subcommand (list)\n";
      return 2;
    }
    if (*export_dot) return cmd_export_dot(dot_target, dot_graph, dot_out);
    if (*export_table) return cmd_export_table(table_target, table_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
