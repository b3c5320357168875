// engel_lab: command-line front end.
//
// Exit codes: 0 success (every verification record passed), 1 a failed
// record or computation error, 2 usage error.

#include "engel/cache.hpp"
#include "engel/engel.hpp"
#include "engel/export.hpp"
#include "engel/reports.hpp"
#include "engel/spec.hpp"
#include "engel/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace engel;

constexpr int exit_ok    = 0;
constexpr int exit_fail  = 1;
constexpr int exit_usage = 2;

struct Options {
  bool        no_cache = false;
  unsigned    workers  = 1;
  std::string spec;

  bool reduced  = false;
  bool full     = false;
  bool directed = false;
  bool dot      = false;
  bool json_out = false;

  std::size_t clique_limit  = default_clique_limit;
  std::size_t spectra_limit = AnalyzeLimits{}.spectra_limit;

  std::vector<std::string> families;
  std::size_t              max_order = 200;
  std::string              out       = "csv";

  std::size_t sweep_max_order = 64;
};

GroupCache make_cache(Options const& o) {
  return GroupCache(o.no_cache ? std::nullopt : GroupCache::default_directory());
}

void print(nlohmann::json const& j) {
  std::cout << j.dump(2) << '\n';
}

int cmd_group(Options const& o) {
  GroupSpec const   spec = parse_group_spec(o.spec);
  FiniteGroup const g    = make_cache(o).obtain(spec);
  print(group_report(spec, g, o.workers));
  return exit_ok;
}

int cmd_graph(Options const& o) {
  GroupSpec const     spec = parse_group_spec(o.spec);
  FiniteGroup const   g    = make_cache(o).obtain(spec);
  EngelRelation const rel(g, o.workers);
  std::string const   name = "engel";
  if (o.directed) {
    DirectedGraph const d = directed_engel_graph(g, rel);
    if (o.dot) {
      std::cout << to_dot(d, name);
    } else {
      print(to_json(d));
    }
    return exit_ok;
  }
  SimpleGraph const graph = o.full ? co_engel_graph(g, rel) : reduced_co_engel_graph(g, rel).graph;
  if (o.dot) {
    std::cout << to_dot(graph, name);
  } else {
    print(to_json(graph));
  }
  return exit_ok;
}

int cmd_analyze(Options const& o) {
  GroupSpec const   spec = parse_group_spec(o.spec);
  FiniteGroup const g    = make_cache(o).obtain(spec);
  AnalyzeLimits     limits;
  limits.clique_limit  = o.clique_limit;
  limits.spectra_limit = o.spectra_limit;
  limits.workers       = o.workers;
  print(analyze_report(spec, g, limits));
  return exit_ok;
}

int cmd_verify(Options const& o) {
  GroupCache const cache = make_cache(o);
  VerifyOptions    vo;
  vo.families  = o.families;
  vo.max_order = o.max_order;
  vo.workers   = o.workers;
  vo.cache     = &cache;
  auto const records = verify_paper(vo);
  if (o.out == "json") {
    print(records_to_json(records));
  } else {
    std::cout << records_to_csv(records);
  }
  return any_failed(records) ? exit_fail : exit_ok;
}

int cmd_sweep(Options const& o) {
  GroupCache const cache = make_cache(o);
  print(sweep_single_arcs(o.sweep_max_order, &cache));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engel graphs of finite groups: construction, analysis and paper checks"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the group cache");
  app.add_option("--workers", o.workers, "Threads for the Engel relation")
      ->check(CLI::Range(1U, 64U));

  auto* group = app.add_subcommand("group", "Group structure report");
  group->add_option("spec", o.spec, "Group spec, e.g. D:24, F:3:7, P:(C:3)x(D:6)")->required();

  auto* graph = app.add_subcommand("graph", "Export an Engel graph");
  graph->add_option("spec", o.spec, "Group spec")->required();
  auto* kind = graph->add_option_group("kind");
  kind->add_flag("--reduced", o.reduced, "Co-Engel graph on G \\ L(G) (default)");
  kind->add_flag("--full", o.full, "Co-Engel graph on all of G");
  kind->add_flag("--directed", o.directed, "Directed Engel graph");
  kind->require_option(0, 1);
  auto* format = graph->add_option_group("format");
  format->add_flag("--dot", o.dot, "Graphviz DOT");
  format->add_flag("--json", o.json_out, "JSON (default)");
  format->require_option(0, 1);

  auto* analyze = app.add_subcommand("analyze", "Full analysis of the reduced co-Engel graph");
  analyze->add_option("spec", o.spec, "Group spec")->required();
  analyze->add_option("--clique-limit", o.clique_limit, "Largest graph for the clique search");
  analyze->add_option("--spectra-limit", o.spectra_limit,
                      "Largest graph for characteristic polynomials");

  auto* verify = app.add_subcommand("verify-paper", "Run the claim verification sweep");
  verify->add_option("--families", o.families, "Subset of families to run")
      ->delimiter(',')
      ->check(CLI::IsMember(verify_families()));
  verify->add_option("--max-order", o.max_order, "Skip groups above this order");
  verify->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep-single-arcs",
                                   "Single arcs outside L(G) for built-in soluble groups");
  sweep->add_option("--max-order", o.sweep_max_order, "Largest group order")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (group->parsed()) {
      return cmd_group(o);
    }
    if (graph->parsed()) {
      return cmd_graph(o);
    }
    if (analyze->parsed()) {
      return cmd_analyze(o);
    }
    if (verify->parsed()) {
      return cmd_verify(o);
    }
    return cmd_sweep(o);
  } catch (SpecError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
}
