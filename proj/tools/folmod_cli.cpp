#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"
#include "folmod/library.hpp"
#include "folmod/modelcheck.hpp"
#include "folmod/reductions.hpp"
#include "folmod/solvers.hpp"

namespace {

using namespace folmod;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A formula argument is a file when one exists at that path, otherwise it is
// parsed as an inline formula string.
Formula load_formula(const std::string& spec, const std::vector<std::string>& free_names = {}) {
  std::ifstream probe(spec);
  if (probe.good()) return parse(slurp(spec), free_names);
  try {
    return parse(spec, free_names);
  } catch (const ParseError& e) {
    throw std::runtime_error("'" + spec + "' is neither a readable file nor a formula: " +
                             e.what());
  }
}

Variant parse_variant(const std::string& name) {
  if (name == "vertex" || name == "vertex-removal") return Variant::VertexRemoval;
  if (name == "edge-removal") return Variant::EdgeRemoval;
  if (name == "edge-completion") return Variant::EdgeCompletion;
  if (name == "edge-editing") return Variant::EdgeEditing;
  throw std::runtime_error(
      "unknown variant '" + name +
      "' (expected vertex, edge-removal, edge-completion or edge-editing)");
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

void print_certificate(const Solution& sol) {
  std::ostringstream os;
  if (sol.variant == Variant::VertexRemoval) {
    for (std::size_t i = 0; i < sol.vertices.size(); ++i)
      os << (i ? " " : "") << sol.vertices[i];
  } else {
    for (std::size_t i = 0; i < sol.pairs.size(); ++i)
      os << (i ? " " : "") << sol.pairs[i].first << "-" << sol.pairs[i].second;
  }
  std::cout << "certificate=" << os.str() << "\n";
  std::cout << "certificate_size=" << sol.size() << "\n";
  std::cout << "verified=1\n";
}

void print_instance_echo(const ModificationInstance& inst) {
  std::cout << "variant=" << to_string(inst.variant) << "\n";
  std::cout << "class=" << to_string(classify(inst.formula)) << "\n";
  std::cout << "n=" << inst.graph.num_vertices() << "\n";
  std::cout << "m=" << inst.graph.num_edges() << "\n";
  std::cout << "k=" << inst.k << "\n";
}

int cmd_classify(const std::string& formula_file) {
  Formula f = load_formula(formula_file);
  std::cout << to_string(classify(f)) << ", " << f.variable_count() << " variables\n";
  return kExitYes;
}

int cmd_check(const std::string& graph_file, const std::string& formula_file,
              const std::string& free_names, const std::string& assign) {
  Graph g = read_graph(graph_file);
  std::vector<std::string> names;
  if (!free_names.empty()) {
    std::stringstream ss(free_names);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
  }
  Formula f = load_formula(formula_file, names);
  Assignment a = parse_id_list(assign);
  bool result = models(g, f, a);
  std::cout << (result ? "true" : "false") << "\n";
  return result ? kExitYes : kExitNo;
}

int cmd_solve(const std::string& variant_name, const std::string& graph_file,
              const std::string& formula_file, int k, bool allow_brute) {
  ModificationInstance inst{parse_variant(variant_name), read_graph(graph_file),
                            load_formula(formula_file), k};
  DispatchResult res = dispatch(inst, DispatchOptions{allow_brute});
  print_instance_echo(inst);
  std::cout << "method=" << (res.method.empty() ? "none" : res.method) << "\n";
  switch (res.outcome) {
    case Outcome::Yes:
      std::cout << "outcome=YES\n";
      print_certificate(*res.solution);
      std::cout << format_stats(res.stats);
      return kExitYes;
    case Outcome::No:
      std::cout << "outcome=NO\n";
      std::cout << format_stats(res.stats);
      return kExitNo;
    case Outcome::Unsupported:
      std::cout << "outcome=UNSUPPORTED\n";
      std::cout << "reason=" << res.reason << "\n";
      return kExitUnsupported;
  }
  return kExitError;
}

int cmd_reduce_edge_to_vertex(const std::string& graph_file, const std::string& formula_file,
                              int k, const std::string& out_base) {
  Graph g = read_graph(graph_file);
  Formula f = load_formula(formula_file);
  EdgeToVertexReduction red = edge_to_vertex(g, f, k);
  write_graph(red.instance.graph, out_base + ".el");
  std::ofstream ff(out_base + ".fol");
  ff << pretty_print(red.instance.formula) << "\n";
  write_gadget_roles(red.gadget, out_base + ".witness");
  std::cout << "graph_file=" << out_base << ".el\n";
  std::cout << "formula_file=" << out_base << ".fol\n";
  std::cout << "witness_file=" << out_base << ".witness\n";
  std::cout << "k=" << k << "\n";
  std::cout << "n=" << red.instance.graph.num_vertices() << "\n";
  std::cout << "class=" << to_string(classify(red.instance.formula)) << "\n";
  return kExitYes;
}

int cmd_reduce_dual(bool to_completion, const std::string& graph_file,
                    const std::string& formula_file, int k, const std::string& out_base) {
  ModificationInstance inst{to_completion ? Variant::EdgeRemoval : Variant::EdgeCompletion,
                            read_graph(graph_file), load_formula(formula_file), k};
  ModificationInstance out = to_completion ? removal_to_completion(inst)
                                           : completion_to_removal(inst);
  write_graph(out.graph, out_base + ".el");
  std::ofstream ff(out_base + ".fol");
  ff << pretty_print(out.formula) << "\n";
  std::cout << "graph_file=" << out_base << ".el\n";
  std::cout << "formula_file=" << out_base << ".fol\n";
  std::cout << "variant=" << to_string(out.variant) << "\n";
  std::cout << "k=" << k << "\n";
  return kExitYes;
}

int cmd_kernelize(const std::string& graph_file, const std::string& formula_file, int k,
                  const std::string& out_file) {
  Graph g = read_graph(graph_file);
  Formula f = load_formula(formula_file);
  HittingFamily fam = extract_hitting_family(g, f);
  KernelizeResult kernel = kernelize_hitting_family(fam, k);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) throw std::runtime_error("cannot write " + out_file);
    os = &file;
  }
  std::cout << "sets_before=" << fam.sets.size() << "\n";
  std::cout << "sets_after=" << (kernel.infeasible ? 0 : kernel.family.sets.size()) << "\n";
  std::cout << "infeasible=" << (kernel.infeasible ? 1 : 0) << "\n";
  if (!kernel.infeasible) {
    for (const auto& set : kernel.family.sets) {
      for (std::size_t i = 0; i < set.size(); ++i) (*os) << (i ? " " : "") << set[i];
      (*os) << "\n";
    }
  }
  return kernel.infeasible ? kExitNo : kExitYes;
}

int cmd_gen_cross_clique(const std::vector<std::string>& graph_files, int k,
                         const std::string& out_base) {
  std::vector<std::pair<Graph, int>> inputs;
  for (const auto& path : graph_files) inputs.emplace_back(read_graph(path), k);
  CrossComposition comp = cross_compose_clique(inputs);
  write_graph(comp.instance.graph, out_base + ".el");
  std::ofstream ff(out_base + ".fol");
  ff << pretty_print(comp.instance.formula) << "\n";
  std::cout << "graph_file=" << out_base << ".el\n";
  std::cout << "formula_file=" << out_base << ".fol\n";
  std::cout << "k=" << comp.instance.k << "\n";
  std::cout << "copies=" << comp.copies << "\n";
  std::cout << "n=" << comp.instance.graph.num_vertices() << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph modification solvers for first-order definable target properties"};
  app.require_subcommand(1);

  std::string graph_file, formula_file, variant_name, out_base = "reduced", out_file;
  std::string free_names, assign;
  int k = 0;
  bool allow_brute = false;
  std::vector<std::string> graph_files;

  auto* classify_cmd = app.add_subcommand("classify", "Print the prefix class of a formula");
  classify_cmd->add_option("formula", formula_file, "formula file")->required();

  auto* check_cmd = app.add_subcommand("check", "Evaluate a formula on a graph");
  check_cmd->add_option("graph", graph_file)->required();
  check_cmd->add_option("formula", formula_file)->required();
  check_cmd->add_option("--free", free_names, "comma-separated free variable names");
  check_cmd->add_option("--assign", assign, "comma-separated vertices for the free variables");

  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph modification instance");
  solve_cmd->add_option("variant", variant_name,
                        "vertex | edge-removal | edge-completion | edge-editing")
      ->required();
  solve_cmd->add_option("graph", graph_file)->required();
  solve_cmd->add_option("formula", formula_file)->required();
  solve_cmd->add_option("k", k, "budget")->required();
  solve_cmd->add_flag("--brute-force", allow_brute,
                      "fall back to exhaustive search on unsupported prefixes (desk scale)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Transform an instance");
  reduce_cmd->require_subcommand(1);
  auto* e2v = reduce_cmd->add_subcommand("edge-to-vertex",
                                         "Edge removal to vertex removal on the gadget");
  e2v->add_option("graph", graph_file)->required();
  e2v->add_option("formula", formula_file)->required();
  e2v->add_option("k", k)->required();
  e2v->add_option("--out", out_base, "output path prefix");
  auto* r2c = reduce_cmd->add_subcommand("removal-to-completion",
                                         "Edge removal to edge completion on the complement");
  r2c->add_option("graph", graph_file)->required();
  r2c->add_option("formula", formula_file)->required();
  r2c->add_option("k", k)->required();
  r2c->add_option("--out", out_base, "output path prefix");
  auto* c2r = reduce_cmd->add_subcommand("completion-to-removal",
                                         "Edge completion to edge removal on the complement");
  c2r->add_option("graph", graph_file)->required();
  c2r->add_option("formula", formula_file)->required();
  c2r->add_option("k", k)->required();
  c2r->add_option("--out", out_base, "output path prefix");

  auto* kern_cmd = app.add_subcommand(
      "kernelize", "Extract the violating-tuple family and shrink it with the sunflower kernel");
  kern_cmd->add_option("graph", graph_file)->required();
  kern_cmd->add_option("formula", formula_file)->required();
  kern_cmd->add_option("k", k)->required();
  kern_cmd->add_option("--out", out_file, "write the kernel family to a file");

  auto* gen_cmd = app.add_subcommand("gen", "Generate test instances");
  gen_cmd->require_subcommand(1);
  auto* cross = gen_cmd->add_subcommand("cross-clique",
                                        "OR-compose same-size clique instances");
  cross->add_option("graphs", graph_files, "input graph files")->required()->expected(-1);
  cross->add_option("--k", k, "clique size sought in each input")->required();
  cross->add_option("--out", out_base, "output path prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return cmd_classify(formula_file);
    if (*check_cmd) return cmd_check(graph_file, formula_file, free_names, assign);
    if (*solve_cmd) return cmd_solve(variant_name, graph_file, formula_file, k, allow_brute);
    if (*reduce_cmd) {
      if (*e2v) return cmd_reduce_edge_to_vertex(graph_file, formula_file, k, out_base);
      if (*r2c) return cmd_reduce_dual(true, graph_file, formula_file, k, out_base);
      if (*c2r) return cmd_reduce_dual(false, graph_file, formula_file, k, out_base);
    }
    if (*kern_cmd) return cmd_kernelize(graph_file, formula_file, k, out_file);
    if (*gen_cmd && *cross) return cmd_gen_cross_clique(graph_files, k, out_base);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
