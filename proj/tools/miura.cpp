// Command-line front end. Every subcommand reads an instance document (or a
// grid size), calls one library operation and prints JSON, ASCII or SVG.
// Exit codes: 0 success, 1 verified negative answer (certificate on the
// output), 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "miura/aux_digraph.hpp"
#include "miura/completion.hpp"
#include "miura/constructions.hpp"
#include "miura/controlling.hpp"
#include "miura/io.hpp"
#include "miura/min_forcing.hpp"
#include "miura/oracle.hpp"
#include "miura/render.hpp"
#include "miura/sampling.hpp"

namespace {

using namespace miura;

struct Options {
  std::optional<int> rows;
  std::optional<int> cols;
  std::string input;
  std::string output;
  std::string forcing_set;
  std::string format = "ascii";
  std::uint64_t seed = 0;
  double alpha = 80.0;
  bool allow_large = false;
  bool standard = false;
  bool diagonal = false;
  bool random = false;
};

class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw input_error("cannot write " + opt.output);
  out << text;
}

void write_json(const Options& opt, const json& j) { write_all(opt, j.dump(2) + "\n"); }

InstanceDocument load_document(const Options& opt) { return parse_instance(read_all(opt.input)); }

GridSize size_from_flags(const Options& opt) {
  if (!opt.rows || !opt.cols) throw input_error("--rows and --cols are required");
  return GridSize(*opt.rows, *opt.cols);
}

/// --rows/--cols when both are given, otherwise the size of the input document.
GridSize size_from_flags_or_document(const Options& opt) {
  if (opt.rows && opt.cols) return size_from_flags(opt);
  return load_document(opt).size();
}

ForcingSet load_forcing_set(const Options& opt, GridSize size) {
  if (opt.forcing_set.empty()) throw input_error("--forcing-set is required");
  json j;
  try {
    j = json::parse(read_all(opt.forcing_set));
  } catch (const json::parse_error& e) {
    throw document_error(std::string("forcing_set: malformed JSON: ") + e.what());
  }
  return forcing_set_from_json(j, size);
}

json forcing_report(GridSize size, const ForcingSet& f) {
  json out;
  out["rows"] = size.rows;
  out["cols"] = size.cols;
  out["size"] = f.size();
  out["forcing_set"] = forcing_set_to_json(f);
  return out;
}

json node_to_json(const AuxDigraph& h, int node) {
  const auto id = h.node_id(node);
  if (!id) return "outer";
  return json{{"r", id->r}, {"c", id->c}};
}

int cmd_gen(const Options& opt) {
  const GridSize size = size_from_flags(opt);
  const int chosen = int{opt.standard} + int{opt.diagonal} + int{opt.random};
  if (chosen != 1) throw input_error("choose exactly one of --standard, --diagonal, --random");
  GridColoring k;
  if (opt.standard) k = standard_coloring(size);
  if (opt.diagonal) k = diagonal_coloring(size);
  if (opt.random) k = random_coloring(size, opt.seed);
  write_all(opt, serialize_instance(make_document(k)));
  return 0;
}

int cmd_min_forcing(const Options& opt) {
  const GridColoring k = document_coloring(load_document(opt));
  write_json(opt, forcing_report(k.size(), min_forcing_set(k)));
  return 0;
}

int cmd_greedy(const Options& opt) {
  const GridColoring k = document_coloring(load_document(opt));
  write_json(opt, forcing_report(k.size(), greedy_forcing(k)));
  return 0;
}

int cmd_domino(const Options& opt) {
  const GridSize size = size_from_flags_or_document(opt);
  write_json(opt, forcing_report(size, domino_forcing_standard(size)));
  return 0;
}

int cmd_verify(const Options& opt) {
  const GridColoring k = document_coloring(load_document(opt));
  const ForcingSet f = load_forcing_set(opt, k.size());
  const ForcingReport report = is_forcing(k, f);
  json out;
  out["forcing"] = report.forcing;
  if (!report.forcing) {
    const AuxDigraph h = build_aux_digraph(k);
    out["witness"] = forcing_set_to_json(witness_creases(k.size(), *report.witness));
    out["witness_nodes"] = json::array();
    for (int v : report.witness->nodes) out["witness_nodes"].push_back(node_to_json(h, v));
  }
  write_json(opt, out);
  return report.forcing ? 0 : 1;
}

int cmd_complete(const Options& opt) {
  const InstanceDocument doc = load_document(opt);
  const CompletionResult result = complete_partial(effective_assignment(doc));
  if (!result.feasible()) {
    const AuxDigraph h(doc.size());
    json out;
    out["feasible"] = false;
    out["unmet_nodes"] = json::array();
    for (int v : result.unmet_nodes) out["unmet_nodes"].push_back(node_to_json(h, v));
    write_json(opt, out);
    return 1;
  }
  write_all(opt, serialize_instance(make_document(mv_to_coloring(*result.assignment))));
  return 0;
}

int cmd_controlling(const Options& opt) {
  const GridSize size = size_from_flags_or_document(opt);
  const ForcingSet f = load_forcing_set(opt, size);
  json out;
  const auto component = disconnected_component(size, f);
  out["controlling"] = !component.has_value();
  if (component) {
    out["component"] = json::array();
    for (const Cell& s : *component) out["component"].push_back({s.r, s.c});
  }
  write_json(opt, out);
  return component ? 1 : 0;
}

int cmd_enumerate(const Options& opt) {
  const GridSize size = size_from_flags(opt);
  json out;
  out["rows"] = size.rows;
  out["cols"] = size.cols;
  out["colorings"] = json::array();
  for_each_coloring(size, [&](const GridColoring& k) { out["colorings"].push_back(k.rows()); },
                    OracleOptions{opt.allow_large});
  out["count"] = out["colorings"].size();
  write_json(opt, out);
  return 0;
}

int cmd_render(const Options& opt) {
  const InstanceDocument doc = load_document(opt);
  if (opt.format == "json") {
    write_all(opt, serialize_instance(doc));
  } else if (opt.format == "svg") {
    RenderConfig cfg;
    cfg.alpha_degrees = opt.alpha;
    write_all(opt, render_svg(effective_assignment(doc), cfg));
  } else {
    write_all(opt, render_ascii(effective_assignment(doc)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forcing sets of Miura-ori crease patterns"};
  app.require_subcommand(1);
  Options opt;
  int status = 0;

  const auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--rows", opt.rows, "Number of cell rows");
    sub->add_option("--cols", opt.cols, "Number of cell columns");
    sub->add_option("--input", opt.input, "Instance document (default: stdin)");
    sub->add_option("--output", opt.output, "Output file (default: stdout)");
    sub->callback([&, run] { status = run(opt); });
    return sub;
  };

  CLI::App* gen = add("gen", "Generate an instance from a coloring", cmd_gen);
  gen->add_flag("--standard", opt.standard, "Standard Miura-ori assignment");
  gen->add_flag("--diagonal", opt.diagonal, "Diagonal-stripe coloring K(r,c) = r+c mod 3");
  gen->add_flag("--random", opt.random, "Random valid coloring");
  gen->add_option("--seed", opt.seed, "Seed for --random");

  add("min-forcing", "Minimum forcing set", cmd_min_forcing);
  add("greedy", "Greedy forcing set of size ceil(mn/2)", cmd_greedy);
  add("domino", "Domino forcing set of the standard assignment", cmd_domino);
  add("verify", "Check whether a crease set is forcing", cmd_verify)
      ->add_option("--forcing-set", opt.forcing_set, "JSON list of creases")
      ->required();
  add("complete", "Complete a partial assignment", cmd_complete);
  add("controlling", "Check whether a crease set is controlling", cmd_controlling)
      ->add_option("--forcing-set", opt.forcing_set, "JSON list of creases")
      ->required();
  add("enumerate", "List every valid coloring of a small grid", cmd_enumerate)
      ->add_flag("--allow-large", opt.allow_large, "Lift the size guard");
  CLI::App* render = add("render", "Draw an instance", cmd_render);
  render->add_option("--format", opt.format, "ascii, svg or json")->check(CLI::IsMember({"ascii", "svg", "json"}));
  render->add_option("--alpha", opt.alpha, "Acute cell angle in degrees for svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    // document_error, precondition_error, size_guard_error, input_error and
    // range errors from bad indices all land here
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
