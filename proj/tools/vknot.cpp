// vknot: command-line front end for diagram codes and cubic graphs.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vknot/cli.hpp"

namespace {

using vknot::cli::Format;
using vknot::cli::RunReport;

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  out = slurp(in);
  return true;
}

/// Codes from positional arguments, then from -f files; stdin when neither is given.
struct CodeSource {
  std::vector<std::string> codes;
  std::vector<std::string> files;

  void attach(CLI::App* sub) {
    sub->add_option("codes", codes, "Gauss codes (read from stdin when none are given)");
    sub->add_option("-f,--file", files, "File with one code per line")->check(CLI::ExistingFile);
  }

  std::vector<std::string> collect() const {
    std::vector<std::string> out = codes;
    for (const auto& path : files) {
      std::string text;
      if (read_file(path, text)) {
        const auto lines = vknot::cli::read_code_lines(text);
        out.insert(out.end(), lines.begin(), lines.end());
      }
    }
    if (codes.empty() && files.empty()) {
      const auto lines = vknot::cli::read_code_lines(slurp(std::cin));
      out.insert(out.end(), lines.begin(), lines.end());
    }
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and colorings of virtual knot and link diagrams"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  RunReport report;

  CodeSource validate_src;
  auto* validate = app.add_subcommand("validate", "Parse and validate codes");
  validate_src.attach(validate);
  validate->callback([&] { report = vknot::cli::cmd_validate(validate_src.collect()); });

  CodeSource inv_src;
  vknot::cli::InvariantOptions inv_opts;
  auto* invariants = app.add_subcommand("invariants", "J, writhe, bracket, Inv, Lambda, linking numbers");
  inv_src.attach(invariants);
  invariants->add_flag("--oracle", inv_opts.oracle, "Cross-check the bracket against an explicit state sum");
  invariants->add_flag("--parity-lint", inv_opts.parity_lint, "Compare classical and virtual parities");
  invariants->callback([&] { report = vknot::cli::cmd_invariants(inv_src.collect(), inv_opts); });

  CodeSource oracle_src;
  unsigned oracle_colors = 2;
  auto* oracle = app.add_subcommand("oracle", "Per-state trace of the explicit state sum");
  oracle_src.attach(oracle);
  oracle->add_option("-n,--colors", oracle_colors, "Number of loop colors")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  oracle->callback([&] { report = vknot::cli::cmd_oracle(oracle_src.collect(), oracle_colors); });

  CodeSource color_src;
  vknot::cli::ColorOptions color_opts;
  auto* color = app.add_subcommand("color", "Count or list colorings of flat shadows");
  color_src.attach(color);
  color->add_option("-n,--colors", color_opts.colors, "Number of colors")
      ->check(CLI::Range(0u, 64u))
      ->capture_default_str();
  color->add_flag("--enumerate", color_opts.enumerate, "List every coloring");
  color->add_option("--limit", color_opts.limit, "Maximum colorings to list")->capture_default_str();
  color->callback([&] { report = vknot::cli::cmd_color(color_src.collect(), color_opts); });

  std::string graph_path;
  vknot::cli::GraphOptions graph_opts;
  auto* graph = app.add_subcommand("graph", "Cubic graph matchings, edge colorings and translations");
  graph->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  graph->add_flag("--matchings", graph_opts.matchings, "List perfect matchings");
  graph->add_option("--color", graph_opts.color, "Count proper n-edge-colorings");
  graph->add_option("--translate", graph_opts.translate, "Translate the matching with this index to a flat code");
  graph->add_flag("--verify", graph_opts.verify, "Check the 3-coloring correspondence for every matching");
  graph->callback([&] {
    std::string text;
    if (graph_path == "-") {
      text = slurp(std::cin);
    } else if (!read_file(graph_path, text)) {
      report.command = "graph";
      report.diagnostics.push_back("cannot read " + graph_path);
      report.exit_status = vknot::cli::kInputError;
      return;
    }
    report = vknot::cli::cmd_graph(graph_path, text, graph_opts);
  });

  vknot::cli::SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "Exhaustive search for nontrivial J or Lambda");
  search->add_option("--max-crossings", search_opts.max_crossings, "Largest crossing count")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  search->add_option("--components", search_opts.components, "Number of components")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  search->add_option("--limit", search_opts.limit, "Print at most this many hits");
  search->add_flag("--non-split", search_opts.non_split, "Skip split codes");
  search->callback([&] { report = vknot::cli::cmd_search(search_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : vknot::cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return vknot::cli::kOtherError;
  }

  std::cout << vknot::cli::render(report, format_name == "json" ? Format::Json : Format::Text);
  return report.exit_status;
}
