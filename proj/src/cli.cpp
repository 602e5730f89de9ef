#include "vknot/cli.hpp"

#include <sstream>

#include "vknot/code_enumeration.hpp"
#include "vknot/cubic_graph.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/invariants.hpp"
#include "vknot/shadow_color.hpp"
#include "vknot/statesum.hpp"

namespace vknot::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string rational_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_text(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string matrix_text(const std::vector<std::vector<Rational>>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j > 0) out += ",";
      out += rational_text(m[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

Json ok_item(const std::string& input, Json result) {
  Json item;
  item["input"] = input;
  item["ok"] = true;
  item["result"] = std::move(result);
  return item;
}

Json error_item(const std::string& input, const std::string& error) {
  Json item;
  item["input"] = input;
  item["ok"] = false;
  item["error"] = error;
  return item;
}

/// Text lines live beside the JSON items so both renderings stay in input order.
struct Builder {
  RunReport report;
  std::vector<std::string> lines;

  explicit Builder(std::string command) { report.command = std::move(command); }

  void ok(const std::string& input, Json result, std::string text) {
    report.items.push_back(ok_item(input, std::move(result)));
    lines.push_back(input + ": " + text);
  }

  void error(const std::string& input, const std::string& what, int status) {
    report.items.push_back(error_item(input, what));
    lines.push_back(input + ": error: " + what);
    report.fail(status);
  }

  RunReport finish() {
    report.lines = std::move(lines);
    return std::move(report);
  }
};

}  // namespace

void RunReport::fail(int status) {
  if (status == kSuccess) return;
  if (exit_status == kSuccess || exit_status == kOtherError || status > exit_status) exit_status = status;
}

std::vector<std::string> read_code_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

RunReport cmd_validate(const std::vector<std::string>& inputs) {
  Builder b("validate");
  for (const auto& input : inputs) {
    try {
      const DiagramCode code = parse(input);
      Json r;
      r["code"] = code.render();
      r["mode"] = code.mode_name();
      r["components"] = code.component_count();
      r["classical"] = code.classical_count();
      r["virtual"] = code.table().virtuals().size();
      b.ok(input, std::move(r), "valid " + code.mode_name() + " code, " +
                                    std::to_string(code.component_count()) + " component(s), " +
                                    std::to_string(code.classical_count()) + " classical crossing(s)");
    } catch (const CodeError& e) {
      b.error(input, std::string("invalid: ") + e.what(), kInputError);
    }
  }
  return b.finish();
}

RunReport cmd_invariants(const std::vector<std::string>& inputs, const InvariantOptions& options) {
  Builder b("invariants");
  for (const auto& input : inputs) {
    std::optional<DiagramCode> parsed;
    try {
      parsed = parse(input);
      if (!parsed->is_full()) throw CodeError("invariants need a full (over/under) code");
    } catch (const CodeError& e) {
      b.error(input, e.what(), kInputError);
      continue;
    }
    const DiagramCode& code = *parsed;
    const auto report = nonclassicality_report(code);
    const LaurentPoly bracket = binary_bracket(code);
    const LaurentPoly inv = inv_normalized(code);
    const int w = writhe(code);
    const auto linking = linking_matrix(code);

    Json r;
    r["J"] = report.j ? Json(*report.j) : Json(nullptr);
    r["writhe"] = w;
    r["bracket"] = bracket.to_json();
    r["inv"] = inv.to_json();
    r["lambda"] = report.lambda.to_json();
    r["linking"] = matrix_json(linking);
    Json flags = Json::array();
    std::vector<std::string> flag_names;
    for (const auto& f : report.flags) {
      flags.push_back({{"flag", f.flag}, {"reason", f.reason}});
      flag_names.push_back(f.flag);
    }
    r["flags"] = std::move(flags);

    std::string text = "J=" + (report.j ? std::to_string(*report.j) : std::string("undefined")) +
                       " writhe=" + std::to_string(w) + " bracket=" + bracket.to_string() +
                       " inv=" + inv.to_string() + " lambda=" + report.lambda.to_string() +
                       " linking=" + matrix_text(linking) +
                       " flags=" + (flag_names.empty() ? std::string("none") : join(flag_names, ","));

    bool mismatch = false;
    if (options.oracle) {
      const LaurentPoly oracle = bracket_oracle(code);
      mismatch = !(oracle == bracket);
      r["oracle"] = {{"bracket", oracle.to_json()}, {"match", !mismatch}};
      text += mismatch ? " oracle=MISMATCH(" + oracle.to_string() + ")" : " oracle=ok";
    }
    if (options.parity_lint) {
      if (code.component_count() == 1) {
        const auto lint = parity_lint(code);
        r["parity_lint"] = lint;
        text += " parity_lint=" + (lint.empty() ? std::string("clean") : join(lint, ","));
      } else {
        r["parity_lint"] = nullptr;
      }
    }
    b.ok(input, std::move(r), std::move(text));
    if (mismatch) {
      b.report.diagnostics.push_back("oracle mismatch on " + input);
      b.report.fail(kOracleMismatch);
    }
  }
  return b.finish();
}

RunReport cmd_oracle(const std::vector<std::string>& inputs, unsigned colors) {
  Builder b("oracle");
  for (const auto& input : inputs) {
    std::optional<DiagramCode> parsed;
    try {
      parsed = parse(input);
      if (!parsed->is_full()) throw CodeError("the state sum needs a full (over/under) code");
    } catch (const CodeError& e) {
      b.error(input, e.what(), kInputError);
      continue;
    }
    const DiagramCode& code = *parsed;
    Json states = Json::array();
    std::string text;
    for (const auto& t : trace_all_states(code, colors)) {
      states.push_back({{"index", t.index},
                        {"bits", state_bits(t.state)},
                        {"loops", t.loops},
                        {"colorings", bigint_to_json(t.colorings)}});
      text += "\n  state " + std::to_string(t.index) + " " + (t.state.empty() ? "-" : state_bits(t.state)) +
              " loops=" + std::to_string(t.loops) + " colorings=" + t.colorings.str();
    }
    const BiLaurent nary = nary_bracket(code, colors);
    Json r;
    r["n"] = colors;
    r["labels"] = Json::array();
    for (const auto& x : code.table().crossings()) r["labels"].push_back(x.label);
    r["states"] = std::move(states);
    r["nary"] = nary.to_json();
    text += "\n  nary=" + nary.to_string();
    if (colors == 2) {
      const LaurentPoly bracket = nary.collapse_b_to_inverse_a();
      r["bracket"] = bracket.to_json();
      text += "\n  bracket=" + bracket.to_string();
    }
    b.ok(input, std::move(r), std::to_string(code.classical_count()) + " crossing(s)" + text);
  }
  return b.finish();
}

RunReport cmd_color(const std::vector<std::string>& inputs, const ColorOptions& options) {
  Builder b("color");
  for (const auto& input : inputs) {
    std::optional<DiagramCode> parsed;
    try {
      parsed = parse(input);
      if (!parsed->is_flat()) throw CodeError("coloring needs a flat code (F and V passes)");
    } catch (const CodeError& e) {
      b.error(input, e.what(), kInputError);
      continue;
    }
    const DiagramCode& code = *parsed;
    const unsigned n = options.colors;
    Json r;
    r["n"] = n;
    const std::uint64_t count = count_shadow_colorings(code, n);
    r["count"] = count;
    std::string text = "n=" + std::to_string(n) + " count=" + std::to_string(count);
    if (options.enumerate) {
      try {
        const auto all = enumerate_shadow_colorings(code, n, options.limit);
        r["colorings"] = all;
        for (const auto& c : all) {
          std::string row;
          for (unsigned x : c) row += std::to_string(x);
          text += "\n  " + row;
        }
      } catch (const ColoringLimitExceeded& e) {
        b.error(input, e.what(), kOtherError);
        continue;
      }
    }
    const auto obstruction = parity_obstruction(code);
    r["two_color_criterion"] = two_color_criterion(code);
    r["parity_obstruction"] = {{"obstructed", obstruction.obstructed},
                               {"components", obstruction.components},
                               {"self_conflict", obstruction.self_conflict},
                               {"self_conflict_components", obstruction.self_conflict_components}};
    if (count == 0) {
      std::string verdict;
      if (obstruction.self_conflict) {
        verdict = "uncolorable for all n";
      } else {
        unsigned bound = 0;
        while (bound < n && count_shadow_colorings(code, bound + 1) == 0) ++bound;
        verdict = bound == n ? "uncolorable for n <= " + std::to_string(n)
                             : "uncolorable for n = " + std::to_string(n);
      }
      r["verdict"] = verdict;
      text += " (" + verdict + ")";
    }
    b.ok(input, std::move(r), std::move(text));
  }
  return b.finish();
}

RunReport cmd_graph(const std::string& source, const std::string& text, const GraphOptions& options) {
  Builder b("graph");
  std::optional<CubicGraph> parsed;
  try {
    parsed = CubicGraph::parse(text);
  } catch (const GraphError& e) {
    b.error(source, e.what(), kInputError);
    return b.finish();
  }
  const CubicGraph& g = *parsed;
  Json r;
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  std::vector<std::string> parts{std::to_string(g.vertex_count()) + " vertices",
                                 std::to_string(g.edge_count()) + " edges"};
  const bool connected = g.is_connected();
  r["connected"] = connected;
  if (connected) {
    const auto isthmuses = bridges(g);
    r["bridges"] = isthmuses;
    parts.push_back("bridges=" + std::to_string(isthmuses.size()));
  }

  const bool need_matchings = options.matchings || options.translate || options.verify;
  std::vector<Matching> matchings;
  if (need_matchings) matchings = perfect_matchings(g);

  if (options.matchings) {
    Json list = Json::array();
    for (const auto& m : matchings) {
      list.push_back({{"edges", m}, {"cycles", matching_cycles(g, m)}, {"even", is_even_matching(g, m)}});
    }
    r["matchings"] = {{"count", matchings.size()}, {"list", std::move(list)}};
    parts.push_back("matchings=" + std::to_string(matchings.size()));
  }
  if (options.color) {
    const auto count = edge_coloring_count(g, *options.color);
    r["color"] = {{"n", *options.color}, {"count", count}};
    parts.push_back(std::to_string(*options.color) + "-edge-colorings=" + std::to_string(count));
  }
  if (options.translate) {
    if (*options.translate >= matchings.size()) {
      b.error(source, "matching index " + std::to_string(*options.translate) + " out of range (" +
                          std::to_string(matchings.size()) + " perfect matchings)",
              kInputError);
      return b.finish();
    }
    const auto& m = matchings[*options.translate];
    const DiagramCode d = translate(g, m);
    r["translate"] = {{"matching_index", *options.translate}, {"matching", m}, {"code", d.render()}};
    parts.push_back("translation=" + d.render());
  }
  bool failed = false;
  if (options.verify) {
    Json list = Json::array();
    for (std::size_t i = 0; i < matchings.size(); ++i) {
      const auto rep = verify_correspondence(g, matchings[i]);
      list.push_back({{"matching_index", i},
                      {"graph_colorings", rep.graph_colorings},
                      {"shadow_colorings", rep.shadow_colorings},
                      {"counts_equal", rep.counts_equal},
                      {"even_matching", rep.even_matching},
                      {"translation_two_colorable", rep.translation_two_colorable},
                      {"holds", rep.holds}});
      parts.push_back("matching " + std::to_string(i) + ": " + std::to_string(rep.graph_colorings) +
                      (rep.counts_equal ? " = " : " != ") + std::to_string(rep.shadow_colorings) +
                      (rep.even_matching ? " even" : " odd") +
                      (rep.translation_two_colorable ? " 2-colorable" : " not-2-colorable"));
      failed = failed || !rep.holds;
    }
    r["verify"] = std::move(list);
  }
  b.ok(source, std::move(r), join(parts, "; "));
  if (failed) {
    b.report.diagnostics.push_back("3-coloring correspondence failed on " + source);
    b.report.fail(kVerificationFailure);
  }
  return b.finish();
}

RunReport cmd_search(const SearchOptions& options) {
  Builder b("search");
  std::vector<SearchHit> hits;
  try {
    hits = search_codes(options.max_crossings, options.components);
  } catch (const CodeError& e) {
    b.error("search", e.what(), kInputError);
    return b.finish();
  }
  std::size_t shown = 0;
  for (const auto& h : hits) {
    if (options.non_split && h.split) continue;
    if (options.limit && shown >= *options.limit) break;
    ++shown;
    Json r;
    r["crossings"] = h.code.classical_count();
    r["J"] = h.j ? Json(*h.j) : Json(nullptr);
    r["lambda"] = h.lambda.to_json();
    r["split"] = h.split;
    b.ok(h.code.render(), std::move(r),
         (h.j ? "J=" + std::to_string(*h.j) + " " : std::string()) + "lambda=" + h.lambda.to_string() +
             (h.split ? " split" : ""));
  }
  b.report.diagnostics.push_back(std::to_string(hits.size()) + " hit(s) with at most " +
                                 std::to_string(options.max_crossings) + " crossing(s) on " +
                                 std::to_string(options.components) + " component(s)");
  return b.finish();
}

std::string render(const RunReport& report, Format format) {
  if (format == Format::Json) {
    Json j;
    j["command"] = report.command;
    j["items"] = report.items;
    j["diagnostics"] = report.diagnostics;
    j["exit"] = report.exit_status;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& line : report.lines) out += line + "\n";
  for (const auto& line : report.diagnostics) out += line + "\n";
  return out;
}

}  // namespace vknot::cli
