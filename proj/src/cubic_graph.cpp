#include "vknot/cubic_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "vknot/shadow_color.hpp"

namespace vknot {

namespace {

void require_perfect(const CubicGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw GraphError("not a perfect matching");
}

/// Edges ordered by a breadth-first sweep so that neighbors are colored close together.
std::vector<std::size_t> coloring_order(const CubicGraph& g) {
  std::vector<std::size_t> order;
  std::vector<bool> edge_seen(g.edge_count(), false), vertex_seen(g.vertex_count(), false);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (vertex_seen[root]) continue;
    std::vector<std::size_t> queue{root};
    vertex_seen[root] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t v = queue[i];
      for (std::size_t e : g.incident(v)) {
        if (edge_seen[e]) continue;
        edge_seen[e] = true;
        order.push_back(e);
        const std::size_t u = g.other_end(e, v);
        if (!vertex_seen[u]) {
          vertex_seen[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  return order;
}

class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const CubicGraph& g, unsigned n)
      : g_(g), n_(n), order_(coloring_order(g)), color_(g.edge_count(), -1) {}

  const std::vector<std::size_t>& order() const { return order_; }

  bool assign(std::size_t e, int c) {
    color_[e] = c;
    return ok(e);
  }

  std::uint64_t count(std::size_t depth) {
    if (depth == order_.size()) return 1;
    const std::size_t e = order_[depth];
    std::uint64_t total = 0;
    for (unsigned c = 0; c < n_; ++c) {
      if (assign(e, static_cast<int>(c))) total += count(depth + 1);
    }
    color_[e] = -1;
    return total;
  }

 private:
  bool ok(std::size_t e) const {
    const auto [a, b] = g_.edge(e);
    for (std::size_t v : {a, b}) {
      for (std::size_t f : g_.incident(v)) {
        if (f != e && color_[f] == color_[e]) return false;
      }
    }
    return true;
  }

  const CubicGraph& g_;
  unsigned n_;
  std::vector<std::size_t> order_;
  std::vector<int> color_;
};

bool has_loop(const CubicGraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) return true;
  }
  return false;
}

}  // namespace

CubicGraph::CubicGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (incident_[v].size() != 3) {
      throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(incident_[v].size()) +
                       ", expected 3");
    }
  }
}

CubicGraph CubicGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    auto bad = [&](const std::string& what) {
      return GraphError("graph line " + std::to_string(line_no) + ": " + what);
    };
    std::string extra;
    if (!n) {
      long long count = -1;
      if (first != "n" || !(fields >> count) || count < 0) throw bad("expected 'n <vertexcount>'");
      if (fields >> extra) throw bad("unexpected trailing text");
      n = static_cast<std::size_t>(count);
    } else {
      long long u = -1, v = -1;
      std::istringstream all(line);
      if (!(all >> u >> v) || u < 0 || v < 0) throw bad("expected 'u v'");
      if (all >> extra) throw bad("unexpected trailing text");
      edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
  }
  if (!n) throw GraphError("graph file is missing the 'n <vertexcount>' line");
  return CubicGraph(*n, std::move(edges));
}

std::size_t CubicGraph::other_end(std::size_t e, std::size_t v) const {
  const auto [a, b] = edges_.at(e);
  return a == v ? b : a;
}

bool CubicGraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : incident_[v]) {
      const std::size_t u = other_end(e, v);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertex_count_;
}

std::string CubicGraph::to_text() const {
  std::ostringstream out;
  out << "n " << vertex_count_ << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<std::size_t> bridges(const CubicGraph& g) {
  if (!g.is_connected()) throw GraphError("bridges expects a connected graph");
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> out;
  int timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
    disc[v] = low[v] = timer++;
    for (std::size_t e : g.incident(v)) {
      if (e == parent_edge || g.is_loop(e)) continue;
      const std::size_t u = g.other_end(e, v);
      if (disc[u] < 0) {
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  if (n > 0) dfs(0, static_cast<std::size_t>(-1));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_matching(const CubicGraph& g, const Matching& m) {
  std::vector<int> hits(g.vertex_count(), 0);
  for (std::size_t e : m) {
    if (e >= g.edge_count() || g.is_loop(e)) return false;
    ++hits[g.edge(e).first];
    ++hits[g.edge(e).second];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<Matching> perfect_matchings(const CubicGraph& g) {
  std::vector<Matching> out;
  std::vector<bool> matched(g.vertex_count(), false);
  Matching current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::size_t v = from;
    while (v < g.vertex_count() && matched[v]) ++v;
    if (v == g.vertex_count()) {
      Matching m = current;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t e : g.incident(v)) {
      if (g.is_loop(e)) continue;
      const std::size_t u = g.other_end(e, v);
      if (matched[u]) continue;
      matched[v] = matched[u] = true;
      current.push_back(e);
      extend(v + 1);
      current.pop_back();
      matched[v] = matched[u] = false;
    }
  };
  extend(0);
  return out;
}

std::vector<MatchingCycle> matching_cycle_walks(const CubicGraph& g, const Matching& m) {
  require_perfect(g, m);
  std::vector<bool> used(g.edge_count(), false);
  for (std::size_t e : m) used[e] = true;
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<MatchingCycle> cycles;
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (visited[start]) continue;
    MatchingCycle cycle;
    std::size_t v = start;
    for (;;) {
      visited[v] = true;
      cycle.vertices.push_back(v);
      std::size_t next_edge = g.edge_count();
      for (std::size_t e : g.incident(v)) {
        if (!used[e]) {
          next_edge = e;
          break;
        }
      }
      if (next_edge == g.edge_count()) throw GraphError("complement of the matching is not 2-regular");
      used[next_edge] = true;
      cycle.edges.push_back(next_edge);
      v = g.other_end(next_edge, v);
      if (v == start) break;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<std::size_t> matching_cycles(const CubicGraph& g, const Matching& m) {
  std::vector<std::size_t> lengths;
  for (const auto& c : matching_cycle_walks(g, m)) lengths.push_back(c.edges.size());
  return lengths;
}

bool is_even_matching(const CubicGraph& g, const Matching& m) {
  const auto lengths = matching_cycles(g, m);
  return std::all_of(lengths.begin(), lengths.end(), [](std::size_t len) { return len % 2 == 0; });
}

std::uint64_t edge_coloring_count_serial(const CubicGraph& g, unsigned n) {
  if (has_loop(g)) return 0;
  EdgeColoringSearch search(g, n);
  return search.count(0);
}

std::uint64_t edge_coloring_count(const CubicGraph& g, unsigned n) {
  if (has_loop(g)) return 0;
  if (g.edge_count() == 0) return 1;
  const auto first = EdgeColoringSearch(g, n).order().front();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n); ++c) {
    EdgeColoringSearch search(g, n);
    if (search.assign(first, static_cast<int>(c))) total += search.count(1);
  }
  return total;
}

DiagramCode translate(const CubicGraph& g, const Matching& m, const TraversalChoice& traversal) {
  auto cycles = matching_cycle_walks(g, m);
  Matching sorted = m;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::size_t, std::size_t> rank_of_vertex;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    rank_of_vertex[g.edge(sorted[t]).first] = t;
    rank_of_vertex[g.edge(sorted[t]).second] = t;
  }

  std::vector<Component> comps;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    auto walk = cycles[c].vertices;
    if (c < traversal.rotation.size() && !walk.empty()) {
      std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(traversal.rotation[c] % walk.size()),
                  walk.end());
    }
    if (c < traversal.reversed.size() && traversal.reversed[c]) std::reverse(walk.begin() + 1, walk.end());
    Component comp;
    for (std::size_t v : walk) {
      const std::size_t t = rank_of_vertex.at(v);
      comp.push_back({PassKind::Flat, std::to_string(2 * t + 1), 0});
      comp.push_back({PassKind::Virtual, std::to_string(2 * t + 2), 0});
    }
    comps.push_back(std::move(comp));
  }
  return DiagramCode(std::move(comps));
}

CorrespondenceReport verify_correspondence(const CubicGraph& g, const Matching& m) {
  CorrespondenceReport r;
  const DiagramCode d = translate(g, m);
  r.graph_colorings = edge_coloring_count(g, 3);
  r.shadow_colorings = count_shadow_colorings(d, 3);
  r.counts_equal = r.graph_colorings == r.shadow_colorings;
  r.even_matching = is_even_matching(g, m);
  r.translation_two_colorable = two_color_criterion(d);
  r.holds = r.counts_equal && (!r.even_matching || r.translation_two_colorable);
  return r;
}

}  // namespace vknot
