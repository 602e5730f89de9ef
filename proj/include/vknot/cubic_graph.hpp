#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multigraph in which every vertex has degree 3. Parallel edges and loops
/// are allowed; a loop adds 2 to its vertex's degree.
class CubicGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Throws GraphError if some vertex does not have degree 3.
  CubicGraph(std::size_t vertex_count, std::vector<Edge> edges);

  /// Reads "n <count>" followed by one "u v" edge per line; '#' starts a comment.
  static CubicGraph parse(std::string_view text);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  bool is_loop(std::size_t e) const { return edges_[e].first == edges_[e].second; }
  /// Edge indices at v in ascending order; a loop appears twice.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t other_end(std::size_t e, std::size_t v) const;

  bool is_connected() const;

  std::string to_text() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Sorted edge indices; pairwise vertex-disjoint, no loops.
using Matching = std::vector<std::size_t>;

/// All isthmuses. Throws GraphError for disconnected graphs.
std::vector<std::size_t> bridges(const CubicGraph& g);

/// Every perfect matching, found by backtracking on the lowest unmatched vertex.
std::vector<Matching> perfect_matchings(const CubicGraph& g);

bool is_perfect_matching(const CubicGraph& g, const Matching& m);

/// A cycle of the 2-regular graph left after removing the matched edges.
struct MatchingCycle {
  std::vector<std::size_t> vertices;  // walk order, starting at the lowest vertex
  std::vector<std::size_t> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod len]
};

/// Cycle decomposition; start at the lowest unvisited vertex, prefer the
/// lowest unused edge. Throws GraphError if m is not perfect.
std::vector<MatchingCycle> matching_cycle_walks(const CubicGraph& g, const Matching& m);
/// Lengths (edge counts) of the cycles; loops are 1-cycles.
std::vector<std::size_t> matching_cycles(const CubicGraph& g, const Matching& m);
bool is_even_matching(const CubicGraph& g, const Matching& m);

/// Proper edge n-colorings (OpenMP over the first edge's color).
std::uint64_t edge_coloring_count(const CubicGraph& g, unsigned n);
/// Single-threaded reference for edge_coloring_count.
std::uint64_t edge_coloring_count_serial(const CubicGraph& g, unsigned n);

/// Optional traversal overrides for translate(); the default walk is the one
/// matching_cycle_walks() produces.
struct TraversalChoice {
  std::vector<std::size_t> rotation;  // per cycle: index of the starting vertex
  std::vector<bool> reversed;         // per cycle: walk backwards
};

/// Flat virtual diagram of g: one component per complementary cycle, and at
/// each vertex the passes F_e V_e for its matched edge e. The t-th matched
/// edge gets flat label 2t+1 and virtual label 2t+2.
DiagramCode translate(const CubicGraph& g, const Matching& m, const TraversalChoice& traversal = {});

struct CorrespondenceReport {
  std::uint64_t graph_colorings = 0;   // proper 3-edge-colorings of g
  std::uint64_t shadow_colorings = 0;  // 3-colorings of the translation
  bool counts_equal = false;
  bool even_matching = false;
  bool translation_two_colorable = false;
  /// counts_equal, and an even matching gives a 2-colorable translation.
  bool holds = false;
};

CorrespondenceReport verify_correspondence(const CubicGraph& g, const Matching& m);

}  // namespace vknot
