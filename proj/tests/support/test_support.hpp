#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vknot/cubic_graph.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/polynomial.hpp"

namespace vknot::testing {

using Rng = std::mt19937_64;

/// Path under tests/data.
std::string data_path(const std::string& name);
std::string read_text(const std::string& path);

/// Non-comment lines of tests/data/corpus.txt, parsed.
std::vector<DiagramCode> full_corpus();
/// Non-comment lines of tests/data/shadows.txt, parsed.
std::vector<DiagramCode> flat_corpus();

CubicGraph load_graph(const std::string& name);  // e.g. "petersen"

/// Every flat code (flat and virtual passes) with at most `max_arcs` arcs on
/// at most `max_components` components, one per class up to relabeling,
/// rotation and component order.
std::vector<DiagramCode> all_flat_codes(std::size_t max_arcs, std::size_t max_components);

/// Shuffled over/under pairs with random signs plus `virtuals` virtual
/// pairs, dealt into `components` cyclic words (some may be empty).
DiagramCode random_full_code(Rng& rng, std::size_t crossings, std::size_t components,
                             std::size_t virtuals = 0);
DiagramCode random_flat_code(Rng& rng, std::size_t crossings, std::size_t components,
                             std::size_t virtuals = 0);

/// Connected bridgeless cubic multigraph without loops on `vertices` (even) vertices.
CubicGraph random_bridgeless_cubic(Rng& rng, std::size_t vertices);

// Independent oracles. None of them shares code with the library kernels.

/// Odd labels by direct count of classical passes between the occurrences.
std::vector<std::string> odd_labels_by_count(const DiagramCode& code);

/// Counts n-colorings by trying all n^arcs assignments against the local rules.
std::uint64_t brute_force_shadow_colorings(const DiagramCode& code, unsigned n);

/// Proper n-colorings of a multigraph by deletion-contraction.
std::uint64_t chromatic_count(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                              unsigned n);

/// Perfect matchings by scanning every edge subset of size |V|/2.
std::vector<Matching> subset_matchings(const CubicGraph& g);

/// Proper n-edge-colorings by scanning all n^|E| assignments.
std::uint64_t brute_force_edge_colorings(const CubicGraph& g, unsigned n);

/// Sum over orientations of A^writhe, each orientation realised by physically
/// reversing components of the code.
LaurentPoly orientation_sum_by_reversal(const DiagramCode& code);

LaurentPoly a_power(int e);

}  // namespace vknot::testing
