#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

enum class Smoothing : std::uint8_t { A, B };

/// One smoothing per classical crossing, indexed like CrossingTable (labels
/// sorted lexicographically).
using SmoothingAssignment = std::vector<Smoothing>;

/// Loops of a smoothed state and the two loop incidences of every smoothing site.
struct StateGraph {
  std::size_t loop_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> sites;
};

/// The k-th state in Gray-code order: bit i of k ^ (k >> 1) selects a B smoothing at crossing i.
SmoothingAssignment gray_state(std::size_t crossing_count, std::uint64_t k);

/// All 2^N states in Gray-code order.
std::vector<SmoothingAssignment> enumerate_states(const DiagramCode& code);

/// Traces loops of a state. Positive crossings: A joins over-in/under-out and
/// under-in/over-out, B joins over-in/under-in and over-out/under-out.
/// Negative crossings swap A and B. Virtual passes never reconnect.
StateGraph trace_state(const DiagramCode& code, const SmoothingAssignment& state);

/// Number of n-colorings of the loops with distinct colors at every site.
BigInt count_proper_colorings(const StateGraph& graph, unsigned n);

/// Sum over states of A^{#A} B^{#B} times the n-coloring count (OpenMP).
BiLaurent nary_bracket(const DiagramCode& code, unsigned n);
/// Single-threaded reference for nary_bracket.
BiLaurent nary_bracket_serial(const DiagramCode& code, unsigned n);

/// nary_bracket(code, 2) with B = A^{-1}.
LaurentPoly bracket_oracle(const DiagramCode& code);

struct StateTrace {
  std::uint64_t index = 0;  // position in Gray-code order
  SmoothingAssignment state;
  std::size_t loops = 0;
  BigInt colorings;
};

/// Per-state debugging record for every state, in Gray-code order.
std::vector<StateTrace> trace_all_states(const DiagramCode& code, unsigned n);

/// "AB..." rendering of a state, one letter per crossing in table order.
std::string state_bits(const SmoothingAssignment& state);

}  // namespace vknot
