#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

/// One color per arc, arcs in code order (arc j of a component enters pass j;
/// a crossing-free loop is a single arc).
using ArcColoring = std::vector<unsigned>;

/// Coloring problem of a flat code with virtual passes contracted away.
///
/// Each flat crossing constrains the (in, out) variables of its two strands:
/// in != out on both strands, and {in1, out1} == {in2, out2}.
struct ShadowCsp {
  struct Constraint {
    std::size_t in1, out1, in2, out2;
  };

  std::size_t arc_count = 0;
  std::size_t variable_count = 0;
  std::vector<std::size_t> variable_of_arc;  // variables numbered by first arc
  std::vector<Constraint> constraints;
  /// Arcs per component, for mapping colorings back.
  std::vector<std::size_t> arcs_per_component;
};

/// Throws CodeError unless the code is flat (no over/under passes).
ShadowCsp build_shadow_csp(const DiagramCode& code);

/// Number of valid n-colorings (OpenMP over the first variables' colors).
std::uint64_t count_shadow_colorings(const DiagramCode& code, unsigned n);
/// Single-threaded reference for count_shadow_colorings.
std::uint64_t count_shadow_colorings_serial(const DiagramCode& code, unsigned n);

class ColoringLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All valid colorings in lexicographic order over arcs. Throws
/// ColoringLimitExceeded when there are more than `limit`.
std::vector<ArcColoring> enumerate_shadow_colorings(const DiagramCode& code, unsigned n,
                                                    std::size_t limit = 100000);

struct ParityObstruction {
  /// Some component has an odd number of flat passes; no coloring exists for n <= 2.
  bool obstructed = false;
  std::vector<std::size_t> components;
  /// Some flat strand leaves with the color it entered (its in and out arcs
  /// are joined through virtual passes); no coloring exists for any n.
  bool self_conflict = false;
  std::vector<std::size_t> self_conflict_components;
};

ParityObstruction parity_obstruction(const DiagramCode& code);

/// True iff every component has an even number of flat passes, which is
/// exactly when a 2-coloring exists.
bool two_color_criterion(const DiagramCode& code);

}  // namespace vknot
