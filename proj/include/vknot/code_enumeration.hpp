#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

/// Canonical key of a code up to relabeling, cyclic rotation of each
/// component, and reordering of components. Labels are renumbered 1, 2, ...
/// by first appearance; the lexicographically least rendering wins.
std::string canonical_form(const DiagramCode& code);

/// Every full code with exactly `crossings` classical crossings over
/// `components` components and no virtual passes, one per canonical class,
/// each rendered in its canonical form and sorted by that rendering.
std::vector<DiagramCode> enumerate_codes(std::size_t crossings, std::size_t components);

/// True when the components fall into more than one group with no crossing
/// between groups.
bool is_split(const DiagramCode& code);

struct SearchHit {
  DiagramCode code;
  std::optional<int> j;  // knots only
  RationalExpr lambda;
  bool split = false;
};

/// Codes with at most `max_crossings` crossings on `components` components
/// for which J != 0 or Lambda is neither 0 nor 1, ordered by crossing count
/// and then canonical form.
std::vector<SearchHit> search_codes(std::size_t max_crossings, std::size_t components);

}  // namespace vknot
