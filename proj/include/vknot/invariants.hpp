#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

/// One flag per component; true means traversed against the written order.
class OrientationChoice {
 public:
  explicit OrientationChoice(std::size_t components) : reversed_(components, false) {}
  explicit OrientationChoice(std::vector<bool> reversed) : reversed_(std::move(reversed)) {}

  /// The i-th of the 2^N choices, bit c of `bits` reversing component c.
  static OrientationChoice from_bits(std::size_t components, unsigned long long bits);

  std::size_t size() const { return reversed_.size(); }
  bool reversed(std::size_t component) const { return reversed_.at(component); }

 private:
  std::vector<bool> reversed_;
};

/// A flip-rule coloring, stored as the color of each component's first arc.
/// Arc j of a component is the arc entering pass j.
struct ProperColoring {
  std::vector<int> first_arc;  // 0 or 1 per component

  friend bool operator==(const ProperColoring&, const ProperColoring&) = default;
};

/// Color (0/1) of the arc entering each pass, per component.
std::vector<std::vector<int>> arc_colors(const DiagramCode& code, const ProperColoring& coloring);

/// Labels with an odd number of classical passes strictly between their two
/// occurrences. Single-component codes only, full or flat.
std::vector<std::string> odd_crossings(const DiagramCode& code);

/// Sum of signs over odd crossings. Single-component full codes only.
int j_invariant(const DiagramCode& code);

int writhe(const DiagramCode& code, const OrientationChoice& orientation);
int writhe(const DiagramCode& code);

/// Sum over all 2^N orientations of A^{writhe}.
LaurentPoly orientation_sum(const DiagramCode& code);

/// All flip-rule colorings: empty, or 2^N of them.
std::vector<ProperColoring> proper_colorings(const DiagramCode& code);

/// Two-color state sum computed from the proper colorings of the shadow.
LaurentPoly binary_bracket(const DiagramCode& code);

/// A^{-w} times the binary bracket, writhe at the written orientation.
LaurentPoly inv_normalized(const DiagramCode& code);

RationalExpr lambda_invariant(const DiagramCode& code);

/// Off-diagonal: half the inter-component sign sum; diagonal: self-crossing sign sum.
std::vector<std::vector<Rational>> linking_matrix(const DiagramCode& code);

struct ClassificationFlag {
  std::string flag;    // "non-trivial", "non-classical", "chiral"
  std::string reason;  // the triggering value, e.g. "J=2"
};

struct NonclassicalityReport {
  std::optional<int> j;
  RationalExpr lambda;
  std::vector<ClassificationFlag> flags;

  bool has(const std::string& flag) const;
};

NonclassicalityReport nonclassicality_report(const DiagramCode& code);

/// Labels whose parity differs between counting classical passes and counting
/// virtual passes between the two occurrences. Single-component codes only.
std::vector<std::string> parity_lint(const DiagramCode& code);

}  // namespace vknot
