#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

enum class PassKind { Over, Under, Virtual, Flat };

/// One appearance of a crossing along a component.
struct Pass {
  PassKind kind = PassKind::Flat;
  std::string label;
  int sign = 0;  // +1 / -1 for Over and Under, 0 otherwise

  bool is_classical() const { return kind != PassKind::Virtual; }
  bool is_signed() const { return kind == PassKind::Over || kind == PassKind::Under; }

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// A component is a cyclic pass sequence; an empty one is a crossing-free loop.
using Component = std::vector<Pass>;

class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public CodeError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : CodeError("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public CodeError {
 public:
  ValidationError(std::string label, const std::string& what)
      : CodeError(label.empty() ? what : "label " + label + ": " + what), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// Location of one pass: component index and position within it.
struct Occurrence {
  std::size_t component = 0;
  std::size_t position = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// A classical (Over/Under) or flat crossing, seen from both of its passes.
struct CrossingInfo {
  std::string label;
  Occurrence first;   // earlier in (component, position) order
  Occurrence second;
  int sign = 0;       // 0 for flat crossings
  Occurrence over;    // meaningful for signed crossings only
  Occurrence under;

  bool is_self_crossing() const { return first.component == second.component; }
};

struct VirtualInfo {
  std::string label;
  Occurrence first;
  Occurrence second;
};

/// Crossing data derived from a code; classical crossings sorted by label.
class CrossingTable {
 public:
  const std::vector<CrossingInfo>& crossings() const { return crossings_; }
  const std::vector<VirtualInfo>& virtuals() const { return virtuals_; }
  std::size_t size() const { return crossings_.size(); }
  const CrossingInfo& operator[](std::size_t i) const { return crossings_[i]; }
  /// Index into crossings() or npos.
  std::size_t index_of(const std::string& label) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend class DiagramCode;
  std::vector<CrossingInfo> crossings_;
  std::vector<VirtualInfo> virtuals_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A validated multi-component extended Gauss code.
///
/// Full codes carry Over/Under passes, flat codes carry Flat passes, and both
/// may carry paired Virtual passes. A code without classical passes counts as
/// both full and flat.
class DiagramCode {
 public:
  /// Validates and throws ValidationError on failure.
  explicit DiagramCode(std::vector<Component> components);

  static DiagramCode parse(std::string_view text);

  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  std::size_t component_count() const { return components_.size(); }
  const CrossingTable& table() const { return table_; }

  bool is_full() const { return !has_flat_; }
  bool is_flat() const { return !has_signed_; }
  /// "flat" when any Flat pass is present, "full" otherwise.
  std::string mode_name() const { return has_flat_ ? "flat" : "full"; }

  std::size_t classical_count() const { return table_.size(); }
  std::size_t total_passes() const;
  /// Labels in use, of any kind.
  bool uses_label(std::string_view label) const;
  /// Smallest positive integer label not yet in use.
  std::string fresh_label(std::size_t skip = 0) const;

  std::string render() const;

  friend bool operator==(const DiagramCode& a, const DiagramCode& b) {
    return a.components_ == b.components_;
  }

 private:
  void build_table();

  std::vector<Component> components_;
  CrossingTable table_;
  bool has_flat_ = false;
  bool has_signed_ = false;
};

std::ostream& operator<<(std::ostream& os, const DiagramCode& code);

/// Characters that start a pass and therefore cannot appear in labels.
bool is_pass_letter(char c);

DiagramCode parse(std::string_view text);

// Transformations. All return new validated codes.

/// Swaps Over/Under and negates signs. Throws CodeError on flat input.
DiagramCode mirror(const DiagramCode& code);
/// Forgets over/under: classical passes become Flat with the same label.
DiagramCode shadow_of(const DiagramCode& code);
/// Reverses component `idx`; signs of crossings shared with other components negate.
DiagramCode reverse_component(const DiagramCode& code, std::size_t idx);
/// Rotates component `idx` so that pass `shift` comes first.
DiagramCode rotate_component(const DiagramCode& code, std::size_t idx, std::size_t shift);

/// A gap between passes: insertion happens before `position` (0..size).
struct Site {
  std::size_t component = 0;
  std::size_t position = 0;
};

enum class CurlOrder { OverFirst, UnderFirst };

/// Inserts a curl "O i s U i s" (or "U i s O i s") at `site`.
DiagramCode move_r1_insert(const DiagramCode& code, Site site, int sign,
                           CurlOrder order = CurlOrder::OverFirst, std::string label = {});

/// Inserts a bigon: "O j s, O k -s" at `site1` and "U k -s, U j s" at `site2`
/// (or "U j s, U k -s" when `parallel`). Sites refer to the input code; when
/// they coincide the over pair comes first.
DiagramCode move_r2_insert(const DiagramCode& code, Site site1, Site site2, int sign = 1,
                           bool parallel = false, std::string label_j = {},
                           std::string label_k = {});

/// Removes both passes of virtual label `vlabel` and reinserts them at the
/// given sites, which refer to the code after removal.
DiagramCode move_detour_shuffle(const DiagramCode& code, const std::string& vlabel, Site site1,
                                Site site2);

}  // namespace vknot
