#include "vknot/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

namespace vknot {

namespace {

bool is_label_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (std::isalnum(u) || c == '_') && !is_pass_letter(c);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Component> run() {
    std::vector<Component> components;
    components.push_back(component());
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != ';') fail("expected ';' or end of input");
      ++pos_;
      components.push_back(component());
      skip_space();
    }
    return components;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(pos_, what + ", found " + found);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Component component() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      return {};
    }
    Component passes;
    passes.push_back(pass());
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ';') break;
      passes.push_back(pass());
    }
    return passes;
  }

  Pass pass() {
    if (pos_ >= text_.size()) fail("expected a pass (O, U, V, F) or '@'");
    Pass p;
    switch (text_[pos_]) {
      case 'O': p.kind = PassKind::Over; break;
      case 'U': p.kind = PassKind::Under; break;
      case 'V': p.kind = PassKind::Virtual; break;
      case 'F': p.kind = PassKind::Flat; break;
      default: fail("expected a pass (O, U, V, F) or '@'");
    }
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a crossing label");
    p.label = std::string(text_.substr(start, pos_ - start));
    if (p.is_signed()) {
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
        fail("expected crossing sign '+' or '-'");
      }
      p.sign = text_[pos_] == '+' ? 1 : -1;
      ++pos_;
    }
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_pass_letter(char c) { return c == 'O' || c == 'U' || c == 'V' || c == 'F'; }

std::size_t CrossingTable::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? npos : it->second;
}

DiagramCode::DiagramCode(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("", "a code needs at least one component");
  build_table();
}

void DiagramCode::build_table() {
  struct Seen {
    std::vector<Occurrence> at;
    std::vector<const Pass*> passes;
  };
  std::map<std::string, Seen> by_label;
  const Pass* first_flat = nullptr;
  const Pass* first_signed = nullptr;

  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const Pass& p = components_[c][i];
      if (p.label.empty() || !std::all_of(p.label.begin(), p.label.end(), is_label_char)) {
        throw ValidationError(p.label, "invalid label characters");
      }
      if (p.is_signed() && p.sign != 1 && p.sign != -1) {
        throw ValidationError(p.label, "over/under pass needs sign +1 or -1");
      }
      if (!p.is_signed() && p.sign != 0) {
        throw ValidationError(p.label, "virtual and flat passes carry no sign");
      }
      if (p.kind == PassKind::Flat && first_flat == nullptr) first_flat = &p;
      if (p.is_signed() && first_signed == nullptr) first_signed = &p;
      auto& seen = by_label[p.label];
      seen.at.push_back({c, i});
      seen.passes.push_back(&p);
    }
  }
  has_flat_ = first_flat != nullptr;
  has_signed_ = first_signed != nullptr;
  if (has_flat_ && has_signed_) {
    throw ValidationError(first_flat->label, "mode mixing: flat pass in a code with over/under passes");
  }

  table_ = CrossingTable{};
  for (const auto& [label, seen] : by_label) {
    const bool any_virtual = std::any_of(seen.passes.begin(), seen.passes.end(),
                                         [](const Pass* p) { return p->kind == PassKind::Virtual; });
    const bool any_classical = std::any_of(seen.passes.begin(), seen.passes.end(),
                                           [](const Pass* p) { return p->is_classical(); });
    if (any_virtual && any_classical) {
      throw ValidationError(label, "label used for both virtual and classical passes");
    }
    if (seen.at.size() == 1) {
      throw ValidationError(label, any_virtual ? "virtual label not paired" : "single occurrence");
    }
    if (seen.at.size() > 2) {
      throw ValidationError(label, any_virtual ? "virtual label not paired (more than two passes)"
                                               : "more than two occurrences");
    }
    if (any_virtual) {
      table_.virtuals_.push_back({label, seen.at[0], seen.at[1]});
      continue;
    }
    CrossingInfo info;
    info.label = label;
    info.first = seen.at[0];
    info.second = seen.at[1];
    const Pass& a = *seen.passes[0];
    const Pass& b = *seen.passes[1];
    if (a.is_signed()) {
      if (a.kind == b.kind) throw ValidationError(label, "repeated role (two " +
                                                             std::string(a.kind == PassKind::Over ? "over" : "under") +
                                                             " passes)");
      if (a.sign != b.sign) throw ValidationError(label, "sign mismatch");
      info.sign = a.sign;
      info.over = a.kind == PassKind::Over ? info.first : info.second;
      info.under = a.kind == PassKind::Over ? info.second : info.first;
    }
    table_.index_.emplace(label, table_.crossings_.size());
    table_.crossings_.push_back(std::move(info));
  }
}

std::size_t DiagramCode::total_passes() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

bool DiagramCode::uses_label(std::string_view label) const {
  for (const auto& c : components_) {
    for (const auto& p : c) {
      if (p.label == label) return true;
    }
  }
  return false;
}

std::string DiagramCode::fresh_label(std::size_t skip) const {
  std::set<std::string> used;
  for (const auto& c : components_) {
    for (const auto& p : c) used.insert(p.label);
  }
  for (std::size_t n = 1;; ++n) {
    std::string candidate = std::to_string(n);
    if (used.count(candidate) == 0) {
      if (skip == 0) return candidate;
      --skip;
    }
  }
}

std::string DiagramCode::render() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c > 0) out += ';';
    if (components_[c].empty()) {
      out += '@';
      continue;
    }
    for (const auto& p : components_[c]) {
      switch (p.kind) {
        case PassKind::Over: out += 'O'; break;
        case PassKind::Under: out += 'U'; break;
        case PassKind::Virtual: out += 'V'; break;
        case PassKind::Flat: out += 'F'; break;
      }
      out += p.label;
      if (p.is_signed()) out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DiagramCode& code) { return os << code.render(); }

DiagramCode DiagramCode::parse(std::string_view text) { return DiagramCode(Parser(text).run()); }

DiagramCode parse(std::string_view text) { return DiagramCode::parse(text); }

DiagramCode mirror(const DiagramCode& code) {
  if (!code.is_full()) throw CodeError("mirror is undefined on flat codes");
  auto comps = code.components();
  for (auto& c : comps) {
    for (auto& p : c) {
      if (p.kind == PassKind::Over) {
        p.kind = PassKind::Under;
      } else if (p.kind == PassKind::Under) {
        p.kind = PassKind::Over;
      }
      p.sign = -p.sign;
    }
  }
  return DiagramCode(std::move(comps));
}

DiagramCode shadow_of(const DiagramCode& code) {
  if (!code.is_full()) throw CodeError("shadow_of expects a full code");
  auto comps = code.components();
  for (auto& c : comps) {
    for (auto& p : c) {
      if (p.is_signed()) {
        p.kind = PassKind::Flat;
        p.sign = 0;
      }
    }
  }
  return DiagramCode(std::move(comps));
}

DiagramCode reverse_component(const DiagramCode& code, std::size_t idx) {
  if (idx >= code.component_count()) throw CodeError("component index out of range");
  if (!code.is_full()) throw CodeError("reverse_component expects a full code");
  auto comps = code.components();
  std::reverse(comps[idx].begin(), comps[idx].end());
  for (const auto& x : code.table().crossings()) {
    const bool touches_idx = x.first.component == idx || x.second.component == idx;
    if (x.is_self_crossing() || !touches_idx) continue;
    for (auto& c : comps) {
      for (auto& p : c) {
        if (p.label == x.label) p.sign = -p.sign;
      }
    }
  }
  return DiagramCode(std::move(comps));
}

DiagramCode rotate_component(const DiagramCode& code, std::size_t idx, std::size_t shift) {
  if (idx >= code.component_count()) throw CodeError("component index out of range");
  auto comps = code.components();
  auto& c = comps[idx];
  if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift % c.size()), c.end());
  return DiagramCode(std::move(comps));
}

}  // namespace vknot
