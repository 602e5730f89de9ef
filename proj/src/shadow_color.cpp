#include "vknot/shadow_color.hpp"

#include <algorithm>
#include <numeric>

namespace vknot {

namespace {

class Search {
 public:
  Search(const ShadowCsp& csp, unsigned n) : csp_(csp), n_(n), color_(csp.variable_count, -1),
                                             touching_(csp.variable_count) {
    for (std::size_t i = 0; i < csp.constraints.size(); ++i) {
      const auto& c = csp.constraints[i];
      for (std::size_t v : {c.in1, c.out1, c.in2, c.out2}) {
        if (touching_[v].empty() || touching_[v].back() != i) touching_[v].push_back(i);
      }
    }
  }

  /// Assigns `colors` to the first variables; false if that prefix already fails.
  bool seed(const std::vector<unsigned>& colors) {
    for (std::size_t v = 0; v < colors.size(); ++v) {
      color_[v] = static_cast<int>(colors[v]);
      if (!consistent(v)) return false;
    }
    return true;
  }

  template <typename OnLeaf>
  void run(std::size_t depth, OnLeaf&& on_leaf) {
    if (depth == csp_.variable_count) {
      on_leaf(color_);
      return;
    }
    for (unsigned c = 0; c < n_; ++c) {
      color_[depth] = static_cast<int>(c);
      if (consistent(depth)) run(depth + 1, on_leaf);
    }
    color_[depth] = -1;
  }

 private:
  bool consistent(std::size_t v) const {
    for (std::size_t i : touching_[v]) {
      if (!check(csp_.constraints[i])) return false;
    }
    return true;
  }

  // Partial check of {in1,out1} == {in2,out2} with in != out on both strands.
  bool check(const ShadowCsp::Constraint& k) const {
    const int a = color_[k.in1], b = color_[k.out1], c = color_[k.in2], d = color_[k.out2];
    if (a >= 0 && a == b) return false;
    if (c >= 0 && c == d) return false;
    if (a >= 0 && b >= 0) {
      if (c >= 0 && c != a && c != b) return false;
      if (d >= 0 && d != a && d != b) return false;
    }
    if (c >= 0 && d >= 0) {
      if (a >= 0 && a != c && a != d) return false;
      if (b >= 0 && b != c && b != d) return false;
    }
    return true;
  }

  const ShadowCsp& csp_;
  unsigned n_;
  std::vector<int> color_;
  std::vector<std::vector<std::size_t>> touching_;
};

std::vector<unsigned> prefix_colors(std::uint64_t index, std::size_t depth, unsigned n) {
  std::vector<unsigned> colors(depth);
  for (std::size_t i = depth; i-- > 0;) {
    colors[i] = static_cast<unsigned>(index % n);
    index /= n;
  }
  return colors;
}

void require_flat(const DiagramCode& code) {
  if (!code.is_flat()) throw CodeError("shadow coloring expects a flat code");
}

std::size_t flat_passes(const Component& c) {
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](const Pass& p) { return p.kind == PassKind::Flat; }));
}

}  // namespace

ShadowCsp build_shadow_csp(const DiagramCode& code) {
  require_flat(code);
  ShadowCsp csp;
  std::vector<std::size_t> offset;
  for (const auto& comp : code.components()) {
    offset.push_back(csp.arc_count);
    const std::size_t arcs = std::max<std::size_t>(comp.size(), 1);
    csp.arcs_per_component.push_back(arcs);
    csp.arc_count += arcs;
  }
  auto in_arc = [&](Occurrence o) { return offset[o.component] + o.position; };
  auto out_arc = [&](Occurrence o) {
    return offset[o.component] + (o.position + 1) % code.component(o.component).size();
  };

  std::vector<std::size_t> parent(csp.arc_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& v : code.table().virtuals()) {
    for (Occurrence o : {v.first, v.second}) {
      const std::size_t a = find(in_arc(o)), b = find(out_arc(o));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest arc of each class, so numbering roots in arc order
  // numbers variables by first arc.
  std::vector<std::size_t> var_of_root(csp.arc_count, static_cast<std::size_t>(-1));
  csp.variable_of_arc.resize(csp.arc_count);
  for (std::size_t a = 0; a < csp.arc_count; ++a) {
    const std::size_t r = find(a);
    if (var_of_root[r] == static_cast<std::size_t>(-1)) var_of_root[r] = csp.variable_count++;
    csp.variable_of_arc[a] = var_of_root[r];
  }
  for (const auto& x : code.table().crossings()) {
    csp.constraints.push_back({csp.variable_of_arc[in_arc(x.first)], csp.variable_of_arc[out_arc(x.first)],
                               csp.variable_of_arc[in_arc(x.second)], csp.variable_of_arc[out_arc(x.second)]});
  }
  return csp;
}

std::uint64_t count_shadow_colorings_serial(const DiagramCode& code, unsigned n) {
  const ShadowCsp csp = build_shadow_csp(code);
  if (n == 0) return csp.variable_count == 0 ? 1 : 0;
  Search search(csp, n);
  std::uint64_t count = 0;
  search.run(0, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::uint64_t count_shadow_colorings(const DiagramCode& code, unsigned n) {
  const ShadowCsp csp = build_shadow_csp(code);
  if (n == 0) return csp.variable_count == 0 ? 1 : 0;
  const std::size_t depth = std::min<std::size_t>(2, csp.variable_count);
  std::uint64_t tasks = 1;
  for (std::size_t i = 0; i < depth; ++i) tasks *= n;

  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
    Search search(csp, n);
    if (!search.seed(prefix_colors(static_cast<std::uint64_t>(t), depth, n))) continue;
    std::uint64_t local = 0;
    search.run(depth, [&](const std::vector<int>&) { ++local; });
    total += local;
  }
  return total;
}

std::vector<ArcColoring> enumerate_shadow_colorings(const DiagramCode& code, unsigned n, std::size_t limit) {
  const ShadowCsp csp = build_shadow_csp(code);
  std::vector<ArcColoring> out;
  if (n == 0) {
    if (csp.variable_count == 0) out.emplace_back();
    return out;
  }
  Search search(csp, n);
  search.run(0, [&](const std::vector<int>& colors) {
    if (out.size() >= limit) {
      throw ColoringLimitExceeded("more than " + std::to_string(limit) + " colorings");
    }
    ArcColoring arcs(csp.arc_count);
    for (std::size_t a = 0; a < csp.arc_count; ++a) {
      arcs[a] = static_cast<unsigned>(colors[csp.variable_of_arc[a]]);
    }
    out.push_back(std::move(arcs));
  });
  return out;
}

ParityObstruction parity_obstruction(const DiagramCode& code) {
  const ShadowCsp csp = build_shadow_csp(code);
  ParityObstruction result;
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    if (flat_passes(code.component(c)) % 2 == 1) {
      result.obstructed = true;
      result.components.push_back(c);
    }
  }
  for (std::size_t i = 0; i < csp.constraints.size(); ++i) {
    const auto& k = csp.constraints[i];
    const auto& x = code.table()[i];
    if (k.in1 == k.out1) result.self_conflict_components.push_back(x.first.component);
    if (k.in2 == k.out2) result.self_conflict_components.push_back(x.second.component);
  }
  auto& sc = result.self_conflict_components;
  std::sort(sc.begin(), sc.end());
  sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
  result.self_conflict = !sc.empty();
  return result;
}

bool two_color_criterion(const DiagramCode& code) {
  require_flat(code);
  return std::all_of(code.components().begin(), code.components().end(),
                     [](const Component& c) { return flat_passes(c) % 2 == 0; });
}

}  // namespace vknot
