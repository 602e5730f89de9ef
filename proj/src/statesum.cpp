#include "vknot/statesum.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vknot {

namespace {

constexpr std::size_t kMaxStateCrossings = 30;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct CrossingArcs {
  std::size_t over_in, over_out, under_in, under_out;
  int sign;
};

/// Arc-level view of a full code. Arc (c, j) enters pass j of component c.
struct ArcModel {
  std::size_t arc_count = 0;
  std::vector<CrossingArcs> crossings;
  std::vector<std::pair<std::size_t, std::size_t>> pass_through;  // virtual passes

  explicit ArcModel(const DiagramCode& code) {
    if (!code.is_full()) throw CodeError("state sums expect a full code");
    std::vector<std::size_t> offset;
    for (const auto& comp : code.components()) {
      offset.push_back(arc_count);
      arc_count += std::max<std::size_t>(comp.size(), 1);
    }
    auto in_arc = [&](Occurrence o) { return offset[o.component] + o.position; };
    auto out_arc = [&](Occurrence o) {
      return offset[o.component] + (o.position + 1) % code.component(o.component).size();
    };
    for (const auto& x : code.table().crossings()) {
      crossings.push_back({in_arc(x.over), out_arc(x.over), in_arc(x.under), out_arc(x.under), x.sign});
    }
    for (const auto& v : code.table().virtuals()) {
      pass_through.emplace_back(in_arc(v.first), out_arc(v.first));
      pass_through.emplace_back(in_arc(v.second), out_arc(v.second));
    }
  }

  StateGraph trace(const SmoothingAssignment& state) const {
    UnionFind uf(arc_count);
    for (const auto& [a, b] : pass_through) uf.unite(a, b);
    std::vector<std::pair<std::size_t, std::size_t>> strands;
    strands.reserve(crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      const auto& x = crossings[i];
      const bool direction_preserving = (state[i] == Smoothing::A) == (x.sign > 0);
      if (direction_preserving) {
        uf.unite(x.over_in, x.under_out);
        uf.unite(x.under_in, x.over_out);
        strands.emplace_back(x.over_in, x.under_in);
      } else {
        uf.unite(x.over_in, x.under_in);
        uf.unite(x.over_out, x.under_out);
        strands.emplace_back(x.over_in, x.over_out);
      }
    }
    std::vector<std::size_t> loop_of_root(arc_count, static_cast<std::size_t>(-1));
    StateGraph g;
    for (std::size_t a = 0; a < arc_count; ++a) {
      const std::size_t r = uf.find(a);
      if (loop_of_root[r] == static_cast<std::size_t>(-1)) loop_of_root[r] = g.loop_count++;
    }
    for (const auto& [s1, s2] : strands) {
      g.sites.emplace_back(loop_of_root[uf.find(s1)], loop_of_root[uf.find(s2)]);
    }
    return g;
  }
};

void check_size(const DiagramCode& code) {
  if (code.classical_count() > kMaxStateCrossings) {
    throw CodeError("too many classical crossings for state enumeration");
  }
}

void accumulate_state(const ArcModel& model, std::size_t crossings, std::uint64_t k, unsigned n,
                      BiLaurent& sum) {
  const auto state = gray_state(crossings, k);
  const auto count = count_proper_colorings(model.trace(state), n);
  if (count == 0) return;
  const int b_count = static_cast<int>(std::count(state.begin(), state.end(), Smoothing::B));
  sum.add_term(static_cast<int>(crossings) - b_count, b_count, count);
}

std::uint64_t count_component(const std::vector<std::vector<std::size_t>>& adj,
                              const std::vector<std::size_t>& order, unsigned n) {
  std::vector<int> color(adj.size(), -1);
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const std::size_t v = order[depth];
    for (unsigned c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t u : adj[v]) {
        if (color[u] == static_cast<int>(c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = static_cast<int>(c);
      self(self, depth + 1);
      color[v] = -1;
    }
  };
  recurse(recurse, 0);
  return count;
}

}  // namespace

SmoothingAssignment gray_state(std::size_t crossing_count, std::uint64_t k) {
  const std::uint64_t g = k ^ (k >> 1);
  SmoothingAssignment s(crossing_count, Smoothing::A);
  for (std::size_t i = 0; i < crossing_count; ++i) {
    if ((g >> i) & 1ULL) s[i] = Smoothing::B;
  }
  return s;
}

std::vector<SmoothingAssignment> enumerate_states(const DiagramCode& code) {
  if (!code.is_full()) throw CodeError("enumerate_states expects a full code");
  check_size(code);
  const std::size_t n = code.classical_count();
  std::vector<SmoothingAssignment> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (1ULL << n); ++k) out.push_back(gray_state(n, k));
  return out;
}

StateGraph trace_state(const DiagramCode& code, const SmoothingAssignment& state) {
  ArcModel model(code);
  if (state.size() != model.crossings.size()) throw CodeError("state does not cover every crossing");
  return model.trace(state);
}

BigInt count_proper_colorings(const StateGraph& graph, unsigned n) {
  std::vector<std::vector<std::size_t>> adj(graph.loop_count);
  for (const auto& [a, b] : graph.sites) {
    if (a == b) return 0;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  BigInt total = 1;
  std::vector<bool> seen(graph.loop_count, false);
  for (std::size_t start = 0; start < graph.loop_count; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members{start};
    seen[start] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t u : adj[members[i]]) {
        if (!seen[u]) {
          seen[u] = true;
          members.push_back(u);
        }
      }
    }
    if (members.size() == 1) {
      total *= n;
      continue;
    }
    std::stable_sort(members.begin(), members.end(),
                     [&](std::size_t a, std::size_t b) { return adj[a].size() > adj[b].size(); });
    total *= count_component(adj, members, n);
    if (total == 0) return 0;
  }
  return total;
}

BiLaurent nary_bracket_serial(const DiagramCode& code, unsigned n) {
  const ArcModel model(code);
  check_size(code);
  const std::size_t crossings = model.crossings.size();
  BiLaurent sum;
  for (std::uint64_t k = 0; k < (1ULL << crossings); ++k) accumulate_state(model, crossings, k, n, sum);
  return sum;
}

BiLaurent nary_bracket(const DiagramCode& code, unsigned n) {
  const ArcModel model(code);
  check_size(code);
  const std::size_t crossings = model.crossings.size();
  const auto states = static_cast<std::int64_t>(1ULL << crossings);
  BiLaurent sum;
#pragma omp parallel
  {
    BiLaurent local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t k = 0; k < states; ++k) {
      accumulate_state(model, crossings, static_cast<std::uint64_t>(k), n, local);
    }
#pragma omp critical(vknot_nary_bracket_reduce)
    sum += local;
  }
  return sum;
}

LaurentPoly bracket_oracle(const DiagramCode& code) { return nary_bracket(code, 2).collapse_b_to_inverse_a(); }

std::vector<StateTrace> trace_all_states(const DiagramCode& code, unsigned n) {
  const ArcModel model(code);
  check_size(code);
  const std::size_t crossings = model.crossings.size();
  std::vector<StateTrace> out;
  for (std::uint64_t k = 0; k < (1ULL << crossings); ++k) {
    StateTrace t;
    t.index = k;
    t.state = gray_state(crossings, k);
    const auto g = model.trace(t.state);
    t.loops = g.loop_count;
    t.colorings = count_proper_colorings(g, n);
    out.push_back(std::move(t));
  }
  return out;
}

std::string state_bits(const SmoothingAssignment& state) {
  std::string s;
  for (auto x : state) s += x == Smoothing::A ? 'A' : 'B';
  return s;
}

}  // namespace vknot
