#include "vknot/code_enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vknot/invariants.hpp"

namespace vknot {

namespace {

struct Token {
  PassKind kind;
  int label;
  int sign;
};

using CompactCode = std::vector<std::vector<Token>>;
using Key = std::vector<int>;

constexpr int kSeparator = -1;
constexpr int kEmptyComponent = -2;

int kind_rank(PassKind k) {
  switch (k) {
    case PassKind::Over: return 0;
    case PassKind::Under: return 1;
    case PassKind::Virtual: return 2;
    case PassKind::Flat: return 3;
  }
  return 0;
}

/// Key of one arrangement, relabeling by first appearance.
Key arrangement_key(const CompactCode& code, const std::vector<std::size_t>& order,
                    const std::vector<std::size_t>& rotation, std::vector<int>& relabel) {
  std::fill(relabel.begin(), relabel.end(), -1);
  int next = 0;
  Key key;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const auto& comp = code[order[idx]];
    if (idx > 0) key.push_back(kSeparator);
    if (comp.empty()) {
      key.push_back(kEmptyComponent);
      continue;
    }
    const std::size_t r = rotation[order[idx]];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Token& t = comp[(i + r) % comp.size()];
      int& label = relabel[static_cast<std::size_t>(t.label)];
      if (label < 0) label = next++;
      key.push_back(label * 8 + kind_rank(t.kind) * 2 + (t.sign > 0 ? 1 : 0));
    }
  }
  return key;
}

Key canonical_key(const CompactCode& code, int label_count) {
  std::vector<std::size_t> order(code.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> relabel(static_cast<std::size_t>(label_count));
  Key best;
  bool have = false;
  do {
    std::vector<std::size_t> rotation(code.size(), 0);
    for (;;) {
      Key k = arrangement_key(code, order, rotation, relabel);
      if (!have || k < best) {
        best = std::move(k);
        have = true;
      }
      // Odometer over per-component rotations.
      std::size_t c = 0;
      for (; c < code.size(); ++c) {
        if (++rotation[c] < std::max<std::size_t>(code[c].size(), 1)) break;
        rotation[c] = 0;
      }
      if (c == code.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

DiagramCode decode(const Key& key) {
  std::vector<Component> comps(1);
  for (int v : key) {
    if (v == kSeparator) {
      comps.emplace_back();
      continue;
    }
    if (v == kEmptyComponent) continue;
    const int label = v / 8;
    const int kind = (v % 8) / 2;
    const bool positive = (v % 2) == 1;
    Pass p;
    p.label = std::to_string(label + 1);
    switch (kind) {
      case 0: p.kind = PassKind::Over; break;
      case 1: p.kind = PassKind::Under; break;
      case 2: p.kind = PassKind::Virtual; break;
      default: p.kind = PassKind::Flat; break;
    }
    if (p.is_signed()) p.sign = positive ? 1 : -1;
    comps.back().push_back(p);
  }
  return DiagramCode(std::move(comps));
}

CompactCode compact(const DiagramCode& code, int& label_count) {
  std::map<std::string, int> ids;
  CompactCode out;
  for (const auto& comp : code.components()) {
    auto& tokens = out.emplace_back();
    for (const auto& p : comp) {
      auto [it, inserted] = ids.try_emplace(p.label, static_cast<int>(ids.size()));
      tokens.push_back({p.kind, it->second, p.sign});
    }
  }
  label_count = static_cast<int>(ids.size());
  return out;
}

/// Words of length 2k in which labels 0..k-1 each appear twice, numbered by first appearance.
void label_words(std::size_t k, std::vector<int>& word, std::vector<int>& remaining, int next,
                 std::vector<std::vector<int>>& out) {
  if (word.size() == 2 * k) {
    out.push_back(word);
    return;
  }
  if (next < static_cast<int>(k)) {
    word.push_back(next);
    remaining[static_cast<std::size_t>(next)] = 1;
    label_words(k, word, remaining, next + 1, out);
    remaining[static_cast<std::size_t>(next)] = 0;
    word.pop_back();
  }
  for (int l = 0; l < next; ++l) {
    if (remaining[static_cast<std::size_t>(l)] != 1) continue;
    word.push_back(l);
    remaining[static_cast<std::size_t>(l)] = 2;
    label_words(k, word, remaining, next, out);
    remaining[static_cast<std::size_t>(l)] = 1;
    word.pop_back();
  }
}

/// Ordered splits of `total` into `parts` nonnegative sizes.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t s = 0; s <= total; ++s) {
    cur.push_back(s);
    compositions(total - s, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string canonical_form(const DiagramCode& code) {
  int labels = 0;
  const CompactCode c = compact(code, labels);
  return decode(canonical_key(c, labels)).render();
}

std::vector<DiagramCode> enumerate_codes(std::size_t crossings, std::size_t components) {
  if (components == 0) throw CodeError("a code needs at least one component");
  if (crossings > 6) throw CodeError("exhaustive enumeration is limited to 6 crossings");
  const std::size_t k = crossings;

  std::vector<std::vector<int>> words;
  std::vector<int> word, remaining(k, 0);
  label_words(k, word, remaining, 0, words);

  std::vector<std::vector<std::size_t>> splits;
  std::vector<std::size_t> cur;
  compositions(2 * k, components, cur, splits);

  std::set<Key> keys;
  const int label_count = static_cast<int>(k);
  for (const auto& w : words) {
    for (unsigned long long over_mask = 0; over_mask < (1ULL << k); ++over_mask) {
      for (unsigned long long sign_mask = 0; sign_mask < (1ULL << k); ++sign_mask) {
        std::vector<Token> seq;
        std::vector<bool> seen(k, false);
        for (int l : w) {
          const auto ul = static_cast<std::size_t>(l);
          const bool first = !seen[ul];
          seen[ul] = true;
          const bool over = first == (((over_mask >> ul) & 1ULL) == 0);
          const int sign = ((sign_mask >> ul) & 1ULL) ? -1 : 1;
          seq.push_back({over ? PassKind::Over : PassKind::Under, l, sign});
        }
        for (const auto& split : splits) {
          CompactCode code;
          std::size_t pos = 0;
          for (std::size_t len : split) {
            code.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(pos),
                              seq.begin() + static_cast<std::ptrdiff_t>(pos + len));
            pos += len;
          }
          keys.insert(canonical_key(code, label_count));
        }
      }
    }
  }

  std::vector<DiagramCode> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(decode(key));
  std::sort(out.begin(), out.end(),
            [](const DiagramCode& a, const DiagramCode& b) { return a.render() < b.render(); });
  return out;
}

bool is_split(const DiagramCode& code) {
  const std::size_t n = code.component_count();
  std::vector<std::size_t> group(n);
  std::iota(group.begin(), group.end(), 0);
  auto find = [&](std::size_t x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  auto join = [&](Occurrence a, Occurrence b) {
    const std::size_t ra = find(a.component), rb = find(b.component);
    if (ra != rb) group[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (const auto& x : code.table().crossings()) join(x.first, x.second);
  for (const auto& v : code.table().virtuals()) join(v.first, v.second);
  std::size_t roots = 0;
  for (std::size_t c = 0; c < n; ++c) roots += find(c) == c ? 1 : 0;
  return roots > 1;
}

std::vector<SearchHit> search_codes(std::size_t max_crossings, std::size_t components) {
  std::vector<SearchHit> hits;
  for (std::size_t k = 0; k <= max_crossings; ++k) {
    const auto codes = enumerate_codes(k, components);
    std::vector<std::optional<SearchHit>> found(codes.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(codes.size()); ++i) {
      const auto& code = codes[static_cast<std::size_t>(i)];
      SearchHit hit{code, std::nullopt, lambda_invariant(code), is_split(code)};
      if (components == 1) hit.j = j_invariant(code);
      const bool j_hit = hit.j && *hit.j != 0;
      const bool lambda_hit = !hit.lambda.is_zero() && !hit.lambda.is_one();
      if (j_hit || lambda_hit) found[static_cast<std::size_t>(i)] = std::move(hit);
    }
    for (auto& f : found) {
      if (f) hits.push_back(std::move(*f));
    }
  }
  return hits;
}

}  // namespace vknot
