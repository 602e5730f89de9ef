#include <algorithm>

#include "vknot/gauss_code.hpp"

namespace vknot {

namespace {

void check_site(const std::vector<Component>& comps, Site site) {
  if (site.component >= comps.size() || site.position > comps[site.component].size()) {
    throw CodeError("invalid insertion site (" + std::to_string(site.component) + ", " +
                    std::to_string(site.position) + ")");
  }
}

void check_full(const DiagramCode& code, const char* move) {
  if (!code.is_full()) throw CodeError(std::string(move) + " expects a full code");
}

std::string pick_label(const DiagramCode& code, std::string requested, std::size_t skip) {
  if (requested.empty()) return code.fresh_label(skip);
  if (code.uses_label(requested)) throw CodeError("label " + requested + " collides with an existing label");
  return requested;
}

void insert_at(std::vector<Component>& comps, Site site, std::vector<Pass> passes) {
  auto& c = comps[site.component];
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(site.position), passes.begin(), passes.end());
}

}  // namespace

DiagramCode move_r1_insert(const DiagramCode& code, Site site, int sign, CurlOrder order,
                           std::string label) {
  check_full(code, "move_r1_insert");
  if (sign != 1 && sign != -1) throw CodeError("curl sign must be +1 or -1");
  auto comps = code.components();
  check_site(comps, site);
  const std::string i = pick_label(code, std::move(label), 0);
  Pass over{PassKind::Over, i, sign};
  Pass under{PassKind::Under, i, sign};
  if (order == CurlOrder::OverFirst) {
    insert_at(comps, site, {over, under});
  } else {
    insert_at(comps, site, {under, over});
  }
  return DiagramCode(std::move(comps));
}

DiagramCode move_r2_insert(const DiagramCode& code, Site site1, Site site2, int sign, bool parallel,
                           std::string label_j, std::string label_k) {
  check_full(code, "move_r2_insert");
  if (sign != 1 && sign != -1) throw CodeError("bigon sign must be +1 or -1");
  auto comps = code.components();
  check_site(comps, site1);
  check_site(comps, site2);
  const std::string j = pick_label(code, std::move(label_j), 0);
  std::string k;
  if (label_k.empty()) {
    k = code.fresh_label(0);
    if (k == j) k = code.fresh_label(1);
  } else {
    k = pick_label(code, std::move(label_k), 0);
  }
  if (k == j) throw CodeError("bigon labels must differ");

  std::vector<Pass> over_pair{{PassKind::Over, j, sign}, {PassKind::Over, k, -sign}};
  std::vector<Pass> under_pair = parallel
                                     ? std::vector<Pass>{{PassKind::Under, j, sign}, {PassKind::Under, k, -sign}}
                                     : std::vector<Pass>{{PassKind::Under, k, -sign}, {PassKind::Under, j, sign}};

  // Insert the later site first so the earlier one keeps its meaning.
  const bool same_component = site1.component == site2.component;
  if (same_component && site1.position == site2.position) {
    over_pair.insert(over_pair.end(), under_pair.begin(), under_pair.end());
    insert_at(comps, site1, std::move(over_pair));
  } else if (same_component && site2.position < site1.position) {
    insert_at(comps, site1, std::move(over_pair));
    insert_at(comps, site2, std::move(under_pair));
  } else {
    insert_at(comps, site2, std::move(under_pair));
    insert_at(comps, site1, std::move(over_pair));
  }
  return DiagramCode(std::move(comps));
}

DiagramCode move_detour_shuffle(const DiagramCode& code, const std::string& vlabel, Site site1,
                                Site site2) {
  check_full(code, "move_detour_shuffle");
  const auto& virtuals = code.table().virtuals();
  if (std::none_of(virtuals.begin(), virtuals.end(), [&](const VirtualInfo& v) { return v.label == vlabel; })) {
    throw CodeError("no virtual crossing labelled " + vlabel);
  }
  auto comps = code.components();
  for (auto& c : comps) {
    std::erase_if(c, [&](const Pass& p) { return p.label == vlabel; });
  }
  check_site(comps, site1);
  check_site(comps, site2);
  const Pass v{PassKind::Virtual, vlabel, 0};
  if (site1.component == site2.component && site1.position == site2.position) {
    insert_at(comps, site1, {v, v});
  } else if (site1.component == site2.component && site2.position < site1.position) {
    insert_at(comps, site1, {v});
    insert_at(comps, site2, {v});
  } else {
    insert_at(comps, site2, {v});
    insert_at(comps, site1, {v});
  }
  return DiagramCode(std::move(comps));
}

}  // namespace vknot
