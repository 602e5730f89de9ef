#include "vknot/invariants.hpp"

#include <algorithm>
#include <map>

namespace vknot {

namespace {

void require_full(const DiagramCode& code, const char* op) {
  if (!code.is_full()) throw CodeError(std::string(op) + " expects a full code");
}

void require_knot(const DiagramCode& code, const char* op) {
  if (code.component_count() != 1) {
    throw CodeError(std::string(op) + " is defined for single-component codes only");
  }
}

std::size_t classical_between(const Component& c, std::size_t from, std::size_t to) {
  std::size_t n = 0;
  for (std::size_t i = from + 1; i < to; ++i) n += c[i].is_classical() ? 1 : 0;
  return n;
}

std::size_t virtual_between(const Component& c, std::size_t from, std::size_t to) {
  std::size_t n = 0;
  for (std::size_t i = from + 1; i < to; ++i) n += c[i].is_classical() ? 0 : 1;
  return n;
}

std::size_t classical_in(const Component& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const Pass& p) { return p.is_classical(); }));
}

}  // namespace

OrientationChoice OrientationChoice::from_bits(std::size_t components, unsigned long long bits) {
  std::vector<bool> r(components);
  for (std::size_t c = 0; c < components; ++c) r[c] = ((bits >> c) & 1ULL) != 0;
  return OrientationChoice(std::move(r));
}

std::vector<std::vector<int>> arc_colors(const DiagramCode& code, const ProperColoring& coloring) {
  std::vector<std::vector<int>> colors(code.component_count());
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    const auto& comp = code.component(c);
    int color = coloring.first_arc.at(c);
    colors[c].reserve(comp.size());
    for (const auto& p : comp) {
      colors[c].push_back(color);
      if (p.is_classical()) color ^= 1;
    }
  }
  return colors;
}

std::vector<std::string> odd_crossings(const DiagramCode& code) {
  require_knot(code, "odd_crossings");
  const auto& comp = code.component(0);
  std::vector<std::string> odd;
  for (const auto& x : code.table().crossings()) {
    if (classical_between(comp, x.first.position, x.second.position) % 2 == 1) odd.push_back(x.label);
  }
  return odd;
}

int j_invariant(const DiagramCode& code) {
  require_knot(code, "j_invariant");
  require_full(code, "j_invariant");
  const auto& comp = code.component(0);
  int j = 0;
  for (const auto& x : code.table().crossings()) {
    if (classical_between(comp, x.first.position, x.second.position) % 2 == 1) j += x.sign;
  }
  return j;
}

int writhe(const DiagramCode& code, const OrientationChoice& orientation) {
  require_full(code, "writhe");
  if (orientation.size() != code.component_count()) {
    throw CodeError("orientation choice length differs from component count");
  }
  int w = 0;
  for (const auto& x : code.table().crossings()) {
    const bool flips = orientation.reversed(x.first.component) != orientation.reversed(x.second.component);
    w += flips ? -x.sign : x.sign;
  }
  return w;
}

int writhe(const DiagramCode& code) { return writhe(code, OrientationChoice(code.component_count())); }

LaurentPoly orientation_sum(const DiagramCode& code) {
  require_full(code, "orientation_sum");
  const std::size_t n = code.component_count();
  if (n >= 63) throw CodeError("too many components to enumerate orientations");
  LaurentPoly sum;
  for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
    sum += LaurentPoly::monomial(1, writhe(code, OrientationChoice::from_bits(n, bits)));
  }
  return sum;
}

std::vector<ProperColoring> proper_colorings(const DiagramCode& code) {
  const std::size_t n = code.component_count();
  for (const auto& comp : code.components()) {
    if (classical_in(comp) % 2 == 1) return {};
  }
  if (n >= 63) throw CodeError("too many components to enumerate colorings");
  std::vector<ProperColoring> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
    ProperColoring pc;
    pc.first_arc.resize(n);
    for (std::size_t c = 0; c < n; ++c) pc.first_arc[c] = static_cast<int>((bits >> c) & 1ULL);
    out.push_back(std::move(pc));
  }
  return out;
}

LaurentPoly binary_bracket(const DiagramCode& code) {
  require_full(code, "binary_bracket");
  const auto& table = code.table();
  LaurentPoly sum;
  for (const auto& coloring : proper_colorings(code)) {
    const auto colors = arc_colors(code, coloring);
    int exponent = 0;
    for (const auto& x : table.crossings()) {
      const int over_in = colors[x.over.component][x.over.position];
      const int under_in = colors[x.under.component][x.under.position];
      // Different incoming colors select the oriented smoothing.
      const bool oriented = over_in != under_in;
      exponent += oriented ? x.sign : -x.sign;
    }
    sum += LaurentPoly::monomial(1, exponent);
  }
  return sum;
}

LaurentPoly inv_normalized(const DiagramCode& code) {
  return binary_bracket(code).shifted(-writhe(code));
}

RationalExpr lambda_invariant(const DiagramCode& code) {
  return ratio_reduce(binary_bracket(code), orientation_sum(code));
}

std::vector<std::vector<Rational>> linking_matrix(const DiagramCode& code) {
  require_full(code, "linking_matrix");
  const std::size_t n = code.component_count();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& x : code.table().crossings()) {
    const std::size_t a = x.first.component;
    const std::size_t b = x.second.component;
    if (a == b) {
      m[a][a] += x.sign;
    } else {
      m[a][b] += Rational(x.sign, 2);
      m[b][a] += Rational(x.sign, 2);
    }
  }
  return m;
}

bool NonclassicalityReport::has(const std::string& flag) const {
  return std::any_of(flags.begin(), flags.end(), [&](const ClassificationFlag& f) { return f.flag == flag; });
}

NonclassicalityReport nonclassicality_report(const DiagramCode& code) {
  require_full(code, "nonclassicality_report");
  NonclassicalityReport report;
  report.lambda = lambda_invariant(code);
  if (code.component_count() == 1) {
    report.j = j_invariant(code);
    if (*report.j != 0) {
      const std::string why = "J=" + std::to_string(*report.j);
      report.flags.push_back({"non-trivial", why});
      report.flags.push_back({"non-classical", why});
      report.flags.push_back({"chiral", why});
    }
    return report;
  }
  if (!report.lambda.is_one()) {
    const std::string why = "Lambda=" + report.lambda.to_string();
    report.flags.push_back({"non-trivial", why});
    report.flags.push_back({"non-classical", why});
  }
  const RationalExpr mirrored = report.lambda.invert_variable();
  if (!(mirrored == report.lambda)) {
    report.flags.push_back({"chiral", "Lambda(A)=" + report.lambda.to_string() +
                                          " differs from Lambda(A^-1)=" + mirrored.to_string()});
  }
  return report;
}

std::vector<std::string> parity_lint(const DiagramCode& code) {
  require_knot(code, "parity_lint");
  const auto& comp = code.component(0);
  std::vector<std::string> out;
  for (const auto& x : code.table().crossings()) {
    const auto cl = classical_between(comp, x.first.position, x.second.position);
    const auto vi = virtual_between(comp, x.first.position, x.second.position);
    if (cl % 2 != vi % 2) out.push_back(x.label);
  }
  return out;
}

}  // namespace vknot
