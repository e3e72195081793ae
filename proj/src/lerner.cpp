#include "czlab/lerner.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "czlab/error.hpp"
#include "czlab/rearrangement.hpp"

namespace czlab {

namespace {

using json = nlohmann::json;

// Selects the maximal dyadic P strictly inside q with 2|P cap E| >= |P|.
void select_maximal(const DyadicIndex& q, int L, const std::vector<std::size_t>& prefix,
                    std::vector<DyadicIndex>& out) {
  if (q.level == L) return;
  for (int c = 0; c < 2; ++c) {
    const DyadicIndex p = q.child(c);
    const std::size_t a = p.first_cell(L);
    const std::size_t w = p.cell_count(L);
    const std::size_t hits = prefix[a + w] - prefix[a];
    if (hits == 0) continue;
    if (2 * hits >= w)
      out.push_back(p);
    else
      select_maximal(p, L, prefix, out);
  }
}

}  // namespace

std::size_t SparseFamily::cube_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.size();
  return n;
}

void rebuild_sets(SparseFamily& fam) {
  fam.omega.clear();
  fam.ejk.clear();
  for (const auto& gen : fam.levels) {
    CellSet s(fam.resolution);
    for (const auto& q : gen) s.insert_cube(q);
    fam.omega.push_back(std::move(s));
  }
  for (std::size_t k = 0; k < fam.levels.size(); ++k) {
    std::vector<CellSet> row;
    for (const auto& q : fam.levels[k]) {
      CellSet e = cube_cells(q, fam.resolution);
      if (k + 1 < fam.omega.size()) e = e.minus(fam.omega[k + 1]);
      row.push_back(std::move(e));
    }
    fam.ejk.push_back(std::move(row));
  }
}

CellSet exceptional_set(const GridFunction& f, const DyadicIndex& q) {
  const int L = f.resolution();
  const auto vals = cube_values(f, q);
  const double m = median_of(vals);
  const double w = oscillation_of(vals, 0.25);
  CellSet e(f.base(), L);
  const std::size_t a = q.first_cell(L);
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (std::fabs(vals[i] - m) > 2.0 * w) e.insert(a + i);
  return e;
}

SparseFamily lerner_decompose(const GridFunction& f, const DyadicIndex& q0) {
  const int L = f.resolution();
  require_cube(q0, L);
  SparseFamily fam;
  fam.root = q0;
  fam.resolution = L;
  std::vector<DyadicIndex> frontier{q0};
  std::vector<std::size_t> prefix(f.size() + 1, 0);
  while (!frontier.empty()) {
    std::vector<DyadicIndex> next;
    for (const auto& q : frontier) {
      if (q.level == L) continue;
      const CellSet e = exceptional_set(f, q);
      const std::size_t a = q.first_cell(L);
      const std::size_t w = q.cell_count(L);
      for (std::size_t i = a; i < a + w; ++i) prefix[i + 1] = prefix[i] + (e.contains(i) ? 1 : 0);
      if (prefix[a + w] == prefix[a]) continue;
      select_maximal(q, L, prefix, next);
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [L](const DyadicIndex& x, const DyadicIndex& y) { return x.first_cell(L) < y.first_cell(L); });
    fam.levels.push_back(next);
    frontier = std::move(next);
  }
  rebuild_sets(fam);
  return fam;
}

bool FamilyReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

FamilyReport verify_family(const GridFunction& f, const SparseFamily& fam) {
  const int L = fam.resolution;
  if (L != f.resolution()) throw ShapeError("family and function resolutions differ");
  PropertyResult inside{"cubes inside root", true, 0.0};
  PropertyResult disjoint{"generation disjoint", true, 0.0};
  PropertyResult nested{"omega nested", true, 0.0};
  PropertyResult half{"half-measure children", true, 0.0};
  PropertyResult owner{"owned fraction", true, 0.0};
  PropertyResult owners_disjoint{"owned sets disjoint", true, 0.0};
  const std::size_t n = std::size_t{1} << L;
  std::vector<std::vector<std::uint32_t>> cover(fam.levels.size(), std::vector<std::uint32_t>(n, 0));
  for (std::size_t k = 0; k < fam.levels.size(); ++k) {
    for (const auto& q : fam.levels[k]) {
      if (!q.valid() || q.level > L || !fam.root.contains(q) || q == fam.root) {
        inside.pass = false;
        continue;
      }
      const std::size_t a = q.first_cell(L);
      for (std::size_t i = a; i < a + q.cell_count(L); ++i) ++cover[k][i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (cover[k][i] > 1) {
        disjoint.pass = false;
        disjoint.worst = std::max(disjoint.worst, static_cast<double>(cover[k][i]));
      }
      if (k > 0 && cover[k][i] > 0 && cover[k - 1][i] == 0) nested.pass = false;
    }
  }
  std::vector<std::uint32_t> owned(n, 0);
  for (std::size_t k = 0; k < fam.levels.size() && inside.pass; ++k) {
    for (const auto& q : fam.levels[k]) {
      const std::size_t a = q.first_cell(L);
      const std::size_t w = q.cell_count(L);
      std::size_t inner = 0;
      for (std::size_t i = a; i < a + w; ++i) {
        const bool below = k + 1 < cover.size() && cover[k + 1][i] > 0;
        if (below)
          ++inner;
        else
          ++owned[i];
      }
      const double frac = static_cast<double>(inner) / static_cast<double>(w);
      half.worst = std::max(half.worst, frac);
      if (2 * inner > w) half.pass = false;
      const std::size_t own = w - inner;
      const double ratio = own == 0 ? INFINITY : static_cast<double>(w) / static_cast<double>(own);
      owner.worst = std::max(owner.worst, ratio);
      if (w > 2 * own) owner.pass = false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (owned[i] > 1) {
      owners_disjoint.pass = false;
      owners_disjoint.worst = std::max(owners_disjoint.worst, static_cast<double>(owned[i]));
    }
  FamilyReport r;
  r.properties = {inside, disjoint, nested, half, owner, owners_disjoint};
  return r;
}

BoundReport pointwise_bound_check(const GridFunction& f, const DyadicIndex& q0, const SparseFamily& fam, double c1,
                                  double c2) {
  const int L = f.resolution();
  require_cube(q0, L);
  const double m = median(f, q0);
  const GridFunction sharp = local_sharp_maximal(f, q0, 0.25);
  GridFunction sum = f.zeros_like();
  for (const auto& gen : fam.levels)
    for (const auto& q : gen) {
      const double w = oscillation(f, q.parent(), 0.125);
      const std::size_t a = q.first_cell(L);
      for (std::size_t i = a; i < a + q.cell_count(L); ++i) sum[i] += w;
    }
  BoundReport r;
  r.max_excess = -INFINITY;
  r.min_slack = INFINITY;
  const std::size_t a0 = q0.first_cell(L);
  const std::size_t n = q0.cell_count(L);
  double total = 0.0;
  for (std::size_t i = a0; i < a0 + n; ++i) {
    const double lhs = std::fabs(f[i] - m);
    const double rhs = c1 * sharp[i] + c2 * sum[i];
    const double diff = lhs - rhs;
    r.max_excess = std::max(r.max_excess, diff);
    r.min_slack = std::min(r.min_slack, -diff);
    total += -diff;
    if (diff > 1e-12 * std::max(1.0, std::fabs(lhs))) ++r.violations;
  }
  r.mean_slack = total / static_cast<double>(n);
  return r;
}

std::string family_to_json(const SparseFamily& fam) {
  json j;
  j["root"] = {fam.root.level, fam.root.position};
  j["resolution"] = fam.resolution;
  j["levels"] = json::array();
  for (const auto& gen : fam.levels) {
    json row = json::array();
    for (const auto& q : gen) row.push_back({q.level, q.position});
    j["levels"].push_back(row);
  }
  return j.dump();
}

SparseFamily family_from_json(const std::string& text) {
  SparseFamily fam;
  try {
    const json j = json::parse(text);
    fam.root = {j.at("root").at(0).get<int>(), j.at("root").at(1).get<std::int64_t>()};
    fam.resolution = j.at("resolution").get<int>();
    for (const auto& row : j.at("levels")) {
      std::vector<DyadicIndex> gen;
      for (const auto& q : row) gen.push_back({q.at(0).get<int>(), q.at(1).get<std::int64_t>()});
      fam.levels.push_back(std::move(gen));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("sparse family JSON: ") + e.what());
  }
  for (const auto& gen : fam.levels)
    for (const auto& q : gen) require_cube(q, fam.resolution);
  rebuild_sets(fam);
  return fam;
}

}  // namespace czlab
