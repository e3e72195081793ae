#include "czlab/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "czlab/error.hpp"

namespace czlab {

namespace {

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("oscillation parameter must lie in (0,1)");
}

std::size_t excluded_count(double lambda, std::size_t n) {
  return static_cast<std::size_t>(std::floor(lambda * static_cast<double>(n)));
}

}  // namespace

double decreasing_rearrangement(const GridFunction& f, const DyadicIndex& q, double s) {
  const auto vals = cube_values(f, q);
  const double qmeasure = f.cell_measure() * static_cast<double>(vals.size());
  if (!(s >= 0.0) || s > qmeasure * (1.0 + 1e-15)) throw DomainError("rearrangement argument outside [0, |Q|]");
  std::vector<double> a(vals.size());
  std::transform(vals.begin(), vals.end(), a.begin(), [](double v) { return std::fabs(v); });
  std::sort(a.begin(), a.end(), std::greater<>());
  // Cells allowed strictly above rho: the largest k with k * cell <= s.
  const double ratio = s / f.cell_measure();
  auto k = static_cast<std::size_t>(std::floor(ratio * (1.0 + 1e-14)));
  if (k >= a.size()) return 0.0;
  return a[k];
}

double median_of(std::span<const double> values) {
  if (values.empty()) throw InsufficientData("median of an empty sample");
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  // Lower median: the smallest value with at most n/2 samples strictly on each side.
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && s[j] == s[i]) ++j;
    const std::size_t below = i;
    const std::size_t above = n - j;
    if (2 * below <= n && 2 * above <= n) return s[i];
    i = j;
  }
  return s[(n - 1) / 2];
}

double median(const GridFunction& f, const DyadicIndex& q) { return median_of(cube_values(f, q)); }

double oscillation_sorted(std::span<const double> sorted, double lambda) {
  require_lambda(lambda);
  const std::size_t n = sorted.size();
  if (n == 0) return 0.0;
  const std::size_t m = n - excluded_count(lambda, n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + m <= n; ++i) best = std::min(best, sorted[i + m - 1] - sorted[i]);
  return 0.5 * best;
}

double oscillation_of(std::span<const double> values, double lambda) {
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  return oscillation_sorted(s, lambda);
}

double oscillation(const GridFunction& f, const DyadicIndex& q, double lambda) {
  return oscillation_of(cube_values(f, q), lambda);
}

std::vector<double> dyadic_oscillations(const GridFunction& f, const DyadicIndex& q0, double lambda) {
  require_lambda(lambda);
  const int L = f.resolution();
  require_cube(q0, L);
  const std::size_t a0 = q0.first_cell(L);
  const std::size_t n = q0.cell_count(L);
  const int depth = L - q0.level;
  // Bottom-up merge sort: after processing level d every block of 2^(depth-d) cells is sorted.
  std::vector<double> buf(f.values().begin() + static_cast<std::ptrdiff_t>(a0),
                          f.values().begin() + static_cast<std::ptrdiff_t>(a0 + n));
  std::vector<double> tmp(n);
  std::vector<std::vector<double>> per_level(static_cast<std::size_t>(depth) + 1);
  for (int d = depth; d >= 0; --d) {
    const std::size_t w = std::size_t{1} << (depth - d);
    if (w > 1) {
      for (std::size_t s = 0; s < n; s += w)
        std::merge(buf.begin() + static_cast<std::ptrdiff_t>(s),
                   buf.begin() + static_cast<std::ptrdiff_t>(s + w / 2),
                   buf.begin() + static_cast<std::ptrdiff_t>(s + w / 2),
                   buf.begin() + static_cast<std::ptrdiff_t>(s + w), tmp.begin() + static_cast<std::ptrdiff_t>(s));
      buf.swap(tmp);
    }
    auto& row = per_level[static_cast<std::size_t>(d)];
    row.resize(n / w);
    for (std::size_t s = 0, j = 0; s < n; s += w, ++j)
      row[j] = oscillation_sorted(std::span<const double>(buf).subspan(s, w), lambda);
  }
  std::vector<double> out;
  out.reserve(2 * n - 1);
  for (const auto& row : per_level) out.insert(out.end(), row.begin(), row.end());
  return out;
}

GridFunction local_sharp_maximal(const GridFunction& f, const DyadicIndex& q0, double lambda,
                                 CubeFamily family) {
  require_lambda(lambda);
  const int L = f.resolution();
  require_cube(q0, L);
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  if (family == CubeFamily::dyadic) {
    const auto osc = dyadic_oscillations(f, q0, lambda);
    const std::size_t a0 = q0.first_cell(L);
    const std::size_t n = q0.cell_count(L);
    std::size_t idx = 0;
    for (std::size_t w = n; w >= 1; w /= 2) {
      for (std::size_t s = 0; s < n; s += w, ++idx)
        for (std::size_t i = s; i < s + w; ++i) vals[a0 + i] = std::max(vals[a0 + i], osc[idx]);
      if (w == 1) break;
    }
    return out;
  }
  for (const auto& iv : family_intervals(q0, L, family)) {
    const double o = oscillation_of(f.values().subspan(iv.begin, iv.length()), lambda);
    for (std::size_t i = iv.begin; i < iv.end; ++i) vals[i] = std::max(vals[i], o);
  }
  return out;
}

}  // namespace czlab
