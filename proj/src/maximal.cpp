#include "czlab/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "czlab/error.hpp"
#include "czlab/rearrangement.hpp"

namespace czlab {

namespace {

void require_same_grid(const std::vector<GridFunction>& fs) {
  for (const auto& g : fs)
    if (!g.same_grid(fs.front())) throw ShapeError("components must share base cube and resolution");
}

// out[x] = max over a <= x < b within [a0, a0+n) of score(a, b).
template <typename Score>
void interval_sup(std::size_t a0, std::size_t n, Score score, std::span<double> out) {
  std::vector<double> suffix(n);
  for (std::size_t a = 0; a < n; ++a) {
    double run = -std::numeric_limits<double>::infinity();
    for (std::size_t b = n; b > a; --b) {
      run = std::max(run, score(a0 + a, a0 + b));
      suffix[b - 1] = run;
    }
    for (std::size_t x = a; x < n; ++x) out[a0 + x] = std::max(out[a0 + x], suffix[x]);
  }
}

GridFunction exact_maximal(const GridFunction& f, const DyadicIndex& q0) {
  const int L = f.resolution();
  const PrefixSums ps(f.abs().values());
  GridFunction out = f.zeros_like();
  interval_sup(q0.first_cell(L), q0.cell_count(L), [&](std::size_t a, std::size_t b) { return ps.mean(a, b); },
               out.values());
  return out;
}

double power_abs(double x, double delta) {
  if (delta == 1.0) return x;
  if (delta == 0.5) return std::sqrt(x);
  if (delta == 0.25) return std::sqrt(std::sqrt(x));
  if (delta == 2.0) return x * x;
  return std::pow(x, delta);
}

}  // namespace

VectorGridFunction::VectorGridFunction(std::vector<GridFunction> components) : components_(std::move(components)) {
  if (components_.empty()) throw ShapeError("vector function needs at least one component");
  require_same_grid(components_);
}

GridFunction VectorGridFunction::pointwise_norm(double q) const {
  if (!(q > 0.0)) throw DomainError("norm exponent must be positive");
  GridFunction out = front().zeros_like();
  for (const auto& g : components_)
    for (std::size_t i = 0; i < g.size(); ++i) out[i] += std::pow(std::fabs(g[i]), q);
  return out.map([q](double v) { return std::pow(v, 1.0 / q); });
}

MaximalMode parse_maximal_mode(const std::string& name) {
  if (name == "exact") return MaximalMode::exact;
  if (name == "fast") return MaximalMode::fast;
  if (name == "dyadic") return MaximalMode::dyadic;
  throw DomainError("unknown maximal mode: " + name);
}

GridFunction family_maximal(const GridFunction& f, const DyadicIndex& q0, CubeFamily family) {
  const int L = f.resolution();
  require_cube(q0, L);
  if (family == CubeFamily::all_intervals) return exact_maximal(f, q0);
  const PrefixSums ps(f.abs().values());
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  for (const auto& iv : family_intervals(q0, L, family)) {
    const double m = ps.mean(iv.begin, iv.end);
    for (std::size_t i = iv.begin; i < iv.end; ++i) vals[i] = std::max(vals[i], m);
  }
  return out;
}

GridFunction hl_maximal(const GridFunction& f, MaximalMode mode) {
  switch (mode) {
    case MaximalMode::exact: return exact_maximal(f, DyadicIndex::root());
    case MaximalMode::fast: return family_maximal(f, DyadicIndex::root(), CubeFamily::shifted);
    case MaximalMode::dyadic: return family_maximal(f, DyadicIndex::root(), CubeFamily::dyadic);
  }
  return exact_maximal(f, DyadicIndex::root());
}

GridFunction dyadic_local_maximal(const GridFunction& f, const DyadicIndex& q0) {
  return family_maximal(f, q0, CubeFamily::dyadic);
}

GridFunction m_delta(const GridFunction& f, double delta, MaximalMode mode) {
  if (!(delta > 0.0)) throw DomainError("m_delta requires delta > 0");
  if (delta == 1.0) return hl_maximal(f, mode);
  const GridFunction p = f.map([delta](double v) { return power_abs(std::fabs(v), delta); });
  return hl_maximal(p, mode).map([delta](double v) { return std::pow(v, 1.0 / delta); });
}

double sharp_inner_infimum(std::span<const double> values, double delta) {
  if (!(delta > 0.0)) throw DomainError("sharp maximal requires delta > 0");
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  if (s.front() == s.back()) return 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  auto objective = [&](double c) {
    double acc = 0.0;
    for (double v : s) acc += power_abs(std::fabs(v - c), delta);
    return acc * inv_n;
  };
  if (delta == 1.0) return objective(median_of(s));
  if (delta < 1.0) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && s[i] == s[i - 1]) continue;
      best = std::min(best, objective(s[i]));
    }
    return std::pow(best, 1.0 / delta);
  }
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = s.front();
  double hi = s.back();
  const double tol = 1e-10 * std::max(1.0, hi - lo);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = objective(x2);
    }
  }
  return std::pow(std::min({f1, f2, objective(0.5 * (lo + hi))}), 1.0 / delta);
}

GridFunction sharp_maximal(const GridFunction& f, double delta, CubeFamily family,
                           std::optional<DyadicIndex> local_root) {
  if (!(delta > 0.0)) throw DomainError("sharp maximal requires delta > 0");
  const DyadicIndex q0 = local_root.value_or(DyadicIndex::root());
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  for (const auto& iv : family_intervals(q0, f.resolution(), family)) {
    const double o = sharp_inner_infimum(f.values().subspan(iv.begin, iv.length()), delta);
    for (std::size_t i = iv.begin; i < iv.end; ++i) vals[i] = std::max(vals[i], o);
  }
  return out;
}

GridFunction iterated_maximal(const GridFunction& f, int k, MaximalMode mode) {
  if (k < 1) throw DomainError("iterated maximal requires k >= 1");
  GridFunction g = hl_maximal(f, mode);
  for (int i = 1; i < k; ++i) g = hl_maximal(g, mode);
  return g;
}

GridFunction vector_maximal(const VectorGridFunction& f, double q, MaximalMode mode) {
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("vector maximal requires 1 < q < inf");
  GridFunction out = f.front().zeros_like();
  for (const auto& g : f.components()) {
    const GridFunction mg = hl_maximal(g, mode);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += std::pow(mg[i], q);
  }
  return out.map([q](double v) { return std::pow(v, 1.0 / q); });
}

GridFunction multilinear_maximal(const MultiArg& fvec, MaximalMode mode) {
  const auto& args = fvec.components();
  const GridFunction& f0 = fvec.front();
  if (args.size() == 1) return hl_maximal(f0, mode);
  std::vector<PrefixSums> ps;
  ps.reserve(args.size());
  for (const auto& g : args) ps.emplace_back(g.abs().values());
  auto score = [&](std::size_t a, std::size_t b) {
    double p = 1.0;
    for (const auto& s : ps) p *= s.mean(a, b);
    return p;
  };
  GridFunction out = f0.zeros_like();
  if (mode == MaximalMode::exact) {
    interval_sup(0, f0.size(), score, out.values());
    return out;
  }
  const auto family = mode == MaximalMode::fast ? CubeFamily::shifted : CubeFamily::dyadic;
  auto vals = out.values();
  for (const auto& iv : family_intervals(DyadicIndex::root(), f0.resolution(), family)) {
    const double m = score(iv.begin, iv.end);
    for (std::size_t i = iv.begin; i < iv.end; ++i) vals[i] = std::max(vals[i], m);
  }
  return out;
}

}  // namespace czlab
