#include "czlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"

namespace czlab {

namespace {

std::vector<Interval> scope_intervals(int L, WeightScope scope) {
  return family_intervals(DyadicIndex::root(), L,
                          scope == WeightScope::dyadic ? CubeFamily::dyadic : CubeFamily::all_intervals);
}

double lr_norm(const GridFunction& g, double r) {
  double acc = 0.0;
  for (double v : g.values()) acc += std::pow(std::fabs(v), r);
  return std::pow(acc * g.cell_measure(), 1.0 / r);
}

// Binary indexed tree over value ranks holding counts and sums.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : cnt_(n + 1, 0), sum_(n + 1, 0.0) {}
  void add(std::size_t i, double v) {
    for (++i; i < cnt_.size(); i += i & (~i + 1)) {
      ++cnt_[i];
      sum_[i] += v;
    }
  }
  // Count and sum over ranks [0, i).
  std::pair<std::size_t, double> prefix(std::size_t i) const {
    std::size_t c = 0;
    double s = 0.0;
    for (; i > 0; i -= i & (~i + 1)) {
      c += cnt_[i];
      s += sum_[i];
    }
    return {c, s};
  }

 private:
  std::vector<std::size_t> cnt_;
  std::vector<double> sum_;
};

GrowthReport growth_protocol(const std::vector<double>& deltas, double m, const std::function<double(double)>& a1) {
  GrowthReport r;
  for (double d : deltas) {
    GrowthPoint p;
    p.delta = d;
    p.a1 = a1(d);
    p.normalized = (1.0 - m * d) * p.a1;
    r.points.push_back(p);
  }
  const double ref = r.points.front().normalized;
  for (std::size_t i = 1; i < r.points.size(); ++i) r.worst_ratio = std::max(r.worst_ratio, r.points[i].normalized / ref);
  return r;
}

}  // namespace

Weight::Weight(GridFunction values) : values_(std::move(values)) {
  for (double v : values_.values())
    if (!(v > 0.0)) throw DomainError("weights must be strictly positive at every cell");
}

WeightScope parse_weight_scope(const std::string& name) {
  if (name == "dyadic") return WeightScope::dyadic;
  if (name == "all" || name == "all-intervals" || name == "all_intervals") return WeightScope::all_intervals;
  throw DomainError("unknown weight scope: " + name);
}

double ap_constant(const Weight& w, double p, WeightScope scope) {
  if (!(p > 1.0)) throw DomainError("ap_constant requires p > 1; use a1_constant for p = 1");
  const double pp = p / (p - 1.0);
  const GridFunction dual = w.values().map([pp](double v) { return std::pow(v, 1.0 - pp); });
  const PrefixSums sw(w.values().values());
  const PrefixSums sd(dual.values());
  double best = 0.0;
  for (const auto& iv : scope_intervals(w.values().resolution(), scope))
    best = std::max(best, sw.mean(iv.begin, iv.end) * std::pow(sd.mean(iv.begin, iv.end), p - 1.0));
  return best;
}

double a1_constant(const GridFunction& w, WeightScope scope) {
  for (double v : w.values())
    if (!(v > 0.0)) throw DomainError("A_1 constant of a weight with a non-positive cell");
  const GridFunction mw = hl_maximal(w, scope == WeightScope::dyadic ? MaximalMode::dyadic : MaximalMode::exact);
  double best = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) best = std::max(best, mw[i] / w[i]);
  return best;
}

double a1_constant(const Weight& w, WeightScope scope) { return a1_constant(w.values(), scope); }

FactorizationReport factorization_check(const Weight& w1, const Weight& w2, double p, WeightScope scope) {
  if (!(p > 1.0)) throw DomainError("factorization requires p > 1");
  GridFunction prod = w1.values().zeros_like();
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = w1[i] * std::pow(w2[i], 1.0 - p);
  FactorizationReport r;
  r.lhs = ap_constant(Weight(prod), p, scope);
  r.rhs = a1_constant(w1) * std::pow(a1_constant(w2), p - 1.0);
  return r;
}

double bmo_norm(const GridFunction& b, WeightScope scope) {
  const std::size_t n = b.size();
  const PrefixSums ps(b.values());
  if (scope == WeightScope::dyadic) {
    double best = 0.0;
    for (const auto& iv : scope_intervals(b.resolution(), scope)) {
      const double mean = ps.mean(iv.begin, iv.end);
      double acc = 0.0;
      for (std::size_t i = iv.begin; i < iv.end; ++i) acc += std::fabs(b[i] - mean);
      best = std::max(best, acc / static_cast<double>(iv.length()));
    }
    return best;
  }
  std::vector<double> sorted(b.values().begin(), b.values().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), b[i]) - sorted.begin());
  double best = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    Fenwick tree(n);
    double total = 0.0;
    for (std::size_t e = a; e < n; ++e) {
      tree.add(rank[e], b[e]);
      total += b[e];
      const auto cnt = static_cast<double>(e - a + 1);
      const double mean = total / cnt;
      const auto cut = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), mean) - sorted.begin());
      const auto [c_lo, s_lo] = tree.prefix(cut);
      const double lo = mean * static_cast<double>(c_lo) - s_lo;
      const double hi = (total - s_lo) - mean * (cnt - static_cast<double>(c_lo));
      best = std::max(best, (lo + hi) / cnt);
    }
  }
  return best;
}

double measured_maximal_norm(const std::vector<GridFunction>& corpus, double r) {
  double best = 0.0;
  for (const auto& g : corpus) {
    const double ng = lr_norm(g, r);
    if (ng == 0.0) continue;
    best = std::max(best, lr_norm(hl_maximal(g), r) / ng);
  }
  return best;
}

double default_norm_bound(double r) {
  if (!(r > 1.0)) throw DomainError("norm bound requires r > 1");
  return 8.0 * r / (r - 1.0);
}

bool RubioReport::pass(double tol) const {
  return min_gap >= -tol && norm_ratio <= 2.0 + tol && a1_ratio <= 1.0 + tol;
}

RubioReport rubio_de_francia(const GridFunction& h, double r, double norm_bound, double tol) {
  if (!(r > 1.0)) throw DomainError("Rubio de Francia requires r > 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (!(norm_bound >= 1.0)) throw DomainError("norm bound must be at least 1");
  for (double v : h.values())
    if (v < 0.0) throw DomainError("Rubio de Francia requires h >= 0");
  RubioReport rep;
  rep.result = h;
  GridFunction term = h;
  const double step = 1.0 / (2.0 * norm_bound);
  double scale = 1.0;
  rep.terms = 1;
  while (true) {
    GridFunction next = hl_maximal(term);
    scale *= step;
    const double peak = next.max_abs() * scale;
    if (peak < tol || rep.terms > 10000) break;
    for (std::size_t i = 0; i < h.size(); ++i) rep.result[i] += scale * next[i];
    term = std::move(next);
    ++rep.terms;
  }
  rep.min_gap = INFINITY;
  for (std::size_t i = 0; i < h.size(); ++i) rep.min_gap = std::min(rep.min_gap, rep.result[i] - h[i]);
  const double nh = lr_norm(h, r);
  rep.norm_ratio = nh == 0.0 ? 0.0 : lr_norm(rep.result, r) / nh;
  const GridFunction mr = hl_maximal(rep.result);
  rep.a1_ratio = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double bound = 2.0 * norm_bound * (rep.result[i] + tol);
    rep.a1_ratio = std::max(rep.a1_ratio, mr[i] / bound);
  }
  return rep;
}

double coifman_rochberg_constant(const GridFunction& mu, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("Coifman-Rochberg requires 0 < delta < 1");
  if (mu.max_abs() == 0.0) throw DomainError("measure must not vanish identically");
  const GridFunction w = hl_maximal(mu).map([delta](double v) { return std::pow(v, delta); });
  return a1_constant(w);
}

GrowthReport coifman_rochberg_check(const GridFunction& mu, const std::vector<double>& sweep, double reference) {
  std::vector<double> deltas{reference};
  deltas.insert(deltas.end(), sweep.begin(), sweep.end());
  return growth_protocol(deltas, 1.0, [&mu](double d) { return coifman_rochberg_constant(mu, d); });
}

double multilinear_cr_constant(const MultiArg& mu, double delta) {
  const auto m = static_cast<double>(mu.count());
  if (!(delta > 0.0 && delta * m < 1.0)) throw DomainError("multilinear Coifman-Rochberg requires 0 < delta < 1/m");
  const GridFunction w = multilinear_maximal(mu).map([delta](double v) { return std::pow(v, delta); });
  return a1_constant(w);
}

GrowthReport multilinear_cr_check(const MultiArg& mu, const std::vector<double>& sweep, double reference) {
  std::vector<double> deltas{reference};
  deltas.insert(deltas.end(), sweep.begin(), sweep.end());
  const GridFunction mm = multilinear_maximal(mu);
  const auto m = static_cast<double>(mu.count());
  for (double d : deltas)
    if (!(d > 0.0 && d * m < 1.0)) throw DomainError("multilinear Coifman-Rochberg requires 0 < delta < 1/m");
  return growth_protocol(deltas, m, [&mm](double d) {
    return a1_constant(mm.map([d](double v) { return std::pow(v, d); }));
  });
}

double weighted_l1_norm(const GridFunction& f, const Weight& w, const DyadicIndex& q) {
  if (!f.same_grid(w.values())) throw ShapeError("function and weight must share a grid");
  const int L = f.resolution();
  require_cube(q, L);
  double acc = 0.0;
  const std::size_t a = q.first_cell(L);
  for (std::size_t i = a; i < a + q.cell_count(L); ++i) acc += std::fabs(f[i]) * w[i];
  return acc * f.cell_measure();
}

SteinReport stein_llogl_check(const Weight& w, const DyadicIndex& q) {
  const GridFunction& v = w.values();
  const int L = v.resolution();
  require_cube(q, L);
  const double avg = average(v, q);
  const std::size_t a = q.first_cell(L);
  const std::size_t n = q.cell_count(L);
  GridFunction local = v.zeros_like();
  SteinReport r;
  for (std::size_t i = a; i < a + n; ++i) {
    local[i] = v[i];
    r.lhs += v[i] * std::log(std::numbers::e + v[i] / avg);
  }
  r.lhs *= v.cell_measure();
  const GridFunction m = hl_maximal(local);
  for (std::size_t i = a; i < a + n; ++i) r.rhs += m[i];
  r.rhs *= v.cell_measure();
  r.ratio = r.lhs / r.rhs;
  return r;
}

Weight make_weight(const std::string& spec, int L) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
  if (parts.empty()) throw DomainError("empty weight spec");
  try {
    if (parts[0] == "const" && parts.size() == 1) return Weight(GridFunction(Cube{}, L).map([](double) { return 1.0; }));
    if (parts[0] == "power" && parts.size() == 2) {
      const double a = std::stod(parts[1]);
      GridFunction w(Cube{}, L);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::pow(std::fabs(w.midpoint(i) - 0.5), a);
      return Weight(w);
    }
    if (parts[0] == "cr" && parts.size() == 3) {
      const double delta = std::stod(parts[1]);
      const auto seed = static_cast<std::uint64_t>(std::stoull(parts[2]));
      if (!(delta > 0.0 && delta < 1.0)) throw DomainError("cr weight requires 0 < delta < 1");
      Rng rng(seed);
      GridFunction g(Cube{}, L);
      const int spikes = 1 + static_cast<int>(rng.below(4));
      for (int s = 0; s < spikes; ++s) g[rng.below(g.size())] += rng.uniform(0.5, 1.0) * static_cast<double>(g.size());
      return Weight(hl_maximal(g).map([delta](double v) { return std::pow(v, delta); }));
    }
  } catch (const DomainError&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed weight spec: " + spec);
  }
  throw DomainError("unknown weight spec: " + spec);
}

}  // namespace czlab
