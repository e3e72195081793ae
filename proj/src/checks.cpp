#include "czlab/checks.hpp"

#include <algorithm>
#include <cmath>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/rearrangement.hpp"
#include "czlab/singular.hpp"

namespace czlab {

namespace {

double weighted_power_norm(const GridFunction& g, const Weight& w, double power) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += std::pow(std::fabs(g[i]), power) * w[i];
  return acc * g.cell_measure();
}

CfReport finish(double lhs, double rhs, double ap, double normalizer) {
  CfReport r{lhs, rhs, ap, normalizer, 0.0};
  r.ratio = lhs == 0.0 ? 0.0 : lhs / (normalizer * rhs);
  return r;
}

double max_ratio(const GridFunction& lhs, const GridFunction& rhs) {
  double best = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (rhs[i] > 0.0)
      best = std::max(best, std::fabs(lhs[i]) / rhs[i]);
    else if (std::fabs(lhs[i]) > 1e-12)
      return INFINITY;
  }
  return best;
}

// sup over dyadic cubes of omega_lambda(g; Q) / (avg_Q a)^power.
double cube_oscillation_ratio(const GridFunction& g, const GridFunction& a, double lambda, double power) {
  const auto osc = dyadic_oscillations(g, DyadicIndex::root(), lambda);
  const PrefixSums ps(a.abs().values());
  const std::size_t n = g.size();
  double best = 0.0;
  std::size_t idx = 0;
  for (std::size_t w = n;; w /= 2) {
    for (std::size_t s = 0; s < n; s += w, ++idx) {
      const double avg = ps.mean(s, s + w);
      if (avg > 0.0)
        best = std::max(best, osc[idx] / std::pow(avg, power));
      else if (osc[idx] > 1e-12)
        return INFINITY;
    }
    if (w == 1) break;
  }
  return best;
}

}  // namespace

CfOperator parse_cf_operator(const std::string& name) {
  if (name == "tstar") return CfOperator::tstar;
  if (name == "veccz") return CfOperator::veccz;
  if (name == "multilinear-model") return CfOperator::multilinear_model;
  if (name == "square") return CfOperator::square;
  throw DomainError("unknown operator id: " + name);
}

std::string cf_operator_name(CfOperator op) {
  switch (op) {
    case CfOperator::tstar: return "tstar";
    case CfOperator::veccz: return "veccz";
    case CfOperator::multilinear_model: return "multilinear-model";
    case CfOperator::square: return "square";
  }
  return "?";
}

CfReport cf_local_check(CfOperator op, const VectorGridFunction& args, const Weight& w, double q) {
  const double ap = ap_constant(w, q);
  const double normalizer = std::exp2(q) * ap;
  const GridFunction& f = args.front();
  const DyadicIndex root = DyadicIndex::root();
  switch (op) {
    case CfOperator::tstar:
      return finish(weighted_l1_norm(maximal_singular(f), w, root), weighted_l1_norm(hl_maximal(f), w, root), ap,
                    normalizer);
    case CfOperator::veccz:
      return finish(weighted_l1_norm(vector_cz(args, 2.0), w, root),
                    weighted_l1_norm(hl_maximal(args.pointwise_norm(2.0)), w, root), ap, normalizer);
    case CfOperator::multilinear_model: {
      if (args.count() < 2) throw ShapeError("bilinear model needs two arguments");
      const MultiArg pair(std::vector<GridFunction>{args[0], args[1]});
      return finish(weighted_l1_norm(bilinear_model(args[0], args[1]), w, root),
                    weighted_l1_norm(multilinear_maximal(pair), w, root), ap, normalizer);
    }
    case CfOperator::square:
      return finish(weighted_power_norm(dyadic_square(f, root), w, 2.0), weighted_power_norm(hl_maximal(f), w, 2.0),
                    ap, normalizer);
  }
  return {};
}

CfReport cf_commutator_check(const GridFunction& b, const GridFunction& f, const Weight& w, double q, int k) {
  if (k < 0) throw DomainError("commutator order must be >= 0");
  const double ap = ap_constant(w, q);
  const DyadicIndex root = DyadicIndex::root();
  const double bmo = k == 0 ? 1.0 : std::pow(bmo_norm(b), k);
  const double normalizer = bmo * std::exp2((k + 1) * q) * std::pow(ap, k + 1);
  return finish(weighted_l1_norm(higher_commutator(b, f, k), w, root),
                weighted_l1_norm(iterated_maximal(f, k + 1), w, root), ap, normalizer);
}

CfReport previo_check(const GridFunction& f, const Weight& w, double q, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("previo check requires 0 < delta < 1");
  const double ap = ap_constant(w, q);
  const DyadicIndex root = DyadicIndex::root();
  const double m = median(f, root);
  const GridFunction dev = f.map([m](double v) { return std::fabs(v - m); });
  return finish(weighted_l1_norm(dev, w, root), weighted_l1_norm(sharp_maximal(f, delta), w, root), ap,
                std::exp2(q) * ap);
}

double weak_norm(std::span<const double> values, double p) {
  std::vector<double> s(values.size());
  std::transform(values.begin(), values.end(), s.begin(), [](double v) { return std::fabs(v); });
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto n = static_cast<double>(s.size());
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    best = std::max(best, s[i] * std::pow(static_cast<double>(i + 1) / n, 1.0 / p));
  return best;
}

KolmogorovReport kolmogorov_check(const GridFunction& g, double q, double p, const DyadicIndex& cube) {
  if (!(q > 0.0 && q < p)) throw DomainError("Kolmogorov check requires 0 < q < p");
  const auto vals = cube_values(g, cube);
  KolmogorovReport r;
  double acc = 0.0;
  for (double v : vals) acc += std::pow(std::fabs(v), q);
  r.lhs = std::pow(acc / static_cast<double>(vals.size()), 1.0 / q);
  r.weak_norm = weak_norm(vals, p);
  r.constant = std::pow(p / (p - q), 1.0 / q);
  return r;
}

WeakLLogLReport weak_llogl_check(const GridFunction& b, const GridFunction& f, const std::vector<double>& lambda_grid) {
  const GridFunction c = commutator(b, f).kernel_form;
  WeakLLogLReport r;
  for (double lam : lambda_grid) {
    if (!(lam > 0.0)) throw DomainError("lambda must be positive");
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (std::fabs(c[i]) > lam) lhs += 1.0;
      const double t = std::fabs(f[i]) / lam;
      rhs += t * (1.0 + std::max(0.0, std::log(t > 0.0 ? t : 1.0)));
    }
    const double ratio = lhs == 0.0 ? 0.0 : lhs / rhs;
    r.lambda.push_back(lam);
    r.ratio.push_back(ratio);
    r.sup_ratio = std::max(r.sup_ratio, ratio);
  }
  return r;
}

std::vector<double> default_lambda_grid(const GridFunction& b, const GridFunction& f, std::size_t points) {
  const GridFunction c = commutator(b, f).kernel_form;
  std::vector<double> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = std::fabs(c[i]);
  std::sort(a.begin(), a.end());
  const double lo = std::max(a[a.size() / 2], 1e-12);
  const double hi = std::max(a.back(), lo * 2.0);
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(points - 1));
  return g;
}

const std::vector<std::string>& domination_ids() {
  static const std::vector<std::string> ids{"sharp-local", "sharp-power", "sharp-tstar", "sharp-veccz", "sharp-multilinear", "sharp-commutator", "square-cubes", "square-local", "vecmax-cubes"};
  return ids;
}

double domination_ratio(const std::string& id, std::uint64_t seed, int L) {
  const GridFunction f = haar_family(seed, L);
  const DyadicIndex root = DyadicIndex::root();
  if (id == "sharp-local") return max_ratio(local_sharp_maximal(f, root, 0.125), sharp_maximal(f, 0.5));
  if (id == "sharp-power") return max_ratio(sharp_maximal(m_delta(f, 0.5, MaximalMode::dyadic), 0.25), sharp_maximal(f, 0.5));
  if (id == "sharp-tstar") return max_ratio(sharp_maximal(maximal_singular(f), 0.5), hl_maximal(f));
  if (id == "sharp-veccz") {
    const VectorGridFunction fs = haar_vector(seed, L, 4);
    return max_ratio(sharp_maximal(vector_cz(fs, 2.0), 0.5), hl_maximal(fs.pointwise_norm(2.0)));
  }
  if (id == "sharp-multilinear") {
    const VectorGridFunction fs = haar_vector(seed, L, 2);
    return max_ratio(sharp_maximal(bilinear_model(fs[0], fs[1]), 0.25), multilinear_maximal(fs));
  }
  if (id == "sharp-commutator") {
    const GridFunction b = log_symbol(L);
    const double bmo = bmo_norm(b);
    const GridFunction lhs = sharp_maximal(higher_commutator(b, f, 1), 0.25);
    const GridFunction a = m_delta(hilbert_transform(f), 0.5, MaximalMode::dyadic);
    const GridFunction m2 = iterated_maximal(f, 2);
    GridFunction rhs = f.zeros_like();
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = bmo * (a[i] + m2[i]);
    return max_ratio(lhs, rhs);
  }
  if (id == "square-cubes") {
    const GridFunction s2 = dyadic_square(f, root).map([](double v) { return v * v; });
    return cube_oscillation_ratio(s2, f, 0.125, 2.0);
  }
  if (id == "square-local") {
    const GridFunction s2 = dyadic_square(f, root).map([](double v) { return v * v; });
    return max_ratio(local_sharp_maximal(s2, root, 0.125), hl_maximal(f).map([](double v) { return v * v; }));
  }
  if (id == "vecmax-cubes") {
    const VectorGridFunction fs = haar_vector(seed, L, 4);
    const GridFunction mq = vector_maximal(fs, 2.0, MaximalMode::dyadic).map([](double v) { return v * v; });
    return cube_oscillation_ratio(mq, fs.pointwise_norm(2.0), 0.125, 2.0);
  }
  throw DomainError("unknown inequality id: " + id);
}

bool DominationReport::pass() const {
  if (sup_ratio.empty()) return false;
  for (double r : sup_ratio)
    if (!std::isfinite(r) || !(r > 0.0)) return false;
  return spread < 2.0;
}

DominationReport pointwise_domination_report(const std::string& id, const std::vector<std::uint64_t>& seeds,
                                             const std::vector<int>& levels) {
  const auto& ids = domination_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw DomainError("unknown inequality id: " + id);
  DominationReport r;
  r.id = id;
  r.levels = levels;
  for (int L : levels) {
    double sup = 0.0;
    for (auto s : seeds) sup = std::max(sup, domination_ratio(id, s, L));
    r.sup_ratio.push_back(sup);
  }
  const auto [lo, hi] = std::minmax_element(r.sup_ratio.begin(), r.sup_ratio.end());
  r.spread = *lo > 0.0 ? *hi / *lo : INFINITY;
  return r;
}

}  // namespace czlab
