#include "czlab/decay.hpp"

#include <algorithm>
#include <cmath>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/maximal.hpp"
#include "czlab/rearrangement.hpp"
#include "czlab/singular.hpp"
#include "czlab/weights.hpp"

namespace czlab {

double RatioSample::phi(double t) const {
  const auto above = ratios.end() - std::upper_bound(ratios.begin(), ratios.end(), t);
  return static_cast<double>(above) / static_cast<double>(cells);
}

RatioSample cell_ratios(const GridFunction& t1f, const GridFunction& t2f, const DyadicIndex& q) {
  if (!t1f.same_grid(t2f)) throw ShapeError("operator outputs must share a grid");
  const int L = t1f.resolution();
  require_cube(q, L);
  RatioSample s;
  const std::size_t a = q.first_cell(L);
  s.cells = q.cell_count(L);
  std::size_t escaped = 0;
  for (std::size_t i = a; i < a + s.cells; ++i) {
    const double num = std::fabs(t1f[i]);
    const double den = std::fabs(t2f[i]);
    if (den == 0.0) {
      if (num == 0.0)
        s.ratios.push_back(0.0);
      else
        ++escaped;
      continue;
    }
    s.ratios.push_back(num / den);
  }
  std::sort(s.ratios.begin(), s.ratios.end());
  s.escaped_fraction = static_cast<double>(escaped) / static_cast<double>(s.cells);
  return s;
}

LevelSetResult level_set_ratio(const GridFunction& t1f, const GridFunction& t2f, const DyadicIndex& q,
                               const std::vector<double>& t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
      throw DomainError("t grid must be positive and increasing");
  const RatioSample s = cell_ratios(t1f, t2f, q);
  LevelSetResult r;
  r.escaped_fraction = s.escaped_fraction;
  r.curve.t = t_grid;
  for (double t : t_grid) r.curve.phi.push_back(s.phi(t));
  return r;
}

double default_phi_min(std::size_t cells) { return std::max(10.0 / static_cast<double>(cells), 1e-4); }

std::vector<double> default_t_grid(const RatioSample& sample, std::size_t points, double phi_min) {
  if (points < 2) throw DomainError("t grid needs at least two points");
  const auto& r = sample.ratios;
  if (r.empty()) throw InsufficientData("no finite ratios on the cube");
  const auto n = static_cast<double>(sample.cells);
  // phi(t) <= 0.9 once t reaches the value with 90% of the cells at or below it.
  const auto lo_rank = static_cast<std::size_t>(std::clamp(std::ceil(0.1 * n) - 1.0, 0.0, static_cast<double>(r.size() - 1)));
  double t0 = r[lo_rank];
  if (!(t0 > 0.0)) {
    const auto pos = std::upper_bound(r.begin(), r.end(), 0.0);
    if (pos == r.end()) throw InsufficientData("all ratios vanish");
    t0 = *pos;
  }
  // phi(t) < phi_min once fewer than phi_min * N cells exceed t.
  const auto keep = static_cast<std::size_t>(std::floor(phi_min * n));
  const std::size_t hi_rank = r.size() > keep ? r.size() - 1 - keep : 0;
  const double t1 = r[hi_rank];
  if (!(t1 > t0)) throw InsufficientData("ratio distribution too narrow for a t grid");
  std::vector<double> grid(points);
  const double step = std::log(t1 / t0) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = t0 * std::exp(step * static_cast<double>(i));
  grid.back() = t1;
  return grid;
}

FitReport linear_fit(const std::vector<double>& x, const std::vector<double>& y, std::size_t min_points) {
  const std::size_t n = x.size();
  if (n < min_points || n < 2) throw InsufficientData("fewer than " + std::to_string(min_points) + " fit points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("degenerate regressor");
  FitReport f;
  const double slope = sxy / sxx;
  f.alpha_hat = -slope;
  f.intercept = my - slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
  f.points_used = n;
  return f;
}

FitReport fit_decay(const DecayCurve& curve, double beta, double phi_min, double phi_max) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  if (!(phi_min > 0.0 && phi_min < phi_max && phi_max <= 1.0)) throw DomainError("need 0 < phi_min < phi_max <= 1");
  if (curve.t.size() != curve.phi.size()) throw ShapeError("curve arrays differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    const double p = curve.phi[i];
    if (p >= phi_min && p <= phi_max) {
      x.push_back(std::pow(curve.t[i], 1.0 / beta));
      y.push_back(std::log(p));
    }
  }
  FitReport f = linear_fit(x, y);
  f.beta = beta;
  return f;
}

const std::vector<std::string>& pair_names() {
  static const std::vector<std::string> names{"feffstein", "hilbert", "multilinear-model", "veccz", "vecmax",
                                              "square",    "gstar",   "commutator",        "commutator-k"};
  return names;
}

Pair parse_pair(const std::string& name) {
  const auto& names = pair_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw DomainError("unknown pair id: " + name);
  return static_cast<Pair>(it - names.begin());
}

std::string pair_name(Pair pair) { return pair_names()[static_cast<std::size_t>(pair)]; }

std::vector<double> candidate_betas(Pair pair, const ExperimentOptions& opt) {
  std::vector<double> betas{0.5, 1.0, 2.0};
  if (pair == Pair::vecmax && opt.q != 2.0) betas.insert(betas.begin(), 1.0 / opt.q);
  if (pair == Pair::commutator_k)
    for (int j = 3; j <= opt.k + 1; ++j) betas.push_back(j);
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  return betas;
}

double predicted_beta(Pair pair, const ExperimentOptions& opt) {
  switch (pair) {
    case Pair::vecmax: return 1.0 / opt.q;
    case Pair::square:
    case Pair::gstar: return 0.5;
    case Pair::commutator: return 2.0;
    case Pair::commutator_k: return opt.k + 1.0;
    default: return 1.0;
  }
}

std::string pair_family(Pair pair) {
  switch (pair) {
    case Pair::feffstein: return "bmo";
    case Pair::square:
    case Pair::gstar: return "chain";
    case Pair::vecmax: return "rings";
    default: return "haar";
  }
}

PairValues evaluate_pair(Pair pair, std::uint64_t seed, int L, const ExperimentOptions& opt) {
  PairValues v;
  switch (pair) {
    case Pair::feffstein: {
      const GridFunction f = bmo_family(seed, L);
      const double m = median(f, DyadicIndex::root());
      v.t1 = f.map([m](double x) { return std::fabs(x - m); });
      v.t2 = local_sharp_maximal(f, DyadicIndex::root(), 0.125);
      break;
    }
    case Pair::hilbert: {
      const GridFunction f = haar_family(seed, L);
      v.t1 = maximal_singular(f);
      v.t2 = hl_maximal(f);
      break;
    }
    case Pair::multilinear_model: {
      const VectorGridFunction fs = haar_vector(seed, L, 2);
      v.t1 = bilinear_model(fs[0], fs[1]);
      v.t2 = multilinear_maximal(fs);
      break;
    }
    case Pair::veccz: {
      const VectorGridFunction fs = haar_vector(seed, L, opt.components);
      v.t1 = vector_cz(fs, opt.q);
      v.t2 = hl_maximal(fs.pointwise_norm(opt.q));
      break;
    }
    case Pair::vecmax: {
      const VectorGridFunction fs = rings_family(seed, L);
      v.t1 = vector_maximal(fs, opt.q);
      v.t2 = hl_maximal(fs.pointwise_norm(opt.q));
      break;
    }
    case Pair::square: {
      const GridFunction f = chain_family(seed, L);
      v.t1 = dyadic_square(f, DyadicIndex::root());
      v.t2 = hl_maximal(f);
      break;
    }
    case Pair::gstar: {
      const GridFunction f = chain_family(seed, L);
      v.t1 = continuous_square(f, opt.mu, opt.scales);
      v.t2 = hl_maximal(f);
      break;
    }
    case Pair::commutator:
    case Pair::commutator_k: {
      const int k = pair == Pair::commutator ? 1 : opt.k;
      const GridFunction f = haar_family(seed, L);
      const GridFunction b = log_symbol(L);
      v.t1 = higher_commutator(b, f, k);
      v.t2 = iterated_maximal(f, k + 1);
      break;
    }
  }
  return v;
}

ExperimentResult analyse_pair(Pair pair, std::uint64_t seed, int L, const PairValues& values,
                              const ExperimentOptions& opt) {
  ExperimentResult r;
  r.pair = pair;
  r.seed = seed;
  r.L = L;
  r.predicted = predicted_beta(pair, opt);
  const RatioSample sample = cell_ratios(values.t1, values.t2, DyadicIndex::root());
  r.escaped_fraction = sample.escaped_fraction;
  const double phi_min = opt.phi_min.value_or(default_phi_min(sample.cells));
  const auto grid = default_t_grid(sample, opt.t_points, phi_min);
  r.curve.t = grid;
  for (double t : grid) r.curve.phi.push_back(sample.phi(t));
  double best_r2 = -1.0;
  for (double beta : candidate_betas(pair, opt)) {
    BetaFit bf;
    bf.fit.beta = beta;
    try {
      bf.fit = fit_decay(r.curve, beta, phi_min, opt.phi_max);
      bf.valid = true;
      if (bf.fit.r_squared > best_r2) {
        best_r2 = bf.fit.r_squared;
        r.best_beta = beta;
      }
    } catch (const InsufficientData& e) {
      bf.note = e.what();
    }
    r.fits.push_back(bf);
  }
  bool positive = true;
  for (double v : values.t2.values()) positive = positive && v > 0.0;
  if (positive) {
    const double a = a1_constant(values.t2.map([](double v) { return std::sqrt(v); }));
    r.control_a1 = a * a;
  }
  return r;
}

ExperimentResult run_experiment(Pair pair, std::uint64_t seed, int L, const ExperimentOptions& opt) {
  return analyse_pair(pair, seed, L, evaluate_pair(pair, seed, L, opt), opt);
}

GoodLambdaCurve good_lambda_curve(const GridFunction& tstar, const GridFunction& mf, double lambda,
                                  const std::vector<double>& gamma_grid) {
  if (!(lambda > 0.0)) throw DomainError("good-lambda level must be positive");
  if (!tstar.same_grid(mf)) throw ShapeError("operator outputs must share a grid");
  GoodLambdaCurve c;
  c.gamma = gamma_grid;
  c.cells = tstar.size();
  std::vector<double> levels;
  for (std::size_t i = 0; i < tstar.size(); ++i)
    if (tstar[i] > 2.0 * lambda) levels.push_back(mf[i] / lambda);
  std::sort(levels.begin(), levels.end());
  c.superlevel = static_cast<double>(levels.size()) / static_cast<double>(tstar.size());
  for (double g : gamma_grid) {
    const auto count = std::upper_bound(levels.begin(), levels.end(), g) - levels.begin();
    c.fraction.push_back(static_cast<double>(count) / static_cast<double>(tstar.size()));
  }
  return c;
}

std::vector<double> default_gamma_grid(const GridFunction& tstar, const GridFunction& mf, double lambda,
                                       std::size_t points) {
  double lo = INFINITY, hi = 0.0;
  for (std::size_t i = 0; i < tstar.size(); ++i)
    if (tstar[i] > 2.0 * lambda) {
      lo = std::min(lo, mf[i] / lambda);
      hi = std::max(hi, mf[i] / lambda);
    }
  if (!(hi > lo)) throw InsufficientData("superlevel set too small for a gamma grid");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(points - 1));
  return g;
}

FitReport fit_good_lambda(const GoodLambdaCurve& curve, std::size_t min_points) {
  std::vector<double> x, y;
  const double lo = curve.cells ? 10.0 / static_cast<double>(curve.cells) : 0.0;
  const double hi = 0.9 * curve.superlevel;
  for (std::size_t i = 0; i < curve.gamma.size(); ++i)
    if (curve.fraction[i] > 0.0 && curve.fraction[i] >= lo && curve.fraction[i] <= hi) {
      x.push_back(1.0 / curve.gamma[i]);
      y.push_back(std::log(curve.fraction[i]));
    }
  FitReport f = linear_fit(x, y, min_points);
  f.beta = 1.0;
  return f;
}

}  // namespace czlab
