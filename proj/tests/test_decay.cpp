#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "czlab/corpus.hpp"
#include "czlab/decay.hpp"
#include "czlab/error.hpp"
#include "czlab/maximal.hpp"
#include "czlab/singular.hpp"

using namespace czlab;

namespace {

DecayCurve synthetic(double alpha, double beta, std::size_t n) {
  DecayCurve c;
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = 0.25 * static_cast<double>(i);
    c.t.push_back(t);
    c.phi.push_back(std::exp(-alpha * std::pow(t, 1.0 / beta)));
  }
  return c;
}

}  // namespace

TEST_SUITE("decay_lab") {

TEST_CASE("level-set ratio steps") {
  const GridFunction g = mixed_corpus(5, 6).map([](double v) { return 1.0 + std::abs(v); });
  const std::vector<double> grid{0.5, 0.99, 1.0, 1.5, 1.99, 2.0, 3.0};
  const LevelSetResult same = level_set_ratio(g, g, DyadicIndex::root(), grid);
  const GridFunction twice = g.map([](double v) { return 2.0 * v; });
  const LevelSetResult dbl = level_set_ratio(twice, g, DyadicIndex::root(), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(same.curve.phi[i] == (grid[i] < 1.0 ? 1.0 : 0.0));
    CHECK(dbl.curve.phi[i] == (grid[i] < 2.0 ? 1.0 : 0.0));
  }
  CHECK(same.escaped_fraction == 0.0);
}

TEST_CASE("level-set ratio of a vanishing numerator is zero") {
  const GridFunction g = mixed_corpus(6, 6).map([](double v) { return 1.0 + std::abs(v); });
  const LevelSetResult r = level_set_ratio(g.zeros_like(), g, DyadicIndex::root(), {0.1, 1.0, 10.0});
  for (double p : r.curve.phi) CHECK(p == 0.0);
}

TEST_CASE("escaped cells") {
  GridFunction t1(std::vector<double>(8, 1.0));
  GridFunction t2(std::vector<double>(8, 1.0));
  t2[0] = 0.0;
  t2[1] = 0.0;
  const RatioSample s = cell_ratios(t1, t2, DyadicIndex::root());
  CHECK(s.escaped_fraction == doctest::Approx(0.25));
  CHECK(s.ratios.size() == 6);
  CHECK(s.phi(0.5) == doctest::Approx(0.75));
}

TEST_CASE("exponential and subexponential fits recover the rate") {
  const FitReport e = fit_decay(synthetic(2.0, 1.0, 40), 1.0, 1e-8, 1.0);
  CHECK(e.alpha_hat == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(e.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  const FitReport s = fit_decay(synthetic(3.0, 2.0, 40), 2.0, 1e-8, 1.0);
  CHECK(s.alpha_hat == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(s.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  const FitReport wrong = fit_decay(synthetic(3.0, 2.0, 40), 1.0, 1e-8, 1.0);
  CHECK(wrong.r_squared < s.r_squared);
}

TEST_CASE("fits reject too few points") {
  CHECK_THROWS_AS(linear_fit({1, 2, 3}, {1, 2, 3}), InsufficientData);
  CHECK_THROWS_AS(fit_decay(synthetic(2.0, 1.0, 40), 1.0, 0.5, 1.0), InsufficientData);
  CHECK_THROWS_AS(fit_decay(synthetic(2.0, 1.0, 40), 0.0, 1e-8, 1.0), DomainError);
}

TEST_CASE("pair ids") {
  for (const auto& name : pair_names()) CHECK(pair_name(parse_pair(name)) == name);
  CHECK_THROWS_AS(parse_pair("nonsense"), DomainError);
  const ExperimentOptions opt;
  for (const auto& name : pair_names()) {
    const Pair p = parse_pair(name);
    const auto betas = candidate_betas(p, opt);
    CHECK(std::find(betas.begin(), betas.end(), predicted_beta(p, opt)) != betas.end());
  }
}

TEST_CASE("experiment output is deterministic and well formed") {
  const ExperimentResult a = run_experiment(Pair::hilbert, 3, 10);
  const ExperimentResult b = run_experiment(Pair::hilbert, 3, 10);
  CHECK(a.curve.phi == b.curve.phi);
  REQUIRE_FALSE(a.curve.t.empty());
  for (std::size_t i = 1; i < a.curve.t.size(); ++i) {
    CHECK(a.curve.t[i] > a.curve.t[i - 1]);
    CHECK(a.curve.phi[i] <= a.curve.phi[i - 1]);
  }
  CHECK(a.best_beta.has_value());
  CHECK(a.predicted == 1.0);
}

TEST_CASE("good-lambda curve") {
  const int L = 10;
  const GridFunction f = haar_sum_family(2, L);
  const GridFunction ts = maximal_singular(f);
  const GridFunction mf = hl_maximal(f, MaximalMode::fast);
  std::vector<double> sorted(ts.samples());
  std::sort(sorted.begin(), sorted.end());
  const double lambda = sorted[sorted.size() / 2];
  const auto grid = default_gamma_grid(ts, mf, lambda);
  CHECK(grid.size() == 48);
  const GoodLambdaCurve c = good_lambda_curve(ts, mf, lambda, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < ts.size(); ++j) n += (ts[j] > 2.0 * lambda && mf[j] / lambda <= grid[i]) ? 1 : 0;
    CHECK(c.fraction[i] == doctest::Approx(static_cast<double>(n) / static_cast<double>(ts.size())));
    if (i > 0) CHECK(c.fraction[i] >= c.fraction[i - 1]);
    CHECK(c.fraction[i] <= c.superlevel);
  }
}

}
