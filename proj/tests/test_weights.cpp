#include <doctest.h>

#include <cmath>
#include <numbers>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/maximal.hpp"
#include "czlab/oracles.hpp"
#include "czlab/weights.hpp"

using namespace czlab;

TEST_SUITE("weights") {

TEST_CASE("constant weight") {
  const Weight one(GridFunction(std::vector<double>(64, 1.0)));
  for (double p : {1.5, 2.0, 4.0}) {
    CHECK(ap_constant(one, p) == doctest::Approx(1.0));
    CHECK(ap_constant(one, p, WeightScope::all_intervals) == doctest::Approx(1.0));
  }
  CHECK(a1_constant(one) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ap_constant(one, 1.0), DomainError);
}

TEST_CASE("step weight agrees with cube scan") {
  GridFunction v = indicator(6, 0.0, 0.5);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += 1.0;
  const Weight w(v);
  CHECK(ap_constant(w, 2.0) == doctest::Approx(oracle::ap_constant(w, 2.0)).epsilon(1e-12));
  CHECK(ap_constant(w, 2.0) == doctest::Approx(9.0 / 8.0));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Weight cr = make_weight("cr:0.5:" + std::to_string(seed), 6);
    for (double p : {1.5, 3.0}) CHECK(ap_constant(cr, p) == doctest::Approx(oracle::ap_constant(cr, p)).epsilon(1e-12));
  }
}

TEST_CASE("power weight stabilizes with resolution") {
  double prev = 0.0;
  for (int L = 4; L <= 12; L += 2) {
    const double a = ap_constant(make_weight("power:0.5", L), 2.0);
    CHECK(std::isfinite(a));
    CHECK(a >= 1.0);
    CHECK(a >= prev - 1e-12);
    prev = a;
  }
}

TEST_CASE("A1 constant") {
  GridFunction v(std::vector<double>(16, 1.0));
  v[3] = 0.0;
  CHECK_THROWS_AS(a1_constant(v), DomainError);
  CHECK_THROWS_AS(Weight{v}, DomainError);
  const GridFunction mu = spike(6, 10, 5.0);
  const GridFunction m = hl_maximal(mu);
  const Weight w(m.map([](double x) { return std::pow(x, 0.5); }));
  double expect = 0.0;
  const GridFunction mw = hl_maximal(w.values());
  for (std::size_t i = 0; i < mw.size(); ++i) expect = std::max(expect, mw[i] / w[i]);
  CHECK(a1_constant(w) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("factorization") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Weight w1 = make_weight("cr:0.5:" + std::to_string(seed), 8);
    const Weight w2 = make_weight("cr:0.7:" + std::to_string(100 + seed), 8);
    for (double p : {1.5, 2.0, 3.0}) CHECK(factorization_check(w1, w2, p).pass());
  }
}

TEST_CASE("BMO norm") {
  const GridFunction half = indicator(6, 0.0, 0.5);
  CHECK(bmo_norm(half) == doctest::Approx(0.5));
  CHECK(bmo_norm(half, WeightScope::all_intervals) == doctest::Approx(oracle::bmo_norm(half)).epsilon(1e-12));
  CHECK(bmo_norm(GridFunction(std::vector<double>(8, 3.0))) == doctest::Approx(0.0));
}

TEST_CASE("Rubio de Francia majorant") {
  const double A = default_norm_bound(2.0);
  const RubioReport one = rubio_de_francia(GridFunction(std::vector<double>(32, 1.0)), 2.0, A, 1e-14);
  for (double v : one.result.samples()) CHECK(v == doctest::Approx(2.0 * A / (2.0 * A - 1.0)).epsilon(1e-12));
  std::vector<GridFunction> corpus;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) corpus.push_back(haar_family(seed, 8).abs());
  for (double r : {2.0, 4.0}) {
    const double bound = std::max(default_norm_bound(r), measured_maximal_norm(corpus, r));
    for (const auto& h : corpus) {
      const RubioReport rep = rubio_de_francia(h, r, bound, 1e-12);
      CHECK(rep.pass(1e-9));
      CHECK(rep.min_gap >= 0.0);
      CHECK(rep.norm_ratio <= 2.0 + 1e-9);
      CHECK(rep.a1_ratio <= 1.0 + 1e-9);
    }
  }
  CHECK_THROWS_AS(rubio_de_francia(GridFunction(std::vector<double>(4, -1.0)), 2.0, 8.0, 1e-12), DomainError);
}

TEST_CASE("Coifman-Rochberg growth") {
  CHECK(coifman_rochberg_constant(GridFunction(std::vector<double>(32, 1.0)), 0.5) == doctest::Approx(1.0));
  GridFunction mu = spike(8, 17, 1.0);
  mu[200] = 3.0;
  CHECK(coifman_rochberg_check(mu).pass());
  CHECK(multilinear_cr_check(MultiArg({mu, spike(8, 90, 2.0)})).pass());
  CHECK_THROWS_AS(coifman_rochberg_constant(mu, 1.0), DomainError);
  CHECK_THROWS_AS(multilinear_cr_constant(MultiArg({mu, mu}), 0.5), DomainError);
}

TEST_CASE("L log L comparison with a constant weight") {
  const Weight one(GridFunction(std::vector<double>(64, 1.0)));
  const SteinReport r = stein_llogl_check(one, DyadicIndex{1, 0});
  CHECK(r.lhs == doctest::Approx(0.5 * std::log(std::numbers::e + 1.0)));
  CHECK(r.rhs >= 0.5 - 1e-12);
  CHECK(std::isfinite(r.ratio));
}

TEST_CASE("weight generators") {
  CHECK(make_weight("const", 5).size() == 32);
  CHECK_THROWS_AS(make_weight("cr:1.5:3", 5), DomainError);
  CHECK_THROWS_AS(make_weight("bogus", 5), DomainError);
  CHECK_THROWS_AS(make_weight("power:x", 5), DomainError);
  CHECK(parse_weight_scope("dyadic") == WeightScope::dyadic);
}

}
