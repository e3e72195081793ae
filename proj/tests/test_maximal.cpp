#include <doctest.h>

#include <cmath>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/maximal.hpp"
#include "czlab/oracles.hpp"

using namespace czlab;

namespace {

void check_close(const GridFunction& a, const GridFunction& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(tol));
}

}  // namespace

TEST_SUITE("maximal_ops") {

TEST_CASE("hardy-littlewood examples") {
  const GridFunction c(std::vector<double>(16, -3.0));
  { const GridFunction out = hl_maximal(c); for (double v : out.samples()) CHECK(v == doctest::Approx(3.0)); }
  // cell ending at 3/4: optimum interval [0, 3/4)
  const GridFunction half = indicator(4, 0.0, 0.5);
  CHECK(hl_maximal(half)[11] == doctest::Approx(2.0 / 3.0));
  const GridFunction s = spike(3, 0, 8.0);
  const GridFunction m = hl_maximal(s);
  CHECK(m[6] == doctest::Approx(8.0 / 7.0));
  CHECK(m[7] == doctest::Approx(1.0));
}

TEST_CASE("hardy-littlewood agrees with interval oracle") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridFunction f = mixed_corpus(seed, 6);
    check_close(hl_maximal(f), oracle::hl_maximal(f), 1e-12);
    check_close(hl_maximal(f, MaximalMode::dyadic), oracle::dyadic_maximal(f), 1e-12);
  }
}

TEST_CASE("fast mode is bracketed by dyadic and exact") {
  const GridFunction f = mixed_corpus(4, 8);
  const GridFunction d = hl_maximal(f, MaximalMode::dyadic);
  const GridFunction s = hl_maximal(f, MaximalMode::fast);
  const GridFunction e = hl_maximal(f, MaximalMode::exact);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(d[i] <= s[i] + 1e-12);
    CHECK(s[i] <= e[i] + 1e-12);
    CHECK(std::abs(f[i]) <= e[i] + 1e-12);
  }
}

TEST_CASE("maximal function is sublinear") {
  const GridFunction f = mixed_corpus(7, 6);
  const GridFunction g = mixed_corpus(8, 6);
  GridFunction fg = f;
  for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[i] + g[i];
  const GridFunction mf = hl_maximal(f), mg = hl_maximal(g), mfg = hl_maximal(fg);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(mfg[i] <= mf[i] + mg[i] + 1e-12);
}

TEST_CASE("dyadic local maximal") {
  const GridFunction half = indicator(4, 0.0, 0.5);
  CHECK(dyadic_local_maximal(half, DyadicIndex::root())[12] == doctest::Approx(0.5));
  const GridFunction s = spike(4, 0, 16.0);
  CHECK(dyadic_local_maximal(s, DyadicIndex::root())[15] == doctest::Approx(1.0));
  const GridFunction local = dyadic_local_maximal(s, DyadicIndex{1, 1});
  for (std::size_t i = 0; i < 8; ++i) CHECK(local[i] == 0.0);
}

TEST_CASE("power maximal") {
  const GridFunction half = indicator(4, 0.0, 0.5);
  CHECK(m_delta(half, 0.5)[11] == doctest::Approx(4.0 / 9.0));
  const GridFunction f = mixed_corpus(3, 6);
  check_close(m_delta(f, 1.0), hl_maximal(f), 1e-12);
  CHECK_THROWS_AS(m_delta(f, 0.0), DomainError);
}

TEST_CASE("sharp maximal") {
  const GridFunction c(std::vector<double>(16, 5.0));
  { const GridFunction out = sharp_maximal(c, 1.0); for (double v : out.samples()) CHECK(v == doctest::Approx(0.0)); }
  const GridFunction half = indicator(4, 0.0, 0.5);
  CHECK(sharp_maximal(half, 1.0)[0] == doctest::Approx(0.5));
  const GridFunction f = mixed_corpus(12, 6);
  const GridFunction sh = sharp_maximal(f, 1.0);
  const GridFunction m = hl_maximal(f, MaximalMode::dyadic);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(sh[i] <= 2.0 * m[i] + 1e-12);
  CHECK_THROWS_AS(sharp_maximal(f, -1.0), DomainError);
}

TEST_CASE("sharp inner infimum agrees with oracle") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(1 + rng.below(16));
    for (auto& x : v) x = rng.normal();
    for (double delta : {0.25, 0.5, 1.0})
      CHECK(sharp_inner_infimum(v, delta) == doctest::Approx(oracle::sharp_inner_infimum(v, delta)).epsilon(1e-9));
  }
}

TEST_CASE("iterated maximal") {
  const GridFunction f = mixed_corpus(5, 6);
  check_close(iterated_maximal(f, 1), hl_maximal(f), 1e-15);
  const GridFunction s = spike(6, 20, 10.0);
  const GridFunction m1 = hl_maximal(s), m2 = iterated_maximal(s, 2);
  bool strict = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(m2[i] >= m1[i] - 1e-12);
    strict = strict || m2[i] > m1[i] + 1e-12;
  }
  CHECK(strict);
  CHECK_THROWS_AS(iterated_maximal(f, 0), DomainError);
}

TEST_CASE("vector maximal") {
  const GridFunction g = mixed_corpus(6, 6);
  check_close(vector_maximal(VectorGridFunction({g}), 2.0), hl_maximal(g), 1e-12);
  const GridFunction two = vector_maximal(VectorGridFunction({g, g}), 2.0);
  const GridFunction mg = hl_maximal(g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(two[i] == doctest::Approx(std::sqrt(2.0) * mg[i]).epsilon(1e-12));
  const VectorGridFunction v = haar_vector(3, 6, 4);
  const GridFunction vm = vector_maximal(v, 3.0);
  std::vector<GridFunction> ms;
  for (const auto& c : v.components()) ms.push_back(oracle::hl_maximal(c));
  for (std::size_t i = 0; i < g.size(); ++i) {
    double s = 0.0;
    for (const auto& m : ms) s += std::pow(m[i], 3.0);
    CHECK(vm[i] == doctest::Approx(std::cbrt(s)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(vector_maximal(v, 1.0), DomainError);
}

TEST_CASE("multilinear maximal") {
  const GridFunction c1(std::vector<double>(16, 2.0)), c2(std::vector<double>(16, 3.0));
  { const GridFunction out = multilinear_maximal(MultiArg({c1, c2})); for (double v : out.samples()) CHECK(v == doctest::Approx(6.0)); }
  const GridFunction f1 = mixed_corpus(31, 6), f2 = mixed_corpus(32, 6);
  check_close(multilinear_maximal(MultiArg({f1})), hl_maximal(f1), 1e-12);
  const GridFunction mm = multilinear_maximal(MultiArg({f1, f2}));
  const GridFunction m1 = hl_maximal(f1), m2 = hl_maximal(f2);
  const std::size_t n = f1.size();
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::size_t a = 0; a <= i; ++a)
      for (std::size_t b = i + 1; b <= n; ++b) best = std::max(best, oracle::mean_abs(f1, a, b) * oracle::mean_abs(f2, a, b));
    CHECK(mm[i] == doctest::Approx(best).epsilon(1e-12));
    CHECK(mm[i] <= m1[i] * m2[i] + 1e-12);
  }
  CHECK_THROWS_AS(multilinear_maximal(MultiArg({f1, spike(5, 0, 1.0)})), ShapeError);
}

}
