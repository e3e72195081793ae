#include <doctest.h>

#include <cmath>
#include <numbers>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/oracles.hpp"
#include "czlab/singular.hpp"

using namespace czlab;

namespace {

GridFunction midpoints(int L) {
  GridFunction x(Cube{}, L);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = x.midpoint(i);
  return x;
}

double mean_square(const GridFunction& f) {
  double s = 0.0;
  for (double v : f.samples()) s += v * v;
  return s / static_cast<double>(f.size());
}

}  // namespace

TEST_SUITE("singular_ops") {

TEST_CASE("truncated hilbert transform of a half indicator") {
  const GridFunction half = indicator(10, 0.0, 0.5);
  const double v = hilbert_transform(half)[half.cell_of(0.75)];
  CHECK(v == doctest::Approx(std::log(3.0) / std::numbers::pi).epsilon(1e-2));
}

TEST_CASE("odd symmetry and empty truncation") {
  const GridFunction one(std::vector<double>(16, 1.0));
  CHECK(hilbert_truncated(one, 7, 1.0 / 16.0) + hilbert_truncated(one, 8, 1.0 / 16.0) == doctest::Approx(0.0));
  const GridFunction f = mixed_corpus(3, 6);
  for (std::size_t i = 0; i < f.size(); i += 7) CHECK(hilbert_truncated(f, i, 1.0) == 0.0);
}

TEST_CASE("maximal truncation") {
  const GridFunction z(Cube{}, 5);
  const GridFunction tz = maximal_singular(z);
  for (double v : tz.samples()) CHECK(v == 0.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GridFunction f = mixed_corpus(seed, 6);
    const GridFunction t = maximal_singular(f);
    const GridFunction o = oracle::maximal_singular(f);
    const GridFunction te = hilbert_transform(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(t[i] == doctest::Approx(o[i]).epsilon(1e-12));
      CHECK(t[i] >= std::abs(te[i]) - 1e-12);
    }
  }
}

TEST_CASE("kernel validation") {
  CHECK(validate_kernel(hilbert_kernel(), 2000).ok());
  CHECK(validate_kernel(hilbert_kernel(), 2000).max_size_ratio == doctest::Approx(1.0 / std::numbers::pi));
  Kernel bad{"inverse-square", [](double x, double y) { return 1.0 / ((x - y) * (x - y)); }, 1.0, 1.0, 1.0};
  CHECK_FALSE(validate_kernel(bad, 2000).ok());
  Kernel zero{"zero", [](double, double) { return 0.0; }, 1.0, 1.0, 1.0};
  CHECK(validate_kernel(zero, 2000).ok());
}

TEST_CASE("commutator with constant symbol vanishes") {
  const GridFunction b(std::vector<double>(64, 4.5));
  const GridFunction f = mixed_corpus(8, 6);
  const CommutatorResult r = commutator(b, f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(r.kernel_form[i]) < 1e-12);
    CHECK(std::abs(r.product_form[i]) < 1e-9);
  }
  const GridFunction h = higher_commutator(b, f, 2);
  for (double v : h.samples()) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("commutator with b(x) = x collapses to a truncated integral") {
  const int L = 7;
  const GridFunction x = midpoints(L);
  const GridFunction f = mixed_corpus(4, L);
  const CommutatorResult r = commutator(x, f);
  const std::size_t d = truncation_cells(x.cell_width(), x.cell_width());
  for (std::size_t i = 0; i < f.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      if ((i > j ? i - j : j - i) >= d) s += f[j] * x.cell_width();
    CHECK(r.kernel_form[i] == doctest::Approx(s / std::numbers::pi).epsilon(1e-10));
  }
}

TEST_CASE("commutator routes agree") {
  const int L = 8;
  const GridFunction b = log_symbol(L);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CommutatorResult r = commutator(b, mixed_corpus(seed, L));
    CHECK(r.max_discrepancy < 1e-10);
  }
}

TEST_CASE("higher commutators") {
  const int L = 7;
  const GridFunction b = log_symbol(L);
  const GridFunction f = mixed_corpus(6, L);
  const GridFunction k0 = higher_commutator(b, f, 0);
  const GridFunction t = hilbert_transform(f);
  const GridFunction k1 = higher_commutator(b, f, 1);
  const CommutatorResult c = commutator(b, f);
  GridFunction shifted = b;
  for (std::size_t i = 0; i < b.size(); ++i) shifted[i] += 3.0;
  const GridFunction k2 = higher_commutator(b, f, 2), k2s = higher_commutator(shifted, f, 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(k0[i] == doctest::Approx(t[i]).epsilon(1e-12));
    CHECK(k1[i] == doctest::Approx(c.kernel_form[i]).epsilon(1e-10));
    CHECK(k2s[i] == doctest::Approx(k2[i]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(higher_commutator(b, f, -1), DomainError);
}

TEST_CASE("dyadic square function") {
  const GridFunction c(std::vector<double>(16, 2.0));
  const GridFunction sc = dyadic_square(c, DyadicIndex::root());
  for (double v : sc.samples()) CHECK(v == doctest::Approx(0.0));
  const GridFunction h = haar_function(DyadicIndex::root(), 6);
  const GridFunction sh = dyadic_square(h, DyadicIndex::root());
  for (double v : sh.samples()) CHECK(v == doctest::Approx(1.0));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GridFunction f = mixed_corpus(seed, 6);
    const GridFunction s = dyadic_square(f, DyadicIndex::root());
    const GridFunction o = oracle::dyadic_square(f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(s[i] == doctest::Approx(o[i]).epsilon(1e-12));
    const double mean = f.integral();
    const GridFunction centered = f.map([mean](double v) { return v - mean; });
    CHECK(mean_square(s) == doctest::Approx(mean_square(centered)).epsilon(1e-12));
  }
}

TEST_CASE("continuous square function") {
  const GridFunction z(Cube{}, 6);
  const GridFunction gz = continuous_square(z, 4.0, 8);
  for (double v : gz.samples()) CHECK(v == 0.0);
  const GridFunction f = mixed_corpus(9, 7);
  const GridFunction g = continuous_square(f, 4.0, 8);
  const GridFunction g2 = continuous_square(f.map([](double v) { return 2.0 * v; }), 4.0, 8);
  const GridFunction fine = continuous_square(f, 4.0, 16);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(g2[i] == doctest::Approx(2.0 * g[i]).epsilon(1e-12));
    CHECK(std::abs(fine[i] - g[i]) <= 0.05 * std::max(g[i], 1e-300));
  }
  CHECK_THROWS_AS(continuous_square(f, 3.0, 8), DomainError);
}

TEST_CASE("vector singular operator") {
  const GridFunction f = mixed_corpus(10, 6);
  const GridFunction t = hilbert_transform(f);
  const GridFunction one = vector_cz(VectorGridFunction({f}), 2.0);
  const GridFunction four = vector_cz(VectorGridFunction({f, f, f, f}), 2.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(one[i] == doctest::Approx(std::abs(t[i])).epsilon(1e-12));
    CHECK(four[i] == doctest::Approx(2.0 * std::abs(t[i])).epsilon(1e-12));
  }
  const VectorGridFunction v = haar_vector(2, 6, 3);
  const GridFunction vc = vector_cz(v, 3.0);
  std::vector<GridFunction> ts;
  for (const auto& c : v.components()) ts.push_back(hilbert_transform(c));
  for (std::size_t i = 0; i < f.size(); ++i) {
    double s = 0.0;
    for (const auto& tj : ts) s += std::pow(std::abs(tj[i]), 3.0);
    CHECK(vc[i] == doctest::Approx(std::cbrt(s)).epsilon(1e-12));
  }
}

}
