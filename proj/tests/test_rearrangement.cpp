#include <doctest.h>

#include <algorithm>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/oracles.hpp"
#include "czlab/rearrangement.hpp"

using namespace czlab;

TEST_SUITE("rearrangement") {

TEST_CASE("decreasing rearrangement") {
  const GridFunction c(std::vector<double>(4, -2.0));
  CHECK(decreasing_rearrangement(c, DyadicIndex::root(), 0.3) == 2.0);
  const GridFunction f({3, 1, 2, 4});
  CHECK(decreasing_rearrangement(f, DyadicIndex::root(), 0.5) == 2.0);
  CHECK(decreasing_rearrangement(f, DyadicIndex::root(), 0.0) == 4.0);
  CHECK(decreasing_rearrangement(f, DyadicIndex::root(), 1.0) == 0.0);
  CHECK_THROWS_AS(decreasing_rearrangement(f, DyadicIndex::root(), -0.1), DomainError);
  CHECK_THROWS_AS(decreasing_rearrangement(f, DyadicIndex::root(), 1.5), DomainError);
}

TEST_CASE("rearrangement is non-increasing in s") {
  const GridFunction f = mixed_corpus(11, 7);
  double prev = decreasing_rearrangement(f, DyadicIndex::root(), 0.0);
  for (int i = 1; i <= 64; ++i) {
    const double v = decreasing_rearrangement(f, DyadicIndex::root(), i / 64.0);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("lower median") {
  CHECK(median(GridFunction(std::vector<double>(8, 7.0)), DyadicIndex::root()) == 7.0);
  CHECK(median(GridFunction({1, 2, 3, 4}), DyadicIndex::root()) == 2.0);
  CHECK(median(GridFunction({5, 5, 1, 5}), DyadicIndex::root()) == 5.0);
}

TEST_CASE("median agrees with counting oracle") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(1 + rng.below(20));
    for (auto& x : v) x = static_cast<double>(rng.below(5));
    CHECK(median_of(v) == oracle::median(v));
  }
}

TEST_CASE("oscillation") {
  const GridFunction half = indicator(4, 0.0, 0.5);
  CHECK(oscillation(GridFunction(std::vector<double>(8, 3.0)), DyadicIndex::root(), 0.25) == 0.0);
  CHECK(oscillation(half, DyadicIndex::root(), 0.125) == 0.5);
  CHECK(oscillation(half, DyadicIndex::root(), 0.5) == 0.0);
  CHECK_THROWS_AS(oscillation(half, DyadicIndex::root(), 0.0), DomainError);
  CHECK_THROWS_AS(oscillation(half, DyadicIndex::root(), 1.0), DomainError);
}

TEST_CASE("oscillation agrees with midpoint oracle") {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(2 + rng.below(30));
    for (auto& x : v) x = rng.normal();
    for (double lambda : {0.1, 0.25, 0.5}) CHECK(oscillation_of(v, lambda) == doctest::Approx(oracle::oscillation(v, lambda)).epsilon(1e-12));
  }
}

TEST_CASE("local sharp maximal") {
  const GridFunction c(std::vector<double>(16, 2.0));
  { const GridFunction out = local_sharp_maximal(c, DyadicIndex::root(), 0.125); for (double v : out.samples()) CHECK(v == 0.0); }
  const GridFunction half = indicator(4, 0.0, 0.5);
  const GridFunction m = local_sharp_maximal(half, DyadicIndex::root(), 0.125);
  CHECK(m[half.cell_of(0.25)] == 0.5);
  const GridFunction f({3, 1, 2, 4});
  const GridFunction a = local_sharp_maximal(f, DyadicIndex::root(), 0.125);
  const GridFunction b = oracle::local_sharp_maximal(f, 0.125);
  for (std::size_t i = 0; i < 4; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("local sharp maximal vanishes outside the local cube") {
  const GridFunction f = mixed_corpus(2, 6);
  const GridFunction m = local_sharp_maximal(f, DyadicIndex{1, 1}, 0.25);
  for (std::size_t i = 0; i < 32; ++i) CHECK(m[i] == 0.0);
}

}
