#include <doctest.h>

#include <cmath>
#include <random>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"

using namespace czlab;

TEST_SUITE("corpus") {

TEST_CASE("engine matches the reference stream") {
  std::mt19937_64 e;
  e.discard(9999);
  CHECK(e() == 9981545732273789042ULL);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  Rng c(7);
  std::mt19937_64 raw(7);
  CHECK(c.uniform() == static_cast<double>(raw() >> 11) * 0x1.0p-53);
}

TEST_CASE("uniforms and draws stay in range") {
  Rng r(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(r.below(7) < 7u);
  }
  Rng p(1), q(1);
  Rng dp = p.derive(5), dq = q.derive(6);
  CHECK(dp.uniform() != dq.uniform());
}

TEST_CASE("families are deterministic") {
  for (const std::string name : {"haar", "haarsum", "bmo", "osc", "chain", "mixed"}) {
    const GridFunction a = named_family(name, 9, 8), b = named_family(name, 9, 8);
    CHECK(a.samples() == b.samples());
    for (double v : a.samples()) CHECK(std::isfinite(v));
  }
  CHECK_THROWS_AS(named_family("unknown", 1, 8), DomainError);
}

TEST_CASE("haar functions") {
  const GridFunction h = haar_function(DyadicIndex{2, 1}, 5);
  CHECK(h.integral() == doctest::Approx(0.0));
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double expect = (i >= 8 && i < 12) ? 1.0 : (i >= 12 && i < 16) ? -1.0 : 0.0;
    CHECK(h[i] == expect);
  }
}

TEST_CASE("chain family is bounded") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(chain_family(seed, 12).max_abs() <= 2.0 + 1e-12);
}

TEST_CASE("vector families") {
  const VectorGridFunction v = haar_vector(4, 7, 3);
  CHECK(v.count() == 3);
  const VectorGridFunction r = rings_family(2, 8);
  CHECK(r.count() >= 1);
  for (const auto& c : r.components()) CHECK(c.resolution() == 8);
}

TEST_CASE("spikes and indicators") {
  const GridFunction s = spike(4, 3, 2.5);
  CHECK(s.integral() == doctest::Approx(2.5 / 16.0));
  CHECK_THROWS_AS(spike(4, 16, 1.0), InvalidCube);
  CHECK(indicator(5, 0.25, 0.75).integral() == doctest::Approx(0.5));
}

}
