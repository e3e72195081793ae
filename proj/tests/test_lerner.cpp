#include <doctest.h>

#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/lerner.hpp"

using namespace czlab;

namespace {

bool property_passes(const FamilyReport& r, const std::string& name) {
  for (const auto& p : r.properties)
    if (p.name == name) return p.pass;
  FAIL("missing property " << name);
  return false;
}

}  // namespace

TEST_SUITE("lerner") {

TEST_CASE("constant and haar functions need no cubes") {
  const GridFunction c(std::vector<double>(64, 1.5));
  CHECK(lerner_decompose(c, DyadicIndex::root()).empty());
  const GridFunction h = haar_function(DyadicIndex::root(), 6);
  const SparseFamily fam = lerner_decompose(h, DyadicIndex::root());
  CHECK(fam.empty());
  const BoundReport b = pointwise_bound_check(h, DyadicIndex::root(), fam);
  CHECK(b.pass());
  CHECK(b.min_slack == doctest::Approx(2.0));
}

TEST_CASE("a tall spike produces a localized first generation") {
  const int L = 10;
  const std::size_t cell = 300;
  const GridFunction f = spike(L, cell, 100.0);
  const SparseFamily fam = lerner_decompose(f, DyadicIndex::root());
  REQUIRE_FALSE(fam.levels.empty());
  REQUIRE_FALSE(fam.levels[0].empty());
  bool covers = false;
  for (const auto& q : fam.levels[0]) covers = covers || (q.first_cell(L) <= cell && cell < q.first_cell(L) + q.cell_count(L));
  CHECK(covers);
  CHECK(fam.omega[0].measure() <= 0.5);
  CHECK(verify_family(f, fam).pass());
  CHECK(pointwise_bound_check(f, DyadicIndex::root(), fam).pass());
}

TEST_CASE("seeded corpus satisfies every invariant") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const GridFunction f = mixed_corpus(seed, 8);
    const SparseFamily fam = lerner_decompose(f, DyadicIndex::root());
    CHECK(verify_family(f, fam).pass());
    CHECK(pointwise_bound_check(f, DyadicIndex::root(), fam).violations == 0);
  }
}

TEST_CASE("local root") {
  const GridFunction f = mixed_corpus(77, 8);
  const DyadicIndex q0{2, 3};
  const SparseFamily fam = lerner_decompose(f, q0);
  for (const auto& gen : fam.levels)
    for (const auto& q : gen) CHECK(q0.contains(q));
  CHECK(verify_family(f, fam).pass());
  CHECK(pointwise_bound_check(f, q0, fam).pass());
}

TEST_CASE("overlapping cubes in one generation are rejected") {
  const GridFunction f = mixed_corpus(1, 6);
  SparseFamily fam;
  fam.root = DyadicIndex::root();
  fam.resolution = 6;
  fam.levels = {{DyadicIndex{1, 0}, DyadicIndex{2, 0}}};
  rebuild_sets(fam);
  const FamilyReport r = verify_family(f, fam);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(property_passes(r, "generation disjoint"));
}

TEST_CASE("empty family passes vacuously") {
  const GridFunction f = mixed_corpus(1, 6);
  SparseFamily fam;
  fam.resolution = 6;
  rebuild_sets(fam);
  CHECK(verify_family(f, fam).pass());
}

TEST_CASE("json round trip") {
  const GridFunction f = mixed_corpus(13, 8);
  const SparseFamily fam = lerner_decompose(f, DyadicIndex::root());
  const SparseFamily back = family_from_json(family_to_json(fam));
  CHECK(back.root == fam.root);
  CHECK(back.resolution == fam.resolution);
  CHECK(back.levels == fam.levels);
  CHECK(verify_family(f, back).pass());
  CHECK_THROWS(family_from_json("{\"root\":"));
}

}
