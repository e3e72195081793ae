#include <doctest.h>

#include <cmath>

#include "czlab/checks.hpp"
#include "czlab/corpus.hpp"
#include "czlab/error.hpp"
#include "czlab/weights.hpp"

using namespace czlab;

TEST_SUITE("checks") {

TEST_CASE("Kolmogorov with a constant function") {
  const KolmogorovReport r = kolmogorov_check(GridFunction(std::vector<double>(32, 1.0)), 1.0, 2.0, DyadicIndex::root());
  CHECK(r.lhs == doctest::Approx(1.0));
  CHECK(r.weak_norm == doctest::Approx(1.0));
  CHECK(r.constant == doctest::Approx(2.0));
  CHECK(r.pass());
  const KolmogorovReport half = kolmogorov_check(GridFunction(std::vector<double>(32, 1.0)), 0.5, 1.0, DyadicIndex::root());
  CHECK(half.constant == doctest::Approx(4.0));
}

TEST_CASE("Kolmogorov holds on the corpus") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridFunction g = mixed_corpus(seed, 7).abs();
    for (const DyadicIndex& q : {DyadicIndex::root(), DyadicIndex{2, 1}}) CHECK(kolmogorov_check(g, 0.5, 1.0, q).pass());
  }
}

TEST_CASE("weak norm") {
  const std::vector<double> v{4, 1, 2, 3};
  CHECK(weak_norm(v, 1.0) == doctest::Approx(1.5));
  const std::vector<double> ones(10, 1.0);
  CHECK(weak_norm(ones, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("local norm inequality") {
  const Weight one(GridFunction(std::vector<double>(256, 1.0)));
  const GridFunction zero(Cube{}, 8);
  CHECK(cf_local_check(CfOperator::tstar, VectorGridFunction({zero}), one, 2.0).lhs == 0.0);
  const GridFunction f = haar_family(4, 8);
  const Weight w = make_weight("power:0.5", 8);
  const CfReport a = cf_local_check(CfOperator::tstar, VectorGridFunction({f}), w, 2.0);
  const CfReport b = cf_local_check(CfOperator::tstar, VectorGridFunction({f.map([](double v) { return 2.0 * v; })}), w, 2.0);
  CHECK(std::isfinite(a.ratio));
  CHECK(a.ratio == doctest::Approx(b.ratio).epsilon(1e-12));
  const CfReport u = cf_local_check(CfOperator::tstar, VectorGridFunction({f}), one, 2.0);
  CHECK(u.ap == doctest::Approx(1.0));
  CHECK(u.normalizer == doctest::Approx(4.0));
  CHECK(parse_cf_operator(cf_operator_name(CfOperator::square)) == CfOperator::square);
  CHECK_THROWS_AS(parse_cf_operator("bogus"), DomainError);
}

TEST_CASE("commutator norm inequality") {
  const GridFunction f = haar_family(2, 8);
  const Weight w = make_weight("const", 8);
  const CfReport c = cf_commutator_check(GridFunction(std::vector<double>(256, 3.0)), f, w, 2.0, 1);
  CHECK(c.lhs == doctest::Approx(0.0).epsilon(1e-12));
  const CfReport r = cf_commutator_check(log_symbol(8), f, w, 2.0, 2);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
}

TEST_CASE("median deviation inequality") {
  const GridFunction f = haar_family(6, 8);
  const CfReport r = previo_check(f, make_weight("cr:0.5:3", 8), 2.0, 0.5);
  CHECK(std::isfinite(r.ratio));
  CHECK(r.ratio > 0.0);
}

TEST_CASE("weak L log L ratios are finite") {
  const GridFunction b = log_symbol(8);
  const GridFunction f = haar_family(1, 8);
  const auto grid = default_lambda_grid(b, f);
  const WeakLLogLReport r = weak_llogl_check(b, f, grid);
  CHECK(r.ratio.size() == grid.size());
  CHECK(std::isfinite(r.sup_ratio));
}

TEST_CASE("pointwise domination ratios") {
  for (const auto& id : domination_ids()) {
    const double r = domination_ratio(id, 1, 6);
    CHECK(std::isfinite(r));
    CHECK(r > 0.0);
  }
  const DominationReport rep = pointwise_domination_report("sharp-local", {1, 2}, {6, 7});
  CHECK(rep.sup_ratio.size() == 2);
  CHECK(rep.spread >= 1.0);
  CHECK_THROWS_AS(pointwise_domination_report("nope", {1}, {6}), DomainError);
}

}
