#include "czlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "czlab/checks.hpp"
#include "czlab/corpus.hpp"
#include "czlab/decay.hpp"
#include "czlab/error.hpp"
#include "czlab/lerner.hpp"
#include "czlab/maximal.hpp"
#include "czlab/oracles.hpp"
#include "czlab/rearrangement.hpp"
#include "czlab/singular.hpp"
#include "czlab/weights.hpp"

namespace czlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void note(const Progress& log, const std::string& msg) {
  if (log) log(msg);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(b)); }

bool all_close(const GridFunction& a, const GridFunction& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!close(a[i], b[i], tol)) return false;
  return true;
}

std::vector<std::uint64_t> seed_range(int count) {
  std::vector<std::uint64_t> s;
  for (int i = 1; i <= count; ++i) s.push_back(static_cast<std::uint64_t>(i));
  return s;
}

}  // namespace

SuiteScale full_scale() { return {}; }

SuiteScale smoke_scale() {
  SuiteScale s;
  s.lerner_level = 8;
  s.lerner_count = 5;
  s.decay_level = 8;
  s.seeds = 2;
  s.weighted_level = 8;
  s.weights_level = 8;
  s.weights_count = 3;
  s.identity_level = 8;
  s.corpus_count = 5;
  s.domination_levels = {8};
  s.domination_seeds = 2;
  s.oracle_level = 5;
  s.oracle_count = 3;
  s.thresholds = false;
  return s;
}

CriterionResult check_lerner(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{1, "sparse family properties and pointwise bound", true, "", 0.0};
  const DyadicIndex root = DyadicIndex::root();
  int failed = 0;
  std::size_t violations = 0, cubes = 0;
  std::string first;
  for (int seed = 1; seed <= s.lerner_count; ++seed) {
    const GridFunction f = mixed_corpus(static_cast<std::uint64_t>(seed), s.lerner_level);
    const SparseFamily fam = lerner_decompose(f, root);
    cubes += fam.cube_count();
    const FamilyReport rep = verify_family(f, fam);
    const BoundReport bound = pointwise_bound_check(f, root, fam, 4.0, 4.0);
    violations += bound.violations;
    if (!rep.pass() || !bound.pass()) {
      ++failed;
      if (first.empty()) {
        first = " first failure seed " + std::to_string(seed);
        for (const auto& p : rep.properties)
          if (!p.pass) first += " [" + p.name + "]";
      }
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = failed == 0 && (!s.thresholds || r.seconds < 60.0);
  r.detail = std::to_string(s.lerner_count - failed) + "/" + std::to_string(s.lerner_count) + " functions at L=" +
             std::to_string(s.lerner_level) + ", " + std::to_string(violations) + " bound violations, " +
             std::to_string(cubes) + " cubes" + first;
  note(log, "lerner done");
  return r;
}

CriterionResult check_exponents(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{2, "decay exponent discrimination", true, "", 0.0};
  struct Case {
    Pair pair;
    ExperimentOptions opt;
    std::string label;
  };
  std::vector<Case> cases;
  for (Pair p : {Pair::feffstein, Pair::hilbert, Pair::veccz, Pair::square, Pair::gstar})
    cases.push_back({p, {}, pair_name(p)});
  ExperimentOptions q3;
  q3.q = 3.0;
  cases.push_back({Pair::vecmax, {}, "vecmax(q=2)"});
  cases.push_back({Pair::vecmax, q3, "vecmax(q=3)"});
  cases.push_back({Pair::commutator, {}, "commutator"});
  cases.push_back({Pair::commutator_k, {}, "commutator-k(k=2)"});
  const int need = (8 * s.seeds + 9) / 10;
  std::ostringstream d;
  for (const auto& c : cases) {
    int hits = 0;
    for (int seed = 1; seed <= s.seeds; ++seed) {
      try {
        const auto e = run_experiment(c.pair, static_cast<std::uint64_t>(seed), s.decay_level, c.opt);
        if (!e.best_beta || *e.best_beta != e.predicted) continue;
        for (const auto& f : e.fits)
          if (f.valid && f.fit.beta == e.predicted && f.fit.r_squared >= 0.9 && f.fit.alpha_hat > 0.0) ++hits;
      } catch (const InsufficientData&) {
      }
    }
    if (s.thresholds && hits < need) r.pass = false;
    d << c.label << " " << hits << "/" << s.seeds << "; ";
    note(log, "decay " + c.label + " " + std::to_string(hits) + "/" + std::to_string(s.seeds));
  }
  r.seconds = seconds_since(t0);
  if (s.thresholds && r.seconds >= 600.0) r.pass = false;
  r.detail = d.str() + "need " + std::to_string(need) + " at L=" + std::to_string(s.decay_level);
  return r;
}

CriterionResult check_ordering(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{3, "commutator tail above singular integral tail", true, "", 0.0};
  int hits = 0;
  for (int seed = 1; seed <= s.seeds; ++seed) {
    const auto sd = static_cast<std::uint64_t>(seed);
    const auto hv = evaluate_pair(Pair::hilbert, sd, s.decay_level, {});
    const auto cv = evaluate_pair(Pair::commutator, sd, s.decay_level, {});
    const RatioSample hs = cell_ratios(hv.t1, hv.t2, DyadicIndex::root());
    const RatioSample cs = cell_ratios(cv.t1, cv.t2, DyadicIndex::root());
    const double floor_phi = 10.0 / static_cast<double>(hs.cells);
    const double phi_min = default_phi_min(hs.cells);
    try {
      // Common grid: union span of both default grids, keeping points where both curves are resolved.
      const auto gh = default_t_grid(hs, 64, phi_min);
      const auto gc = default_t_grid(cs, 64, phi_min);
      const double lo = std::min(gh.front(), gc.front());
      const double hi = std::max(gh.back(), gc.back());
      std::vector<double> common;
      for (int i = 0; i < 128; ++i) {
        const double t = lo * std::pow(hi / lo, i / 127.0);
        if (hs.phi(t) >= floor_phi && cs.phi(t) >= floor_phi) common.push_back(t);
      }
      if (common.size() < 3) continue;
      bool above = true;
      for (std::size_t k = common.size() - 3; k < common.size(); ++k)
        above = above && cs.phi(common[k]) >= hs.phi(common[k]);
      hits += above;
    } catch (const InsufficientData&) {
    }
  }
  const int need = (8 * s.seeds + 9) / 10;
  r.pass = !s.thresholds || hits >= need;
  r.seconds = seconds_since(t0);
  r.detail = std::to_string(hits) + "/" + std::to_string(s.seeds) + " seeds, need " + std::to_string(need);
  note(log, "ordering done");
  return r;
}

CriterionResult check_good_lambda(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{4, "good-lambda exponential decay in gamma", true, "", 0.0};
  int hits = 0;
  double worst = 1.0;
  for (int seed = 1; seed <= s.seeds; ++seed) {
    const GridFunction f = haar_sum_family(static_cast<std::uint64_t>(seed), s.decay_level);
    const GridFunction ts = maximal_singular(f);
    const GridFunction mf = hl_maximal(f);
    const double lambda = median(ts, DyadicIndex::root());
    try {
      const auto curve = good_lambda_curve(ts, mf, lambda, default_gamma_grid(ts, mf, lambda));
      const FitReport fit = fit_good_lambda(curve);
      worst = std::min(worst, fit.r_squared);
      if (fit.alpha_hat > 0.0 && fit.r_squared >= 0.8) ++hits;
    } catch (const InsufficientData&) {
    }
  }
  const int need = (8 * s.seeds + 9) / 10;
  r.pass = !s.thresholds || hits >= need;
  r.seconds = seconds_since(t0);
  r.detail = std::to_string(hits) + "/" + std::to_string(s.seeds) + " seeds decreasing with R^2 >= 0.8, min R^2 " +
             fmt("%.3f", worst);
  note(log, "good-lambda done");
  return r;
}

CriterionResult check_weighted_stability(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{5, "weighted local norm inequalities across power weights", true, "", 0.0};
  const int L = s.weighted_level;
  const double q = 2.0;
  std::vector<Weight> weights;
  double ap_lo = INFINITY, ap_hi = 0.0;
  for (const char* a : {"0", "0.25", "0.5", "0.75"}) {
    weights.push_back(make_weight(std::string("power:") + a, L));
    const double ap = ap_constant(weights.back(), q);
    ap_lo = std::min(ap_lo, ap);
    ap_hi = std::max(ap_hi, ap);
  }
  const GridFunction b = log_symbol(L);
  const char* names[] = {"tstar", "square", "commutator(k=1)", "median deviation(delta=1/2)"};
  std::ostringstream d;
  bool stable = true;
  for (int fam = 0; fam < 4; ++fam) {
    double lo = INFINITY, hi = 0.0;
    bool finite = true;
    for (int seed = 1; seed <= s.seeds; ++seed) {
      const GridFunction f = haar_family(static_cast<std::uint64_t>(seed), L);
      const VectorGridFunction args(std::vector<GridFunction>{f});
      for (const auto& w : weights) {
        CfReport rep;
        switch (fam) {
          case 0: rep = cf_local_check(CfOperator::tstar, args, w, q); break;
          case 1: rep = cf_local_check(CfOperator::square, args, w, q); break;
          case 2: rep = cf_commutator_check(b, f, w, q, 1); break;
          default: rep = previo_check(f, w, q, 0.5); break;
        }
        finite = finite && std::isfinite(rep.ratio) && rep.ratio > 0.0;
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
      }
    }
    const double spread = hi / lo;
    stable = stable && finite && spread <= 10.0;
    d << names[fam] << " spread " << fmt("%.2f", spread) << "; ";
  }
  const double span = ap_hi / ap_lo;
  d << "[w]_A2 span " << fmt("%.2f", span) << " (need >= 100)";
  r.pass = stable && (!s.thresholds || span >= 100.0);
  r.seconds = seconds_since(t0);
  r.detail = d.str();
  note(log, "weighted sweep done");
  return r;
}

CriterionResult check_weights(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{6, "weights toolbox", true, "", 0.0};
  const int L = s.weights_level;
  std::ostringstream d;
  const Weight one = make_weight("const", L);
  bool unit = true;
  for (double p : {1.5, 2.0, 3.0}) unit = unit && ap_constant(one, p) == 1.0;
  d << "A_p(1)=1 " << (unit ? "yes" : "no") << "; ";

  int fact_ok = 0;
  for (int i = 1; i <= s.weights_count; ++i) {
    const Weight w1 = make_weight("cr:0.5:" + std::to_string(i), L);
    const Weight w2 = make_weight("cr:0.7:" + std::to_string(1000 + i), L);
    fact_ok += factorization_check(w1, w2, 2.0).pass();
  }
  d << "factorization " << fact_ok << "/" << s.weights_count << "; ";

  Rng rng(2024);
  GridFunction mu(Cube{}, L);
  for (int k = 0; k < 3; ++k) mu[rng.below(mu.size())] += rng.uniform(0.5, 1.0) * static_cast<double>(mu.size());
  GridFunction mu2(Cube{}, L);
  for (int k = 0; k < 3; ++k) mu2[rng.below(mu2.size())] += rng.uniform(0.5, 1.0) * static_cast<double>(mu2.size());
  const GrowthReport cr = coifman_rochberg_check(mu);
  const GrowthReport mcr = multilinear_cr_check(MultiArg(std::vector<GridFunction>{mu, mu2}));
  d << "CR growth " << fmt("%.3f", cr.worst_ratio) << ", multilinear CR growth " << fmt("%.3f", mcr.worst_ratio)
    << "; ";

  int rubio_ok = 0, rubio_total = 0;
  bool bound_ok = true;
  for (double rr : {2.0, 4.0}) {
    std::vector<GridFunction> hs;
    for (int i = 1; i <= s.weights_count; ++i)
      hs.push_back(haar_family(static_cast<std::uint64_t>(500 + i), L).map([](double v) { return std::fabs(v); }));
    const double bound = default_norm_bound(rr);
    bound_ok = bound_ok && measured_maximal_norm(hs, rr) <= bound;
    for (const auto& h : hs) {
      ++rubio_total;
      rubio_ok += rubio_de_francia(h, rr, bound, 1e-12).pass(1e-9);
    }
  }
  d << "Rubio de Francia " << rubio_ok << "/" << rubio_total << (bound_ok ? "" : " (norm bound not validated)");
  r.pass = unit && fact_ok == s.weights_count && cr.pass() && mcr.pass() && bound_ok && rubio_ok == rubio_total;
  r.seconds = seconds_since(t0);
  r.detail = d.str();
  note(log, "weights done");
  return r;
}

CriterionResult check_identities(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{7, "exact identities and Kolmogorov inequality", true, "", 0.0};
  const int L = s.identity_level;
  const DyadicIndex root = DyadicIndex::root();
  double parseval = 0.0, dual = 0.0, collapse = 0.0;
  for (int seed = 1; seed <= s.seeds; ++seed) {
    const GridFunction f = mixed_corpus(static_cast<std::uint64_t>(seed), L);
    const GridFunction sq = dyadic_square(f, root);
    const double m = average(f, root);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      lhs += sq[i] * sq[i];
      rhs += (f[i] - m) * (f[i] - m);
    }
    parseval = std::max(parseval, std::fabs(lhs - rhs) / std::max(1.0, rhs));
    dual = std::max(dual, commutator(log_symbol(L), f).max_discrepancy);
    // [x, H] f at cell i equals (1/pi) times the integral of f outside the truncation window.
    GridFunction x = f.zeros_like();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.midpoint(i);
    const GridFunction c = commutator(x, f).kernel_form;
    const std::size_t dmin = truncation_cells(f.cell_width(), f.cell_width());
    for (std::size_t i = 0; i < f.size(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j)
        if ((i > j ? i - j : j - i) >= dmin) acc += f[j];
      collapse = std::max(collapse, std::fabs(c[i] - acc * f.cell_width() / std::numbers::pi));
    }
  }
  std::size_t kolmogorov_fail = 0, kolmogorov_runs = 0;
  const int kl = std::min(L, 8);
  for (int seed = 1; seed <= s.corpus_count; ++seed) {
    const GridFunction f = mixed_corpus(static_cast<std::uint64_t>(seed), kl);
    const GridFunction g = maximal_singular(f);
    for (const auto& q : enumerate_dyadic_within(root, std::min(kl, 3)))
      for (auto [qq, pp] : {std::pair{0.5, 1.0}, std::pair{1.0, 2.0}, std::pair{0.25, 0.5}}) {
        ++kolmogorov_runs;
        kolmogorov_fail += !kolmogorov_check(g, qq, pp, q).pass();
      }
  }
  r.pass = parseval <= 1e-12 && dual <= 1e-10 && collapse <= 1e-10 && kolmogorov_fail == 0;
  r.seconds = seconds_since(t0);
  r.detail = "Parseval rel err " + fmt("%.2e", parseval) + ", dual-path " + fmt("%.2e", dual) + ", [x,H] collapse " +
             fmt("%.2e", collapse) + ", Kolmogorov " + std::to_string(kolmogorov_fail) + " violations in " +
             std::to_string(kolmogorov_runs);
  note(log, "identities done");
  return r;
}

CriterionResult check_domination(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{8, "pointwise domination ratio stability across resolutions", true, "", 0.0};
  const auto seeds = seed_range(s.domination_seeds);
  std::ostringstream d;
  for (const auto& id : domination_ids()) {
    const DominationReport rep = pointwise_domination_report(id, seeds, s.domination_levels);
    bool ok = true;
    for (double v : rep.sup_ratio) ok = ok && std::isfinite(v) && v > 0.0;
    if (s.thresholds) ok = rep.pass();
    r.pass = r.pass && ok;
    d << id << " " << fmt("%.2f", rep.spread) << (ok ? "" : "!") << "; ";
    note(log, "domination " + id + " spread " + fmt("%.3f", rep.spread));
  }
  r.seconds = seconds_since(t0);
  r.detail = d.str() + "max/min of sup ratio over levels, need < 2";
  return r;
}

CriterionResult check_oracles(const SuiteScale& s, const Progress& log) {
  const auto t0 = Clock::now();
  CriterionResult r{9, "fast paths match brute-force oracles", true, "", 0.0};
  const DyadicIndex root = DyadicIndex::root();
  const double tol = 1e-12;
  struct Tally {
    const char* name;
    int bad = 0;
  };
  Tally tallies[] = {{"maximal"},    {"dyadic maximal"}, {"square"},     {"median"},   {"oscillation"},
                     {"local sharp"}, {"sharp inner"},   {"T*"},         {"A_p"},      {"BMO"}};
  int runs = 0;
  for (int seed = 1; seed <= s.oracle_count; ++seed) {
    const int L = 1 + (seed - 1) % s.oracle_level;
    Rng rng(static_cast<std::uint64_t>(seed) * 7919ULL);
    GridFunction f(Cube{}, L);
    const bool ties = seed % 3 == 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] = ties ? static_cast<double>(rng.below(4)) - 1.5 : rng.normal();
    ++runs;
    tallies[0].bad += !all_close(hl_maximal(f), oracle::hl_maximal(f), tol);
    tallies[1].bad += !all_close(hl_maximal(f, MaximalMode::dyadic), oracle::dyadic_maximal(f), tol) ||
                      !all_close(dyadic_local_maximal(f, root), oracle::dyadic_maximal(f), tol);
    tallies[2].bad += !all_close(dyadic_square(f, root), oracle::dyadic_square(f), tol);
    tallies[3].bad += median(f, root) != oracle::median(f.values());
    for (double lambda : {0.125, 0.25, 0.5, 0.7}) {
      const auto fast = dyadic_oscillations(f, root, lambda);
      std::size_t idx = 0;
      bool ok = true;
      for (std::size_t w = f.size();; w /= 2) {
        for (std::size_t st = 0; st < f.size(); st += w, ++idx)
          ok = ok && close(fast[idx], oracle::oscillation(f.values().subspan(st, w), lambda), tol);
        if (w == 1) break;
      }
      tallies[4].bad += !ok;
      tallies[5].bad += !all_close(local_sharp_maximal(f, root, lambda), oracle::local_sharp_maximal(f, lambda), tol);
    }
    for (double delta : {0.25, 0.5, 1.0})
      tallies[6].bad += !close(sharp_inner_infimum(f.values(), delta), oracle::sharp_inner_infimum(f.values(), delta),
                               1e-9);
    tallies[7].bad += !all_close(maximal_singular(f), oracle::maximal_singular(f), tol);
    const Weight w(f.map([](double v) { return std::exp(v); }));
    tallies[8].bad += !close(ap_constant(w, 2.0), oracle::ap_constant(w, 2.0), tol) ||
                      !close(ap_constant(w, 3.0), oracle::ap_constant(w, 3.0), tol);
    tallies[9].bad += !close(bmo_norm(f, WeightScope::all_intervals), oracle::bmo_norm(f), tol);
  }
  std::ostringstream d;
  int bad = 0;
  for (const auto& t : tallies) {
    bad += t.bad;
    if (t.bad) d << t.name << " mismatches " << t.bad << "; ";
  }
  r.pass = bad == 0;
  r.seconds = seconds_since(t0);
  r.detail = d.str() + std::to_string(runs) + " inputs at L <= " + std::to_string(s.oracle_level) + ", 10 operators";
  note(log, "oracles done");
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteScale& s, const Progress& log) {
  std::vector<CriterionResult> out{check_lerner(s, log),      check_exponents(s, log),
                                   check_ordering(s, log),    check_good_lambda(s, log),
                                   check_weighted_stability(s, log), check_weights(s, log),
                                   check_identities(s, log),  check_domination(s, log),
                                   check_oracles(s, log)};
  if (!s.thresholds)
    for (auto& r : out)
      if (r.id == 2 || r.id == 3 || r.id == 4 || r.id == 5 || r.id == 8) r.detail += " [statistical thresholds off]";
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + fmt("%.1f", r.seconds) + "s)";
}

}  // namespace czlab
