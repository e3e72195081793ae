#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "czlab/checks.hpp"
#include "czlab/corpus.hpp"
#include "czlab/decay.hpp"
#include "czlab/error.hpp"
#include "czlab/lerner.hpp"
#include "czlab/parallel.hpp"
#include "czlab/rearrangement.hpp"
#include "czlab/singular.hpp"
#include "czlab/suite.hpp"
#include "czlab/weights.hpp"

namespace czlab::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string config_scalar(const std::string& key, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw CLI::ConfigError("config key '" + key + "' must hold a scalar or an array of scalars");
}

/// Fills options of `cmd` that were not given on the command line from a flat
/// JSON object whose keys are long option names without dashes.
void apply_config(CLI::App* cmd, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CLI::ConfigError("cannot open config file " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CLI::ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    CLI::Option* opt = key == "config" ? nullptr : cmd->get_option_no_throw("--" + key);
    if (opt == nullptr) throw CLI::ConfigError("unknown config key '" + key + "' for " + cmd->get_name());
    if (opt->count() > 0) continue;
    std::vector<std::string> inputs;
    if (value.is_array())
      for (const auto& v : value) inputs.push_back(config_scalar(key, v));
    else
      inputs.push_back(config_scalar(key, value));
    for (const auto& in : inputs) opt->add_result(in);
    opt->run_callback();
  }
}

json fit_json(const BetaFit& f) {
  json j{{"beta", f.fit.beta}, {"valid", f.valid}};
  if (f.valid) {
    j["alpha_hat"] = f.fit.alpha_hat;
    j["r_squared"] = f.fit.r_squared;
    j["points"] = f.fit.points_used;
  } else {
    j["note"] = f.note;
  }
  return j;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<std::uint64_t> seeds_from(std::uint64_t first, int count) {
  std::vector<std::uint64_t> s;
  for (int i = 0; i < count; ++i) s.push_back(first + static_cast<std::uint64_t>(i));
  return s;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot write " + path.string());
  os << text;
}

std::string csv_curve(const char* xname, const char* yname, const std::vector<double>& x,
                      const std::vector<double>& y) {
  std::ostringstream os;
  os << xname << "," << yname << "\n";
  for (std::size_t i = 0; i < x.size(); ++i) os << format_double(x[i]) << "," << format_double(y[i]) << "\n";
  return os.str();
}

/// Merges entries into summary.json, replacing entries with the same key.
void merge_summary(const fs::path& path, const std::vector<json>& entries) {
  std::map<std::string, json> by_key;
  auto key_of = [](const json& e) {
    std::ostringstream k;
    k << e.at("pair").get<std::string>() << "|" << e.at("L").get<int>() << "|" << e.at("params").dump() << "|";
    k.width(20);
    k.fill('0');
    k << e.at("seed").get<std::uint64_t>();
    return k.str();
  };
  if (fs::exists(path)) {
    std::ifstream is(path);
    json old;
    try {
      is >> old;
      for (const auto& e : old.at("experiments")) by_key[key_of(e)] = e;
    } catch (const json::exception&) {
      throw FormatError("existing summary is not a decay summary: " + path.string());
    }
  }
  for (const auto& e : entries) by_key[key_of(e)] = e;
  json doc{{"schema", "czlab-decay-summary v1"}, {"rng", "czlab-rng v1"}, {"experiments", json::array()}};
  for (auto& [k, e] : by_key) doc["experiments"].push_back(e);
  write_text(path, doc.dump(2) + "\n");
}

struct Common {
  std::uint64_t seed = 1;
  int count = 1;
  int level = 10;
  std::string outdir;
};

void add_common(CLI::App* cmd, Common& c, int default_level) {
  c.level = default_level;
  cmd->add_option("--seed", c.seed, "first seed")->capture_default_str();
  cmd->add_option("--count", c.count, "number of consecutive seeds")->check(CLI::Range(1, 100000))->capture_default_str();
  cmd->add_option("--level", c.level, "grid level L (N = 2^L cells)")->check(CLI::Range(1, 20))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"czlab: numerical laboratory for local oscillation and sparse domination"};
  app.require_subcommand(1);

  std::map<CLI::App*, std::string> config_paths;
  auto with_config = [&config_paths](CLI::App* cmd) {
    cmd->add_option("--config", config_paths[cmd], "JSON file of option values; flags override it");
  };

  // decay
  Common dc;
  std::string pair_id;
  ExperimentOptions dopt;
  double phi_min = 0.0;
  auto* decay = app.add_subcommand("decay", "level-set decay curve and exponent fits");
  with_config(decay);
  add_common(decay, dc, 12);
  dc.outdir = "out";
  decay->add_option("--pair", pair_id, "operator pair id (required)");
  decay->add_option("--q", dopt.q, "vector exponent")->capture_default_str();
  decay->add_option("--k", dopt.k, "commutator order for commutator-k")->check(CLI::Range(1, 8))->capture_default_str();
  decay->add_option("--mu", dopt.mu, "g* exponent (> 3)")->capture_default_str();
  decay->add_option("--scales", dopt.scales, "g* scales per octave (>= 8)")->capture_default_str();
  decay->add_option("--components", dopt.components, "veccz components")->check(CLI::Range(1, 64))->capture_default_str();
  decay->add_option("--t-points", dopt.t_points, "t grid size")->check(CLI::Range(2, 100000))->capture_default_str();
  auto* phi_min_opt = decay->add_option("--phi-min", phi_min, "fit window floor (default max(10/N, 1e-4))");
  decay->add_option("--phi-max", dopt.phi_max, "fit window ceiling")->capture_default_str();
  decay->add_option("--outdir", dc.outdir, "output directory")->capture_default_str();

  // goodlambda
  Common gc;
  std::string gfamily = "haarsum";
  double glambda = 0.0;
  std::size_t gpoints = 48;
  auto* good = app.add_subcommand("goodlambda", "good-lambda measure fractions against gamma");
  with_config(good);
  add_common(good, gc, 12);
  good->add_option("--family", gfamily, "corpus family")->capture_default_str();
  auto* glambda_opt = good->add_option("--lambda", glambda, "level (default: median of T* f)");
  good->add_option("--points", gpoints, "gamma grid size")->check(CLI::Range(2, 100000))->capture_default_str();
  good->add_option("--outdir", gc.outdir, "write goodlambda_<seed>_L<L>.csv here");

  // lerner
  Common lc;
  std::string lfamily = "mixed";
  bool verify = false;
  double c1 = 4.0, c2 = 4.0;
  auto* lern = app.add_subcommand("lerner", "sparse family construction and checks");
  with_config(lern);
  add_common(lern, lc, 10);
  lern->add_option("--family", lfamily, "corpus family")->capture_default_str();
  lern->add_flag("--verify", verify, "audit the family and the pointwise bound");
  lern->add_option("--c1", c1, "constant on the local sharp maximal term")->capture_default_str();
  lern->add_option("--c2", c2, "constant on the sparse sum")->capture_default_str();
  lern->add_option("--outdir", lc.outdir, "write lerner_<seed>_L<L>.json here");

  // weights
  Common wc;
  std::string wspec = "power:0.5", wscope = "dyadic", wcheck = "none";
  double wp = 2.0, wr = 2.0;
  auto* wts = app.add_subcommand("weights", "weight constants and weight checks");
  with_config(wts);
  add_common(wts, wc, 10);
  wts->add_option("--weight", wspec, "power:a | cr:delta:seed | const")->capture_default_str();
  wts->add_option("--p", wp, "A_p exponent (> 1)")->capture_default_str();
  wts->add_option("--scope", wscope, "dyadic | all")->capture_default_str();
  wts->add_option("--check", wcheck, "none | factorization | cr | mcr | rubio")->capture_default_str();
  wts->add_option("--r", wr, "Rubio de Francia exponent")->capture_default_str();

  // cf
  Common cc;
  std::string cop = "tstar", cweight = "power:0.5";
  double cq = 2.0, cdelta = 0.5;
  int ck = 1;
  auto* cf = app.add_subcommand("cf", "weighted local norm inequalities");
  with_config(cf);
  add_common(cf, cc, 10);
  cf->add_option("--op", cop, "tstar | veccz | multilinear-model | square | commutator | median-deviation")
      ->capture_default_str();
  cf->add_option("--weight", cweight, "weight spec")->capture_default_str();
  cf->add_option("--q", cq, "A_q exponent")->capture_default_str();
  cf->add_option("--k", ck, "commutator order")->check(CLI::Range(0, 8))->capture_default_str();
  cf->add_option("--delta", cdelta, "sharp maximal exponent for median-deviation")->capture_default_str();

  // dominate
  std::string did = "all";
  int dseeds = 20;
  std::vector<int> dlevels{8, 10, 12};
  auto* dom = app.add_subcommand("dominate", "pointwise domination sup-ratios across levels");
  with_config(dom);
  dom->add_option("--id", did, "inequality id or 'all'")->capture_default_str();
  dom->add_option("--seeds", dseeds, "seeds 1..n")->check(CLI::Range(1, 100000))->capture_default_str();
  dom->add_option("--levels", dlevels, "grid levels")->delimiter(',')->check(CLI::Range(1, 20))->capture_default_str();

  // suite
  std::string sname;
  auto* suite = app.add_subcommand("suite", "acceptance matrix (smoke | full)");
  suite->add_option("name", sname, "smoke | full")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    for (auto& [cmd, path] : config_paths)
      if (*cmd && !path.empty()) apply_config(cmd, path);
    if (*decay && pair_id.empty()) throw CLI::RequiredError("--pair");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config_error;
  }

  try {
    if (*decay) {
      const Pair pair = parse_pair(pair_id);
      if (*phi_min_opt) dopt.phi_min = phi_min;
      if (!(dopt.q > 1.0)) throw DomainError("q must exceed 1");
      if (!(dopt.mu > 3.0)) throw DomainError("mu must exceed 3");
      if (dopt.scales < 8) throw DomainError("scales must be at least 8");
      const auto seeds = seeds_from(dc.seed, dc.count);
      std::vector<ExperimentResult> results(seeds.size());
      std::vector<std::string> errors(seeds.size());
      parallel_for(seeds.size(), [&](std::size_t i) {
        try {
          results[i] = run_experiment(pair, seeds[i], dc.level, dopt);
        } catch (const InsufficientData& e) {
          errors[i] = e.what();
        }
      });
      fs::create_directories(dc.outdir);
      std::vector<json> entries;
      int status = exit_ok;
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!errors[i].empty()) {
          err << "check failed: decay curve for " << pair_id << " seed " << seeds[i] << ": " << errors[i] << "\n";
          status = exit_check_failed;
          continue;
        }
        const auto& r = results[i];
        const std::string stem = pair_id + "_" + std::to_string(seeds[i]) + "_L" + std::to_string(dc.level);
        write_text(fs::path(dc.outdir) / (stem + ".csv"), csv_curve("t", "phi", r.curve.t, r.curve.phi));
        json e{{"pair", pair_id},
               {"seed", seeds[i]},
               {"L", dc.level},
               {"family", pair_family(pair)},
               {"params",
                {{"q", dopt.q}, {"k", dopt.k}, {"mu", dopt.mu}, {"scales", dopt.scales}, {"components", dopt.components}}},
               {"predicted_beta", r.predicted},
               {"chosen_beta", optional_json(r.best_beta)},
               {"control_a1", optional_json(r.control_a1)},
               {"escaped_fraction", r.escaped_fraction},
               {"fits", json::array()}};
        for (const auto& f : r.fits) e["fits"].push_back(fit_json(f));
        if (!r.best_beta) {
          err << "check failed: no valid fit for " << stem << "\n";
          status = exit_check_failed;
        }
        entries.push_back(e);
      }
      merge_summary(fs::path(dc.outdir) / "summary.json", entries);
      out << json(entries).dump(2) << "\n";
      return status;
    }

    if (*good) {
      json report = json::array();
      int status = exit_ok;
      for (auto seed : seeds_from(gc.seed, gc.count)) {
        const GridFunction f = named_family(gfamily, seed, gc.level);
        const GridFunction ts = maximal_singular(f);
        const GridFunction mf = hl_maximal(f);
        const double lambda = *glambda_opt ? glambda : median(ts, DyadicIndex::root());
        if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
        json e{{"family", gfamily}, {"seed", seed}, {"L", gc.level}, {"lambda", lambda}};
        try {
          const auto curve = good_lambda_curve(ts, mf, lambda, default_gamma_grid(ts, mf, lambda, gpoints));
          e["superlevel"] = curve.superlevel;
          if (!gc.outdir.empty()) {
            fs::create_directories(gc.outdir);
            write_text(fs::path(gc.outdir) /
                           ("goodlambda_" + std::to_string(seed) + "_L" + std::to_string(gc.level) + ".csv"),
                       csv_curve("gamma", "fraction", curve.gamma, curve.fraction));
          }
          const FitReport fit = fit_good_lambda(curve);
          e["slope"] = -fit.alpha_hat;
          e["r_squared"] = fit.r_squared;
          e["points"] = fit.points_used;
        } catch (const InsufficientData& ex) {
          err << "check failed: good-lambda fit for seed " << seed << ": " << ex.what() << "\n";
          e["note"] = ex.what();
          status = exit_check_failed;
        }
        report.push_back(e);
      }
      out << report.dump(2) << "\n";
      return status;
    }

    if (*lern) {
      json report = json::array();
      int status = exit_ok;
      const DyadicIndex root = DyadicIndex::root();
      for (auto seed : seeds_from(lc.seed, lc.count)) {
        const GridFunction f = named_family(lfamily, seed, lc.level);
        const SparseFamily fam = lerner_decompose(f, root);
        json e{{"family", lfamily}, {"seed", seed}, {"L", lc.level}, {"cubes", fam.cube_count()},
               {"generations", fam.levels.size()}};
        if (verify) {
          const FamilyReport rep = verify_family(f, fam);
          json props = json::object();
          for (const auto& p : rep.properties) {
            props[p.name] = {{"pass", p.pass}, {"worst", p.worst}};
            if (!p.pass) {
              err << "check failed: " << p.name << " (seed " << seed << ")\n";
              status = exit_check_failed;
            }
          }
          const BoundReport b = pointwise_bound_check(f, root, fam, c1, c2);
          e["properties"] = props;
          e["bound"] = {{"violations", b.violations}, {"max_excess", b.max_excess}, {"min_slack", b.min_slack},
                        {"mean_slack", b.mean_slack}};
          if (!b.pass()) {
            err << "check failed: pointwise bound, " << b.violations << " violations (seed " << seed << ")\n";
            status = exit_check_failed;
          }
        }
        if (!lc.outdir.empty()) {
          fs::create_directories(lc.outdir);
          write_text(fs::path(lc.outdir) / ("lerner_" + std::to_string(seed) + "_L" + std::to_string(lc.level) + ".json"),
                     family_to_json(fam) + "\n");
        }
        report.push_back(e);
      }
      out << report.dump(2) << "\n";
      return status;
    }

    if (*wts) {
      const WeightScope scope = parse_weight_scope(wscope);
      const Weight w = make_weight(wspec, wc.level);
      json e{{"weight", wspec}, {"L", wc.level}, {"scope", wscope}, {"p", wp},
             {"ap", ap_constant(w, wp, scope)}, {"a1", a1_constant(w, scope)}, {"bmo_log", bmo_norm(w.values().map([](double v) { return std::log(v); }), scope)}};
      int status = exit_ok;
      auto fail = [&](const std::string& what) {
        err << "check failed: " << what << "\n";
        status = exit_check_failed;
      };
      if (wcheck == "factorization") {
        json runs = json::array();
        for (auto seed : seeds_from(wc.seed, wc.count)) {
          const Weight w1 = make_weight("cr:0.5:" + std::to_string(seed), wc.level);
          const Weight w2 = make_weight("cr:0.7:" + std::to_string(seed + 1000), wc.level);
          const auto r = factorization_check(w1, w2, wp, scope);
          runs.push_back({{"seed", seed}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass()}});
          if (!r.pass()) fail("factorization, seed " + std::to_string(seed));
        }
        e["factorization"] = runs;
      } else if (wcheck == "cr" || wcheck == "mcr") {
        json runs = json::array();
        for (auto seed : seeds_from(wc.seed, wc.count)) {
          Rng rng(seed);
          auto spikes = [&] {
            GridFunction mu(Cube{}, wc.level);
            const int n = 1 + static_cast<int>(rng.below(4));
            for (int k = 0; k < n; ++k)
              mu[rng.below(mu.size())] += rng.uniform(0.5, 1.0) * static_cast<double>(mu.size());
            return mu;
          };
          const GridFunction a = spikes();
          const GrowthReport r = wcheck == "cr" ? coifman_rochberg_check(a)
                                                : multilinear_cr_check(MultiArg(std::vector<GridFunction>{a, spikes()}));
          json pts = json::array();
          for (const auto& p : r.points) pts.push_back({{"delta", p.delta}, {"a1", p.a1}, {"normalized", p.normalized}});
          runs.push_back({{"seed", seed}, {"points", pts}, {"worst_ratio", r.worst_ratio}, {"pass", r.pass()}});
          if (!r.pass()) fail(wcheck + " growth, seed " + std::to_string(seed));
        }
        e[wcheck] = runs;
      } else if (wcheck == "rubio") {
        std::vector<GridFunction> hs;
        for (auto seed : seeds_from(wc.seed, wc.count))
          hs.push_back(haar_family(seed, wc.level).map([](double v) { return std::fabs(v); }));
        const double bound = default_norm_bound(wr);
        const double measured = measured_maximal_norm(hs, wr);
        if (measured > bound) fail("maximal norm bound not validated");
        json runs = json::array();
        for (std::size_t i = 0; i < hs.size(); ++i) {
          const RubioReport r = rubio_de_francia(hs[i], wr, bound, 1e-12);
          runs.push_back({{"seed", wc.seed + i}, {"terms", r.terms}, {"min_gap", r.min_gap},
                          {"norm_ratio", r.norm_ratio}, {"a1_ratio", r.a1_ratio}, {"pass", r.pass(1e-9)}});
          if (!r.pass(1e-9)) fail("Rubio de Francia, seed " + std::to_string(wc.seed + i));
        }
        e["rubio"] = {{"r", wr}, {"norm_bound", bound}, {"measured_norm", measured}, {"runs", runs}};
      } else if (wcheck != "none") {
        throw DomainError("unknown weight check: " + wcheck);
      }
      out << e.dump(2) << "\n";
      return status;
    }

    if (*cf) {
      const Weight w = make_weight(cweight, cc.level);
      json report = json::array();
      int status = exit_ok;
      const bool known = cop == "commutator" || cop == "median-deviation";
      const CfOperator op = known ? CfOperator::tstar : parse_cf_operator(cop);
      for (auto seed : seeds_from(cc.seed, cc.count)) {
        CfReport r;
        if (cop == "commutator") {
          r = cf_commutator_check(log_symbol(cc.level), haar_family(seed, cc.level), w, cq, ck);
        } else if (cop == "median-deviation") {
          r = previo_check(haar_family(seed, cc.level), w, cq, cdelta);
        } else {
          const std::size_t comps = op == CfOperator::veccz ? 4 : op == CfOperator::multilinear_model ? 2 : 1;
          r = cf_local_check(op, haar_vector(seed, cc.level, comps), w, cq);
        }
        report.push_back({{"op", cop}, {"weight", cweight}, {"seed", seed}, {"L", cc.level}, {"q", cq},
                          {"lhs", r.lhs}, {"rhs", r.rhs}, {"ap", r.ap}, {"normalizer", r.normalizer}, {"ratio", r.ratio}});
        if (!std::isfinite(r.ratio)) {
          err << "check failed: non-finite normalized ratio (seed " << seed << ")\n";
          status = exit_check_failed;
        }
      }
      out << report.dump(2) << "\n";
      return status;
    }

    if (*dom) {
      std::vector<std::string> ids = did == "all" ? domination_ids() : std::vector<std::string>{did};
      const auto seeds = seeds_from(1, dseeds);
      json report = json::array();
      int status = exit_ok;
      for (const auto& id : ids) {
        const DominationReport r = pointwise_domination_report(id, seeds, dlevels);
        report.push_back({{"id", id}, {"levels", r.levels}, {"sup_ratio", r.sup_ratio}, {"spread", r.spread},
                          {"pass", r.pass()}});
        if (!r.pass()) {
          err << "check failed: domination " << id << " spread " << r.spread << "\n";
          status = exit_check_failed;
        }
      }
      out << report.dump(2) << "\n";
      return status;
    }

    if (*suite) {
      SuiteScale scale;
      if (sname == "smoke")
        scale = smoke_scale();
      else if (sname == "full")
        scale = full_scale();
      else
        throw DomainError("unknown suite: " + sname);
      int failed = 0;
      for (const auto& r : run_suite(scale)) {
        out << format_result(r) << "\n";
        if (!r.pass) {
          err << "check failed: criterion " << r.id << " (" << r.name << ")\n";
          ++failed;
        }
      }
      return failed == 0 ? exit_ok : exit_check_failed;
    }
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const InvalidCube& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_config_error;
}

}  // namespace czlab::cli
