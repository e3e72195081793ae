#pragma once

// Level-set decay experiments: phi(t) = |{|T1 f| > t |T2 f|}| / |Q|, fits of
// log phi against t^(1/beta), operator pairs, and good-lambda curves.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czlab/dyadic.hpp"

namespace czlab {

struct DecayCurve {
  std::vector<double> t;
  std::vector<double> phi;
};

/// Sorted per-cell ratios |t1| / |t2| over Q.
struct RatioSample {
  std::vector<double> ratios;  ///< ascending, escaped cells excluded
  std::size_t cells = 0;       ///< cells of Q
  double escaped_fraction = 0.0;

  /// Fraction of Q with ratio > t.
  double phi(double t) const;
};

RatioSample cell_ratios(const GridFunction& t1f, const GridFunction& t2f, const DyadicIndex& q);

struct LevelSetResult {
  DecayCurve curve;
  double escaped_fraction = 0.0;
};

LevelSetResult level_set_ratio(const GridFunction& t1f, const GridFunction& t2f, const DyadicIndex& q,
                               const std::vector<double>& t_grid);

/// max(10 / N, 1e-4).
double default_phi_min(std::size_t cells);

/// Geometric grid from the t with phi = 0.9 to the t where phi reaches phi_min.
std::vector<double> default_t_grid(const RatioSample& sample, std::size_t points, double phi_min);

struct FitReport {
  double beta = 0.0;
  double alpha_hat = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Least squares of log phi on t^(1/beta) over phi in [phi_min, phi_max].
FitReport fit_decay(const DecayCurve& curve, double beta, double phi_min, double phi_max = 0.5);

/// Least squares y = a + b x with R^2; throws InsufficientData below `min_points`.
FitReport linear_fit(const std::vector<double>& x, const std::vector<double>& y, std::size_t min_points = 8);

enum class Pair { feffstein, hilbert, multilinear_model, veccz, vecmax, square, gstar, commutator, commutator_k };

Pair parse_pair(const std::string& name);
std::string pair_name(Pair pair);
const std::vector<std::string>& pair_names();

struct ExperimentOptions {
  double q = 2.0;       ///< vector exponent (veccz, vecmax)
  int k = 2;            ///< commutator order for commutator-k
  double mu = 4.0;      ///< g* exponent
  int scales = 8;       ///< g* scales per octave
  std::size_t t_points = 64;
  std::optional<double> phi_min;
  double phi_max = 0.5;
  std::size_t components = 4;  ///< veccz components
};

std::vector<double> candidate_betas(Pair pair, const ExperimentOptions& opt);
double predicted_beta(Pair pair, const ExperimentOptions& opt);
/// Corpus family used for the pair.
std::string pair_family(Pair pair);

struct PairValues {
  GridFunction t1;
  GridFunction t2;
};

/// Evaluates T1 f and T2 f for the seeded corpus member of the pair.
PairValues evaluate_pair(Pair pair, std::uint64_t seed, int L, const ExperimentOptions& opt);

struct BetaFit {
  FitReport fit;
  bool valid = false;
  std::string note;
};

struct ExperimentResult {
  Pair pair = Pair::hilbert;
  std::uint64_t seed = 0;
  int L = 0;
  DecayCurve curve;
  std::vector<BetaFit> fits;
  std::optional<double> best_beta;
  double predicted = 0.0;
  double escaped_fraction = 0.0;
  std::optional<double> control_a1;  ///< [(T2 f)^(1/2)]_{A_1}^2
};

ExperimentResult run_experiment(Pair pair, std::uint64_t seed, int L, const ExperimentOptions& opt = {});
ExperimentResult analyse_pair(Pair pair, std::uint64_t seed, int L, const PairValues& values,
                              const ExperimentOptions& opt = {});

struct GoodLambdaCurve {
  std::vector<double> gamma;
  std::vector<double> fraction;
  std::size_t cells = 0;
  double superlevel = 0.0;  ///< |{T* f > 2 lambda}| / |Q|, the large-gamma plateau
};

/// Fraction of Q with T* f > 2 lambda and M f <= gamma lambda, per gamma.
GoodLambdaCurve good_lambda_curve(const GridFunction& tstar, const GridFunction& mf, double lambda,
                                  const std::vector<double>& gamma_grid);

/// Geometric gamma grid spanning Mf / lambda over {T* f > 2 lambda}.
std::vector<double> default_gamma_grid(const GridFunction& tstar, const GridFunction& mf, double lambda,
                                       std::size_t points = 48);

/// Fit of log(fraction) against 1 / gamma over the window where the fraction
/// lies in [10 / N, 0.9 superlevel].
FitReport fit_good_lambda(const GoodLambdaCurve& curve, std::size_t min_points = 8);

}  // namespace czlab
