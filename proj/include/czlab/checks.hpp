#pragma once

// Weighted local norm inequalities, Kolmogorov and weak L log L checks, and
// pointwise domination sup-ratios across resolutions.

#include <cstdint>
#include <string>
#include <vector>

#include "czlab/dyadic.hpp"
#include "czlab/maximal.hpp"
#include "czlab/weights.hpp"

namespace czlab {

enum class CfOperator { tstar, veccz, multilinear_model, square };

CfOperator parse_cf_operator(const std::string& name);
std::string cf_operator_name(CfOperator op);

struct CfReport {
  double lhs = 0.0;
  double rhs = 0.0;         ///< control norm before normalization
  double ap = 0.0;          ///< [w]_{A_q}
  double normalizer = 0.0;  ///< factor multiplying rhs
  double ratio = 0.0;       ///< lhs / (normalizer * rhs)
};

/// ||T f||_{L^1(w,Q)} against 2^q [w]_{A_q} ||control||_{L^1(w,Q)} on the root;
/// the square function compares int (S_d f)^2 w with int (M f)^2 w. `args`
/// carries f, the vector components, or the multilinear arguments.
CfReport cf_local_check(CfOperator op, const VectorGridFunction& args, const Weight& w, double q);

/// ||T^k_b f|| against ||b||^k 2^((k+1) q) [w]^(k+1) ||M^(k+1) f||.
CfReport cf_commutator_check(const GridFunction& b, const GridFunction& f, const Weight& w, double q, int k);

/// ||f - m_f(Q)|| against 2^q [w]_{A_q} ||M^{#,d}_delta f||.
CfReport previo_check(const GridFunction& f, const Weight& w, double q, double delta);

struct KolmogorovReport {
  double lhs = 0.0;
  double weak_norm = 0.0;
  double constant = 0.0;
  bool pass() const { return lhs <= constant * weak_norm * (1.0 + 1e-12); }
};

/// (avg_Q g^q)^(1/q) <= (p/(p-q))^(1/q) ||g||_{L^{p,inf}(Q, dx/|Q|)}.
KolmogorovReport kolmogorov_check(const GridFunction& g, double q, double p, const DyadicIndex& cube);

/// Weak norm sup_t t (|{|g| > t}| / |Q|)^(1/p), exact on sorted samples.
double weak_norm(std::span<const double> values, double p);

struct WeakLLogLReport {
  std::vector<double> lambda;
  std::vector<double> ratio;  ///< |{|[b,T] f| > lambda}| / int Phi(|f| / lambda)
  double sup_ratio = 0.0;
};

WeakLLogLReport weak_llogl_check(const GridFunction& b, const GridFunction& f, const std::vector<double>& lambda_grid);

/// Geometric lambda grid over the range of |[b,T] f|.
std::vector<double> default_lambda_grid(const GridFunction& b, const GridFunction& f, std::size_t points = 24);

/// Pointwise inequality ids: sharp-local sharp-power sharp-tstar sharp-veccz
/// sharp-multilinear sharp-commutator square-cubes square-local vecmax-cubes.
const std::vector<std::string>& domination_ids();

/// Largest LHS / RHS over cells (or dyadic cubes for square-cubes and vecmax-cubes) for one seed.
double domination_ratio(const std::string& id, std::uint64_t seed, int L);

struct DominationReport {
  std::string id;
  std::vector<int> levels;
  std::vector<double> sup_ratio;  ///< per level, sup over seeds
  double spread = 0.0;            ///< max / min over levels
  bool pass() const;
};

DominationReport pointwise_domination_report(const std::string& id, const std::vector<std::uint64_t>& seeds,
                                             const std::vector<int>& levels);

}  // namespace czlab
