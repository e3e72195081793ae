#pragma once

// Muckenhoupt weights on the grid: A_p and A_1 constants, BMO, factorization,
// Coifman-Rochberg growth, Rubio de Francia majorants, weighted norms.

#include <cstdint>
#include <string>
#include <vector>

#include "czlab/dyadic.hpp"
#include "czlab/maximal.hpp"

namespace czlab {

/// Strictly positive grid function.
class Weight {
 public:
  explicit Weight(GridFunction values);
  const GridFunction& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  GridFunction values_;
};

/// Cube scopes for weight constants.
enum class WeightScope { dyadic, all_intervals };

WeightScope parse_weight_scope(const std::string& name);

/// sup over cubes of (avg w) (avg w^(1-p'))^(p-1).
double ap_constant(const Weight& w, double p, WeightScope scope = WeightScope::dyadic);

/// max over cells of Mw / w; exact M for all_intervals, dyadic M otherwise.
double a1_constant(const Weight& w, WeightScope scope = WeightScope::all_intervals);
/// Same, for a raw function (throws DomainError on a non-positive cell).
double a1_constant(const GridFunction& w, WeightScope scope = WeightScope::all_intervals);

struct FactorizationReport {
  double lhs = 0.0;  ///< [w1 w2^(1-p)]_{A_p}
  double rhs = 0.0;  ///< [w1]_{A_1} [w2]_{A_1}^(p-1)
  bool pass() const { return lhs <= rhs * (1.0 + 1e-12); }
};

FactorizationReport factorization_check(const Weight& w1, const Weight& w2, double p,
                                        WeightScope scope = WeightScope::dyadic);

/// sup over cubes of the mean of |b - b_Q|.
double bmo_norm(const GridFunction& b, WeightScope scope = WeightScope::dyadic);

/// Largest measured ||Mg||_r / ||g||_r over a corpus.
double measured_maximal_norm(const std::vector<GridFunction>& corpus, double r);

/// Default norm bound 8 r'.
double default_norm_bound(double r);

struct RubioReport {
  GridFunction result;
  int terms = 0;
  double min_gap = 0.0;      ///< min over cells of Rh - h (property i)
  double norm_ratio = 0.0;   ///< ||Rh||_r / ||h||_r (property ii, <= 2)
  double a1_ratio = 0.0;     ///< max M(Rh) / (2 A Rh) (property iii, <= 1)
  bool pass(double tol) const;
};

/// sum_k (M^k h) / (2A)^k truncated once the next term is below tol.
RubioReport rubio_de_francia(const GridFunction& h, double r, double norm_bound, double tol);

struct GrowthPoint {
  double delta = 0.0;
  double a1 = 0.0;
  double normalized = 0.0;  ///< (1 - m delta) a1
};

struct GrowthReport {
  std::vector<GrowthPoint> points;  ///< first entry is the reference
  double worst_ratio = 0.0;         ///< max normalized / reference normalized
  bool pass() const { return worst_ratio <= 2.0; }
};

/// A_1 constant of (M mu)^delta at the reference delta 0.5 and at the sweep.
GrowthReport coifman_rochberg_check(const GridFunction& mu, const std::vector<double>& sweep = {0.75, 0.9, 0.95},
                                    double reference = 0.5);
/// A_1 constant of (M mu)^delta.
double coifman_rochberg_constant(const GridFunction& mu, double delta);

/// Multilinear analogue with normalizer 1 - m delta.
GrowthReport multilinear_cr_check(const MultiArg& mu, const std::vector<double>& sweep = {0.35, 0.45},
                                  double reference = 0.2);
double multilinear_cr_constant(const MultiArg& mu, double delta);

/// sum over cells of Q of |f| w |cell|.
double weighted_l1_norm(const GridFunction& f, const Weight& w, const DyadicIndex& q);

struct SteinReport {
  double lhs = 0.0;  ///< int_Q w log(e + w / w_Q)
  double rhs = 0.0;  ///< int_Q M(w chi_Q)
  double ratio = 0.0;
};

SteinReport stein_llogl_check(const Weight& w, const DyadicIndex& q);

/// Generators: `power:a` (|x - 1/2|^a at midpoints), `cr:delta:seed` ((Mg)^delta
/// for seeded noise g), `const`.
Weight make_weight(const std::string& spec, int L);

}  // namespace czlab
