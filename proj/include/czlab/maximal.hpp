#pragma once

// Maximal operators on grid functions: Hardy-Littlewood (exact and fast),
// dyadic local, power and sharp variants, iterates, vector-valued and
// multilinear versions.

#include <optional>
#include <vector>

#include "czlab/dyadic.hpp"

namespace czlab {

/// Components f_1..f_J on one grid.
class VectorGridFunction {
 public:
  VectorGridFunction() = default;
  explicit VectorGridFunction(std::vector<GridFunction> components);

  std::size_t count() const { return components_.size(); }
  const GridFunction& operator[](std::size_t j) const { return components_[j]; }
  const std::vector<GridFunction>& components() const { return components_; }
  const GridFunction& front() const { return components_.front(); }

  /// Per cell (sum_j |f_j|^q)^(1/q).
  GridFunction pointwise_norm(double q) const;

 private:
  std::vector<GridFunction> components_;
};

/// Argument tuple (f_1..f_m) of a multilinear operator.
using MultiArg = VectorGridFunction;

/// Which intervals a Hardy-Littlewood supremum ranges over.
enum class MaximalMode {
  exact,   ///< all grid-aligned intervals of the root, O(N^2)
  fast,    ///< dyadic plus one-third shifted dyadic intervals, O(N log N)
  dyadic,  ///< dyadic intervals only
};

MaximalMode parse_maximal_mode(const std::string& name);

/// Uncentered maximal function of |f| over the root cube.
GridFunction hl_maximal(const GridFunction& f, MaximalMode mode = MaximalMode::exact);

/// Dyadic maximal function localized to Q0; zero outside Q0.
GridFunction dyadic_local_maximal(const GridFunction& f, const DyadicIndex& q0);

/// Maximal average of |f| over an arbitrary interval family inside Q0.
GridFunction family_maximal(const GridFunction& f, const DyadicIndex& q0, CubeFamily family);

/// (M(|f|^delta))^(1/delta).
GridFunction m_delta(const GridFunction& f, double delta, MaximalMode mode = MaximalMode::exact);

/// inf over c of ((1/n) sum |v_i - c|^delta)^(1/delta).
double sharp_inner_infimum(std::span<const double> values, double delta);

/// Sharp maximal function: sup over admissible cubes of the best-constant
/// L^delta oscillation. `local_root` defaults to the whole grid.
GridFunction sharp_maximal(const GridFunction& f, double delta, CubeFamily family = CubeFamily::dyadic,
                           std::optional<DyadicIndex> local_root = std::nullopt);

/// k-fold composition of hl_maximal.
GridFunction iterated_maximal(const GridFunction& f, int k, MaximalMode mode = MaximalMode::exact);

/// (sum_j (M f_j)^q)^(1/q).
GridFunction vector_maximal(const VectorGridFunction& f, double q, MaximalMode mode = MaximalMode::exact);

/// sup over intervals containing x of prod_i avg |f_i|.
GridFunction multilinear_maximal(const MultiArg& fvec, MaximalMode mode = MaximalMode::exact);

}  // namespace czlab
