#pragma once

// Sparse stopping-time family bounding |f - m_f(Q0)| by local oscillations.

#include <string>
#include <vector>

#include "czlab/dyadic.hpp"

namespace czlab {

/// Cubes Q_j^k by generation k = 1, 2, ... with Omega_k and E_j^k.
struct SparseFamily {
  DyadicIndex root;
  int resolution = 0;
  std::vector<std::vector<DyadicIndex>> levels;  ///< levels[k-1] = generation k
  std::vector<CellSet> omega;                    ///< union of each generation
  std::vector<std::vector<CellSet>> ejk;         ///< Q_j^k minus Omega_{k+1}

  std::size_t cube_count() const;
  bool empty() const { return cube_count() == 0; }
};

/// Fills omega and ejk from root, resolution and levels.
void rebuild_sets(SparseFamily& fam);

/// Exceptional set {x in Q : |f - m_f(Q)| > 2 omega_{1/4}(f;Q)}.
CellSet exceptional_set(const GridFunction& f, const DyadicIndex& q);

/// Stopping-time construction inside Q0.
SparseFamily lerner_decompose(const GridFunction& f, const DyadicIndex& q0);

struct PropertyResult {
  std::string name;
  bool pass = true;
  double worst = 0.0;  ///< worst observed ratio for the property
};

struct FamilyReport {
  std::vector<PropertyResult> properties;
  bool pass() const;
};

/// Exact cell-count audit of disjointness, nesting, half-measure and
/// disjoint-owner properties.
FamilyReport verify_family(const GridFunction& f, const SparseFamily& fam);

struct BoundReport {
  double max_excess = 0.0;  ///< max over cells of LHS - RHS
  double min_slack = 0.0;   ///< min over cells of RHS - LHS
  double mean_slack = 0.0;
  std::size_t violations = 0;
  bool pass() const { return violations == 0; }
};

/// |f - m_f(Q0)| <= c1 M#_{1/4;Q0} f + c2 sum omega_{1/8}(f; parent(Q)) chi_Q at every cell of Q0.
BoundReport pointwise_bound_check(const GridFunction& f, const DyadicIndex& q0, const SparseFamily& fam,
                                  double c1 = 4.0, double c2 = 4.0);

/// JSON: {"root":[k,j],"resolution":L,"levels":[[[k,j],...],...]}.
std::string family_to_json(const SparseFamily& fam);
SparseFamily family_from_json(const std::string& text);

}  // namespace czlab
