#pragma once

// Seeded test-function corpus. The generator is "czlab-rng v1": mt19937_64
// with 53-bit uniforms (top 53 bits scaled by 2^-53) and Box-Muller normals
// that use two fresh uniforms per draw, so streams are identical on every
// platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "czlab/dyadic.hpp"
#include "czlab/maximal.hpp"

namespace czlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Independent child stream.
  Rng derive(std::uint64_t salt);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Unnormalized Haar function of cube (k, j): +1 on the left half, -1 on the right.
GridFunction haar_function(const DyadicIndex& q, int L);

/// sum over levels lo..hi and positions of N(0,1) 2^(-k decay) h_{k,j}, drawn
/// level-major so coarse levels agree across resolutions.
GridFunction haar_sum(Rng& rng, int L, int lo, int hi, double decay);

/// h_0 + 0.3 * haar_sum(levels 1..L-2, decay 1/2).
GridFunction haar_family(std::uint64_t seed, int L);

/// haar_sum(levels 1..L-2, decay 0): unit-variance coefficients on every level.
GridFunction haar_sum_family(std::uint64_t seed, int L);

/// log(|x - p2| / |x - p|), poles p in [0.1, 0.45], p2 in [0.55, 0.9].
GridFunction bmo_family(std::uint64_t seed, int L);

/// cos(kappa log|x - p| + phase), kappa = (pi / ln 2) U[0.7, 1.3], p in [0.2, 0.8].
GridFunction oscillating_family(std::uint64_t seed, int L);

/// One Haar term per level along the dyadic chain of p in [0.2, 0.8], signed so
/// the partial sums at p alternate 1, 0, 1, ...; |f| <= 2 while S_d f grows
/// like the square root of the branching level.
GridFunction chain_family(std::uint64_t seed, int L);

/// Indicators of geometric rings around p in [0.2, 0.8], radii e^(-j s) with
/// s in [0.5, 1], one per component.
VectorGridFunction rings_family(std::uint64_t seed, int L);

/// J components of the Haar family with derived seeds.
VectorGridFunction haar_vector(std::uint64_t seed, int L, std::size_t J);

/// height * chi of one cell.
GridFunction spike(int L, std::size_t cell, double height);
/// chi of [a, b) on [0, 1) at cell resolution.
GridFunction indicator(int L, double a, double b);

/// Mixed corpus member for structural suites: cycles through Haar sums,
/// BMO logs, oscillating functions, spikes and indicators by seed.
GridFunction mixed_corpus(std::uint64_t seed, int L);

/// Canonical BMO symbol log|x - 1/2| at midpoints.
GridFunction log_symbol(int L, double x0 = 0.5);

/// Named families accepted by the CLI: haar, haarsum, bmo, osc, chain, mixed.
GridFunction named_family(const std::string& name, std::uint64_t seed, int L);

}  // namespace czlab
