#pragma once

// Distribution functionals of a grid function on a cube: rearrangement,
// median, mean local oscillation, and the local sharp maximal function.

#include <span>

#include "czlab/dyadic.hpp"

namespace czlab {

/// f*(s) on Q in the right-continuous form inf{rho >= 0 : |{|f| > rho}| <= s}.
double decreasing_rearrangement(const GridFunction& f, const DyadicIndex& q, double s);

/// Lower median of equally weighted samples.
double median_of(std::span<const double> values);
/// Lower median of f on Q.
double median(const GridFunction& f, const DyadicIndex& q);

/// Mean local oscillation of already sorted samples: the least half-width of a
/// window holding all but floor(lambda * n) samples.
double oscillation_sorted(std::span<const double> sorted, double lambda);
double oscillation_of(std::span<const double> values, double lambda);
double oscillation(const GridFunction& f, const DyadicIndex& q, double lambda);

/// Supremum of oscillation over the cubes of `family` inside Q0 that contain
/// each cell; zero outside Q0.
GridFunction local_sharp_maximal(const GridFunction& f, const DyadicIndex& q0, double lambda,
                                 CubeFamily family = CubeFamily::dyadic);

/// Per dyadic cube of Q0 (level-major order), its oscillation.
std::vector<double> dyadic_oscillations(const GridFunction& f, const DyadicIndex& q0, double lambda);

}  // namespace czlab
