#pragma once

// Brute-force reference implementations: every quantity recomputed from its
// definition with direct sums, for comparison with the fast paths at small
// resolution.

#include <span>

#include "czlab/dyadic.hpp"
#include "czlab/weights.hpp"

namespace czlab::oracle {

/// Direct average of |f| over cells [a, b).
double mean_abs(const GridFunction& f, std::size_t a, std::size_t b);

/// sup over all intervals [a, b) containing the cell.
GridFunction hl_maximal(const GridFunction& f);

/// sup over dyadic cubes of the base containing the cell.
GridFunction dyadic_maximal(const GridFunction& f);

/// sqrt of sum over strict dyadic subcubes Q of the root containing x of
/// (avg_Q f - avg_parent(Q) f)^2.
GridFunction dyadic_square(const GridFunction& f);

/// Lower median by counting: smallest sample with at most n/2 strictly below
/// and at most n/2 strictly above.
double median(std::span<const double> values);

/// min over c of the (floor(lambda n) + 1)-th largest |v - c|, c ranging over
/// all pairwise midpoints.
double oscillation(std::span<const double> values, double lambda);

/// sup over dyadic cubes containing the cell of the brute oscillation.
GridFunction local_sharp_maximal(const GridFunction& f, double lambda);

/// min over sample values c of the mean of |v - c|^delta, to the power 1/delta.
double sharp_inner_infimum(std::span<const double> values, double delta);

/// max over truncation distances d >= 1 of |sum_{|i-j| >= d} f_j / (pi (i - j))|.
GridFunction maximal_singular(const GridFunction& f);

/// A_p constant over dyadic cubes from direct averages.
double ap_constant(const Weight& w, double p);

/// BMO norm over all intervals from direct sums.
double bmo_norm(const GridFunction& b);

}  // namespace czlab::oracle
