#pragma once

// Singular integral operators on grid functions: the truncated Hilbert
// transform and its maximal version, commutators with a symbol b, vector
// extension, and the dyadic and continuous square functions.

#include <cstdint>
#include <functional>
#include <string>

#include "czlab/dyadic.hpp"
#include "czlab/maximal.hpp"

namespace czlab {

/// Kernel K(x,y) with declared size and Hoelder regularity constants.
struct Kernel {
  std::string name;
  std::function<double(double, double)> evaluate;
  double size_constant = 1.0;
  double regularity_exponent = 1.0;
  double regularity_constant = 1.0;
};

/// K(x,y) = 1/(pi (x - y)), size 1/pi, regularity exponent 1.
Kernel hilbert_kernel();

struct KernelReport {
  double max_size_ratio = 0.0;        ///< max |K(x,y)| |x-y|
  double max_regularity_ratio = 0.0;  ///< max quotient against |x-z|^e / |x-y|^(1+e)
  std::size_t size_violations = 0;
  std::size_t regularity_violations = 0;
  bool ok() const { return size_violations == 0 && regularity_violations == 0; }
};

/// Randomized audit of the size and regularity bounds on [0,1).
KernelReport validate_kernel(const Kernel& k, std::size_t sample_count, std::uint64_t seed = 1);

/// Midpoint sum of K(x,y) f(y) |cell| over cells with |x - y| > eps.
double hilbert_truncated(const GridFunction& f, std::size_t x_cell, double eps);

/// T_eps f at every cell; eps defaults to one cell width.
GridFunction hilbert_transform(const GridFunction& f, std::optional<double> eps = std::nullopt);

/// sup over every truncation radius of |T_eps f|.
GridFunction maximal_singular(const GridFunction& f);

struct CommutatorResult {
  GridFunction product_form;  ///< b T f - T(b f)
  GridFunction kernel_form;   ///< sum (b(x) - b(y)) K f
  double max_discrepancy = 0.0;
};

/// [b,T]f at truncation eps (default one cell width), by both routes.
CommutatorResult commutator(const GridFunction& b, const GridFunction& f, std::optional<double> eps = std::nullopt);

/// sum (b(x) - b(y))^k K(x,y) f(y) |cell| at truncation eps.
GridFunction higher_commutator(const GridFunction& b, const GridFunction& f, int k,
                               std::optional<double> eps = std::nullopt);

/// (sum over strict dyadic subcubes Q of Q0 of (f_Q - f_parent)^2 chi_Q)^(1/2).
GridFunction dyadic_square(const GridFunction& f, const DyadicIndex& q0);

/// Profile of the square-function kernel.
enum class SquareProfile { gaussian_derivative };

/// g*_mu f with t on a geometric grid of `scales` points per octave.
GridFunction continuous_square(const GridFunction& f, double mu, int scales,
                               SquareProfile psi = SquareProfile::gaussian_derivative);

/// (sum_j |T f_j|^q)^(1/q), with T the one-cell truncation or T* if `maximal`.
GridFunction vector_cz(const VectorGridFunction& f, double q, bool maximal = false);

/// Heuristic bilinear model T_eps f1 * T_eps f2.
GridFunction bilinear_model(const GridFunction& f1, const GridFunction& f2);

/// Smallest cell distance d with d * width > eps.
std::size_t truncation_cells(double eps, double width);

}  // namespace czlab
