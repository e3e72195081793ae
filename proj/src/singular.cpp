#include "czlab/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "czlab/error.hpp"
#include "czlab/parallel.hpp"

namespace czlab {

namespace {

// Midpoint quadrature of the Hilbert kernel times the cell width, by cell distance.
std::vector<double> hilbert_table(std::size_t n) {
  std::vector<double> k(n, 0.0);
  for (std::size_t d = 1; d < n; ++d) k[d] = 1.0 / (std::numbers::pi * static_cast<double>(d));
  return k;
}

void require_pair(const GridFunction& b, const GridFunction& f) {
  if (!b.same_grid(f)) throw ShapeError("symbol and function must share a grid");
}

std::size_t default_cells(const GridFunction& f, std::optional<double> eps) {
  const double e = eps.value_or(f.cell_width());
  if (!(e > 0.0)) throw DomainError("truncation radius must be positive");
  return truncation_cells(e, f.cell_width());
}

// sum over |i-j| >= dmin of weight(i,j) * table[|i-j|] * sign(i-j) * f_j
template <typename Weight>
GridFunction odd_kernel_sum(const GridFunction& f, std::size_t dmin, Weight weight) {
  const std::size_t n = f.size();
  const auto table = hilbert_table(n);
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  parallel_for(n, [&](std::size_t i) {
    double acc = 0.0;
    for (std::size_t d = dmin; d <= i; ++d) acc += weight(i, i - d) * table[d] * f[i - d];
    for (std::size_t d = dmin; i + d < n; ++d) acc -= weight(i, i + d) * table[d] * f[i + d];
    vals[i] = acc;
  });
  return out;
}

}  // namespace

std::size_t truncation_cells(double eps, double width) {
  auto d = static_cast<std::size_t>(std::max(0.0, std::floor(eps / width)));
  while (d > 0 && static_cast<double>(d) * width > eps) --d;
  while (!(static_cast<double>(d) * width > eps)) ++d;
  return std::max<std::size_t>(d, 1);
}

Kernel hilbert_kernel() {
  Kernel k;
  k.name = "hilbert";
  k.evaluate = [](double x, double y) { return 1.0 / (std::numbers::pi * (x - y)); };
  k.size_constant = 1.0 / std::numbers::pi;
  k.regularity_exponent = 1.0;
  k.regularity_constant = 1.0;
  return k;
}

KernelReport validate_kernel(const Kernel& k, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 100) throw DomainError("validate_kernel needs at least 100 samples");
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  KernelReport r;
  const double slack = 1.0 + 1e-9;
  for (std::size_t s = 0; s < sample_count; ++s) {
    const double x = unit();
    double y = unit();
    if (x == y) continue;
    const double size = std::fabs(k.evaluate(x, y)) * std::fabs(x - y);
    r.max_size_ratio = std::max(r.max_size_ratio, size);
    if (size > k.size_constant * slack) ++r.size_violations;
    // z close to x: 2|x - z| < |x - y|.
    const double z = x + (unit() - 0.5) * std::fabs(x - y) * 0.999;
    if (z == x) continue;
    const double e = k.regularity_exponent;
    const double scale = std::pow(std::fabs(x - z), e) / std::pow(std::fabs(x - y), 1.0 + e);
    const double q1 = std::fabs(k.evaluate(x, y) - k.evaluate(z, y)) / scale;
    const double q2 = std::fabs(k.evaluate(y, x) - k.evaluate(y, z)) / scale;
    const double q = std::max(q1, q2);
    r.max_regularity_ratio = std::max(r.max_regularity_ratio, q);
    if (q > k.regularity_constant * slack) ++r.regularity_violations;
  }
  return r;
}

double hilbert_truncated(const GridFunction& f, std::size_t x_cell, double eps) {
  if (!(eps > 0.0)) throw DomainError("truncation radius must be positive");
  if (x_cell >= f.size()) throw InvalidCube("cell index outside the grid");
  const std::size_t dmin = truncation_cells(eps, f.cell_width());
  const std::size_t n = f.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t d = j > x_cell ? j - x_cell : x_cell - j;
    if (d < dmin) continue;
    const double diff = static_cast<double>(x_cell) - static_cast<double>(j);
    acc += f[j] / (std::numbers::pi * diff);
  }
  return acc;
}

GridFunction hilbert_transform(const GridFunction& f, std::optional<double> eps) {
  return odd_kernel_sum(f, default_cells(f, eps), [](std::size_t, std::size_t) { return 1.0; });
}

GridFunction maximal_singular(const GridFunction& f) {
  const std::size_t n = f.size();
  const auto table = hilbert_table(n);
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  parallel_for(n, [&](std::size_t i) {
    double total = 0.0;
    for (std::size_t d = 1; d <= i; ++d) total += table[d] * f[i - d];
    for (std::size_t d = 1; i + d < n; ++d) total -= table[d] * f[i + d];
    double best = std::fabs(total);
    const std::size_t reach = std::max(i, n - 1 - i);
    for (std::size_t d = 1; d < reach; ++d) {
      if (d <= i) total -= table[d] * f[i - d];
      if (i + d < n) total += table[d] * f[i + d];
      best = std::max(best, std::fabs(total));
    }
    vals[i] = best;
  });
  return out;
}

CommutatorResult commutator(const GridFunction& b, const GridFunction& f, std::optional<double> eps) {
  require_pair(b, f);
  const std::size_t dmin = default_cells(f, eps);
  CommutatorResult r;
  const GridFunction tf = hilbert_transform(f, eps);
  GridFunction bf = f.zeros_like();
  for (std::size_t i = 0; i < f.size(); ++i) bf[i] = b[i] * f[i];
  const GridFunction tbf = hilbert_transform(bf, eps);
  r.product_form = f.zeros_like();
  for (std::size_t i = 0; i < f.size(); ++i) r.product_form[i] = b[i] * tf[i] - tbf[i];
  r.kernel_form = odd_kernel_sum(f, dmin, [&b](std::size_t i, std::size_t j) { return b[i] - b[j]; });
  for (std::size_t i = 0; i < f.size(); ++i)
    r.max_discrepancy = std::max(r.max_discrepancy, std::fabs(r.product_form[i] - r.kernel_form[i]));
  return r;
}

GridFunction higher_commutator(const GridFunction& b, const GridFunction& f, int k, std::optional<double> eps) {
  require_pair(b, f);
  if (k < 0) throw DomainError("commutator order must be >= 0");
  const std::size_t dmin = default_cells(f, eps);
  if (k == 0) return hilbert_transform(f, eps);
  return odd_kernel_sum(f, dmin, [&b, k](std::size_t i, std::size_t j) {
    const double d = b[i] - b[j];
    double p = d;
    for (int e = 1; e < k; ++e) p *= d;
    return p;
  });
}

GridFunction dyadic_square(const GridFunction& f, const DyadicIndex& q0) {
  const int L = f.resolution();
  require_cube(q0, L);
  const std::size_t a0 = q0.first_cell(L);
  const std::size_t n = q0.cell_count(L);
  const PrefixSums ps(f.values());
  GridFunction out = f.zeros_like();
  auto vals = out.values();
  for (std::size_t w = n / 2; w >= 1; w /= 2) {
    for (std::size_t s = 0; s < n; s += w) {
      const std::size_t parent = s - s % (2 * w);
      const double d = ps.mean(a0 + s, a0 + s + w) - ps.mean(a0 + parent, a0 + parent + 2 * w);
      for (std::size_t i = s; i < s + w; ++i) vals[a0 + i] += d * d;
    }
    if (w == 1) break;
  }
  for (std::size_t i = a0; i < a0 + n; ++i) vals[i] = std::sqrt(vals[i]);
  return out;
}

GridFunction continuous_square(const GridFunction& f, double mu, int scales, SquareProfile /*psi*/) {
  if (!(mu > 3.0)) throw DomainError("continuous square function requires mu > 3");
  if (scales < 8) throw DomainError("continuous square function requires at least 8 scales per octave");
  const std::size_t n = f.size();
  const double h = f.cell_width();
  const double side = f.base().side;
  const int steps = static_cast<int>(std::ceil(std::log2(side / h) * scales - 1e-9));
  const double dlog = std::log(2.0) / scales;
  // psi = -(1/2) u exp(-u^2/2), unit L^1 norm; cell integrals via the primitive.
  const double c = 0.5;
  std::vector<double> acc(n, 0.0);
  std::vector<double> conv(n), sq(n), kern, weight(n);
  for (int s = 0; s <= steps; ++s) {
    const double t = h * std::exp2(static_cast<double>(s) / scales);
    const double r = h / t;
    const double step = (s == 0 || s == steps) ? 0.5 * dlog : dlog;
    // kern[d + n - 1] for signed distance d = i - j in cells.
    const auto reach = static_cast<std::ptrdiff_t>(
        std::min<double>(static_cast<double>(n), std::ceil(9.0 / r) + 2.0));
    kern.assign(static_cast<std::size_t>(2 * reach + 1), 0.0);
    for (std::ptrdiff_t d = -reach; d <= reach; ++d) {
      const double ua = (static_cast<double>(d) + 0.5) * r;
      const double ub = (static_cast<double>(d) - 0.5) * r;
      kern[static_cast<std::size_t>(d + reach)] = c * (std::exp(-0.5 * ua * ua) - std::exp(-0.5 * ub * ub));
    }
    parallel_for(n, [&](std::size_t i) {
      const auto ii = static_cast<std::ptrdiff_t>(i);
      const std::ptrdiff_t jlo = std::max<std::ptrdiff_t>(0, ii - reach);
      const std::ptrdiff_t jhi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, ii + reach);
      double a = 0.0;
      for (std::ptrdiff_t j = jlo; j <= jhi; ++j) a += kern[static_cast<std::size_t>(ii - j + reach)] * f[static_cast<std::size_t>(j)];
      conv[i] = a;
    });
    for (std::size_t i = 0; i < n; ++i) sq[i] = conv[i] * conv[i];
    for (std::size_t d = 0; d < n; ++d) weight[d] = std::pow(1.0 / (1.0 + static_cast<double>(d) * r), mu);
    const double factor = step * h / t;
    parallel_for(n, [&](std::size_t x) {
      double a = 0.0;
      for (std::size_t y = 0; y < n; ++y) a += weight[x > y ? x - y : y - x] * sq[y];
      acc[x] += factor * a;
    });
  }
  GridFunction out = f.zeros_like();
  for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(acc[i]);
  return out;
}

GridFunction vector_cz(const VectorGridFunction& f, double q, bool maximal) {
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("vector extension requires 1 < q < inf");
  GridFunction out = f.front().zeros_like();
  for (const auto& g : f.components()) {
    const GridFunction tg = maximal ? maximal_singular(g) : hilbert_transform(g);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += std::pow(std::fabs(tg[i]), q);
  }
  return out.map([q](double v) { return std::pow(v, 1.0 / q); });
}

GridFunction bilinear_model(const GridFunction& f1, const GridFunction& f2) {
  require_pair(f1, f2);
  const GridFunction a = hilbert_transform(f1);
  const GridFunction b = hilbert_transform(f2);
  GridFunction out = f1.zeros_like();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace czlab
