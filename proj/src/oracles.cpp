#include "czlab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "czlab/error.hpp"

namespace czlab::oracle {

namespace {

double mean(const GridFunction& f, std::size_t a, std::size_t b) {
  double acc = 0.0;
  for (std::size_t i = a; i < b; ++i) acc += f[i];
  return acc / static_cast<double>(b - a);
}

// Calls visit(begin, end) for every dyadic interval of the grid, coarse first.
template <class Visit>
void each_dyadic(std::size_t n, Visit visit) {
  for (std::size_t w = n; w >= 1; w /= 2) {
    for (std::size_t s = 0; s < n; s += w) visit(s, s + w);
    if (w == 1) break;
  }
}

}  // namespace

double mean_abs(const GridFunction& f, std::size_t a, std::size_t b) {
  double acc = 0.0;
  for (std::size_t i = a; i < b; ++i) acc += std::fabs(f[i]);
  return acc / static_cast<double>(b - a);
}

GridFunction hl_maximal(const GridFunction& f) {
  const std::size_t n = f.size();
  GridFunction out = f.zeros_like();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) {
      const double m = mean_abs(f, a, b);
      for (std::size_t i = a; i < b; ++i) out[i] = std::max(out[i], m);
    }
  return out;
}

GridFunction dyadic_maximal(const GridFunction& f) {
  GridFunction out = f.zeros_like();
  each_dyadic(f.size(), [&](std::size_t a, std::size_t b) {
    const double m = mean_abs(f, a, b);
    for (std::size_t i = a; i < b; ++i) out[i] = std::max(out[i], m);
  });
  return out;
}

GridFunction dyadic_square(const GridFunction& f) {
  const std::size_t n = f.size();
  GridFunction out = f.zeros_like();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t w = n / 2; w >= 1; w /= 2) {
      const std::size_t s = i / w * w;
      const std::size_t ps = i / (2 * w) * (2 * w);
      const double d = mean(f, s, s + w) - mean(f, ps, ps + 2 * w);
      acc += d * d;
      if (w == 1) break;
    }
    out[i] = std::sqrt(acc);
  }
  return out;
}

double median(std::span<const double> values) {
  if (values.empty()) throw InsufficientData("median of an empty sample");
  const std::size_t n = values.size();
  double best = std::numeric_limits<double>::infinity();
  for (double c : values) {
    std::size_t below = 0, above = 0;
    for (double v : values) {
      below += v < c;
      above += v > c;
    }
    if (2 * below <= n && 2 * above <= n) best = std::min(best, c);
  }
  return best;
}

double oscillation(std::span<const double> values, double lambda) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  const auto k = static_cast<std::size_t>(std::floor(lambda * static_cast<double>(n)));
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> dev(n);
  for (double a : values)
    for (double b : values) {
      if (b < a) continue;
      const double c = 0.5 * (a + b);
      for (std::size_t i = 0; i < n; ++i) dev[i] = std::fabs(values[i] - c);
      std::sort(dev.begin(), dev.end(), std::greater<>());
      best = std::min(best, dev[k]);
    }
  return best;
}

GridFunction local_sharp_maximal(const GridFunction& f, double lambda) {
  GridFunction out = f.zeros_like();
  each_dyadic(f.size(), [&](std::size_t a, std::size_t b) {
    const double o = oscillation(f.values().subspan(a, b - a), lambda);
    for (std::size_t i = a; i < b; ++i) out[i] = std::max(out[i], o);
  });
  return out;
}

double sharp_inner_infimum(std::span<const double> values, double delta) {
  double best = std::numeric_limits<double>::infinity();
  for (double c : values) {
    double acc = 0.0;
    for (double v : values) acc += std::pow(std::fabs(v - c), delta);
    best = std::min(best, acc / static_cast<double>(values.size()));
  }
  return std::pow(best, 1.0 / delta);
}

GridFunction maximal_singular(const GridFunction& f) {
  const std::size_t n = f.size();
  GridFunction out = f.zeros_like();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d < n; ++d) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto diff = static_cast<double>(i) - static_cast<double>(j);
        if (std::fabs(diff) >= static_cast<double>(d)) acc += f[j] / (std::numbers::pi * diff);
      }
      out[i] = std::max(out[i], std::fabs(acc));
    }
  return out;
}

double ap_constant(const Weight& w, double p) {
  const double pp = p / (p - 1.0);
  const GridFunction& v = w.values();
  double best = 0.0;
  each_dyadic(v.size(), [&](std::size_t a, std::size_t b) {
    double sw = 0.0, sd = 0.0;
    for (std::size_t i = a; i < b; ++i) {
      sw += v[i];
      sd += std::pow(v[i], 1.0 - pp);
    }
    const auto len = static_cast<double>(b - a);
    best = std::max(best, sw / len * std::pow(sd / len, p - 1.0));
  });
  return best;
}

double bmo_norm(const GridFunction& b) {
  const std::size_t n = b.size();
  double best = 0.0;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t e = s + 1; e <= n; ++e) {
      const double m = mean(b, s, e);
      double acc = 0.0;
      for (std::size_t i = s; i < e; ++i) acc += std::fabs(b[i] - m);
      best = std::max(best, acc / static_cast<double>(e - s));
    }
  return best;
}

}  // namespace czlab::oracle
