#include "czlab/corpus.hpp"

#include <cmath>
#include <numbers>

#include "czlab/error.hpp"

namespace czlab {

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("below(0)");
  return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
}

Rng Rng::derive(std::uint64_t salt) {
  return Rng(seed_ * 0x9E3779B97F4A7C15ULL + salt * 0xBF58476D1CE4E5B9ULL + 1);
}

GridFunction haar_function(const DyadicIndex& q, int L) {
  require_cube(q, L);
  if (q.level >= L) throw InvalidCube("Haar function needs a cube above the finest level");
  GridFunction h(Cube{}, L);
  const std::size_t a = q.first_cell(L);
  const std::size_t w = q.cell_count(L);
  for (std::size_t i = 0; i < w; ++i) h[a + i] = i < w / 2 ? 1.0 : -1.0;
  return h;
}

GridFunction haar_sum(Rng& rng, int L, int lo, int hi, double decay) {
  GridFunction f(Cube{}, L);
  for (int k = lo; k <= hi && k < L; ++k) {
    const std::size_t w = std::size_t{1} << (L - k);
    const double scale = std::exp2(-decay * k);
    for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
      const double c = rng.normal() * scale;
      const std::size_t a = j * w;
      for (std::size_t i = 0; i < w / 2; ++i) f[a + i] += c;
      for (std::size_t i = w / 2; i < w; ++i) f[a + i] -= c;
    }
  }
  return f;
}

GridFunction haar_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  GridFunction f = haar_sum(rng, L, 1, L - 2, 0.5);
  const std::size_t half = f.size() / 2;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.3 * f[i] + (i < half ? 1.0 : -1.0);
  return f;
}

GridFunction haar_sum_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  return haar_sum(rng, L, 1, L - 2, 0.0);
}

GridFunction bmo_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  const double p = rng.uniform(0.1, 0.45);
  const double p2 = rng.uniform(0.55, 0.9);
  GridFunction f(Cube{}, L);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.midpoint(i);
    f[i] = std::log(std::fabs(x - p2) / std::fabs(x - p));
  }
  return f;
}

GridFunction oscillating_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  const double p = rng.uniform(0.2, 0.8);
  const double kappa = std::numbers::pi / std::numbers::ln2 * rng.uniform(0.7, 1.3);
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  GridFunction f(Cube{}, L);
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = std::cos(kappa * std::log(std::fabs(f.midpoint(i) - p)) + phase);
  return f;
}

GridFunction chain_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  const double p = rng.uniform(0.2, 0.8);
  GridFunction f(Cube{}, L);
  const std::size_t n = f.size();
  const auto ip = static_cast<std::size_t>(p * static_cast<double>(n));
  double prev = 0.0;
  for (int k = 0; k < L; ++k) {
    const std::size_t w = n >> k;
    const std::size_t s = ip / w * w;
    const double sign_at_p = ip - s < w / 2 ? 1.0 : -1.0;
    const double target = k % 2 == 0 ? 1.0 : 0.0;
    const double coef = (target - prev) * sign_at_p;
    for (std::size_t i = s; i < s + w; ++i) f[i] += i - s < w / 2 ? coef : -coef;
    prev = target;
  }
  return f;
}

VectorGridFunction rings_family(std::uint64_t seed, int L) {
  Rng rng(seed);
  const double p = rng.uniform(0.2, 0.8);
  const double ratio = rng.uniform(0.5, 1.0);
  std::vector<GridFunction> comps;
  const double h = std::exp2(-L);
  for (int j = 0; j < 64; ++j) {
    const double outer = std::exp(-j * ratio);
    const double inner = std::exp(-(j + 1) * ratio);
    if (outer < h / 2) break;
    GridFunction g(Cube{}, L);
    bool any = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double d = std::fabs(g.midpoint(i) - p);
      if (d < outer && d >= inner) {
        g[i] = 1.0;
        any = true;
      }
    }
    if (any) comps.push_back(std::move(g));
  }
  return VectorGridFunction(std::move(comps));
}

VectorGridFunction haar_vector(std::uint64_t seed, int L, std::size_t J) {
  std::vector<GridFunction> comps;
  for (std::size_t j = 0; j < J; ++j) comps.push_back(haar_family(seed * 1000003ULL + j, L));
  return VectorGridFunction(std::move(comps));
}

GridFunction spike(int L, std::size_t cell, double height) {
  GridFunction f(Cube{}, L);
  if (cell >= f.size()) throw InvalidCube("spike cell outside the grid");
  f[cell] = height;
  return f;
}

GridFunction indicator(int L, double a, double b) {
  GridFunction f(Cube{}, L);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.midpoint(i);
    if (x >= a && x < b) f[i] = 1.0;
  }
  return f;
}

GridFunction mixed_corpus(std::uint64_t seed, int L) {
  Rng rng(seed ^ 0x5DEECE66DULL);
  switch (seed % 5) {
    case 0: return haar_family(seed, L);
    case 1: return bmo_family(seed, L);
    case 2: return oscillating_family(seed, L);
    case 3: {
      GridFunction f(Cube{}, L);
      const int spikes = 1 + static_cast<int>(rng.below(4));
      for (int s = 0; s < spikes; ++s) f[rng.below(f.size())] += rng.uniform(1.0, 100.0);
      return f;
    }
    default: {
      const double a = rng.uniform(0.0, 0.9);
      const double b = rng.uniform(a, 1.0);
      GridFunction f = indicator(L, a, b);
      Rng inner = rng.derive(seed);
      GridFunction noise = haar_sum(inner, L, 2, L - 1, 0.75);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += 0.1 * noise[i];
      return f;
    }
  }
}

GridFunction log_symbol(int L, double x0) {
  GridFunction b(Cube{}, L);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::log(std::fabs(b.midpoint(i) - x0));
  return b;
}

GridFunction named_family(const std::string& name, std::uint64_t seed, int L) {
  if (name == "haar") return haar_family(seed, L);
  if (name == "bmo") return bmo_family(seed, L);
  if (name == "osc") return oscillating_family(seed, L);
  if (name == "haarsum") return haar_sum_family(seed, L);
  if (name == "chain") return chain_family(seed, L);
  if (name == "mixed") return mixed_corpus(seed, L);
  throw DomainError("unknown corpus family: " + name);
}

}  // namespace czlab
