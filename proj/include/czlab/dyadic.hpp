#pragma once

// Dyadic grid substrate: the base interval, dyadic indices into it, piecewise
// constant functions on its 2^L finest cells, and sets of cells.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace czlab {

/// A closed-open interval [origin, origin + side).
struct Cube {
  double origin = 0.0;
  double side = 1.0;

  Cube() = default;
  Cube(double origin_, double side_);

  double measure() const { return side; }
  bool operator==(const Cube&) const = default;
};

/// Dyadic subcube (level k, position j) of the base cube, 0 <= j < 2^k.
struct DyadicIndex {
  int level = 0;
  std::int64_t position = 0;

  static DyadicIndex root() { return {}; }

  bool valid() const;
  bool is_root() const { return level == 0; }
  DyadicIndex parent() const;
  DyadicIndex child(int which) const { return {level + 1, 2 * position + which}; }
  /// Measure relative to the base cube, 2^-level.
  double relative_measure() const;
  bool contains(const DyadicIndex& other) const;

  /// First finest cell covered by this cube on a grid of resolution L.
  std::size_t first_cell(int L) const;
  /// Number of finest cells covered on a grid of resolution L.
  std::size_t cell_count(int L) const;

  auto operator<=>(const DyadicIndex&) const = default;
};

std::ostream& operator<<(std::ostream& os, const DyadicIndex& q);

/// Real function, constant on each of the 2^L dyadic cells of `base`.
class GridFunction {
 public:
  GridFunction() = default;
  /// Zero function at resolution L.
  GridFunction(Cube base, int resolution);
  GridFunction(Cube base, std::vector<double> samples);
  /// Convenience: base cube [0, 1).
  explicit GridFunction(std::vector<double> samples);

  const Cube& base() const { return base_; }
  int resolution() const { return resolution_; }
  std::size_t size() const { return samples_.size(); }
  double cell_width() const { return base_.side / static_cast<double>(samples_.size()); }
  double cell_measure() const { return cell_width(); }
  double midpoint(std::size_t i) const;
  /// Cell containing the point x of the base cube.
  std::size_t cell_of(double x) const;

  double operator[](std::size_t i) const { return samples_[i]; }
  double& operator[](std::size_t i) { return samples_[i]; }
  std::span<const double> values() const { return samples_; }
  std::span<double> values() { return samples_; }
  const std::vector<double>& samples() const { return samples_; }

  bool same_grid(const GridFunction& other) const;
  /// Same grid, values zero.
  GridFunction zeros_like() const { return GridFunction(base_, resolution_); }

  /// Builds a function on the same grid by applying op to every sample.
  template <typename Op>
  GridFunction map(Op op) const {
    GridFunction out = zeros_like();
    for (std::size_t i = 0; i < size(); ++i) out.samples_[i] = op(samples_[i]);
    return out;
  }

  GridFunction abs() const;
  double max_abs() const;
  /// Integral over the whole base cube.
  double integral() const;

 private:
  Cube base_{};
  int resolution_ = 0;
  std::vector<double> samples_;
};

/// Set of finest cells (a measurable union of cells).
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int resolution);
  CellSet(Cube base, int resolution);

  int resolution() const { return resolution_; }
  std::size_t size() const { return mask_.size(); }
  bool contains(std::size_t cell) const { return mask_[cell] != 0; }
  void insert(std::size_t cell) { mask_[cell] = 1; }
  void erase(std::size_t cell) { mask_[cell] = 0; }
  /// Inserts every cell of the dyadic cube q.
  void insert_cube(const DyadicIndex& q);

  std::size_t count() const;
  /// Number of member cells inside q.
  std::size_t count_in(const DyadicIndex& q) const;
  double measure() const;
  const Cube& base() const { return base_; }

  CellSet intersect(const CellSet& other) const;
  CellSet unite(const CellSet& other) const;
  CellSet minus(const CellSet& other) const;
  bool subset_of(const CellSet& other) const;
  bool disjoint(const CellSet& other) const;
  bool operator==(const CellSet& other) const { return mask_ == other.mask_; }

 private:
  Cube base_{};
  int resolution_ = 0;
  std::vector<std::uint8_t> mask_;
};

/// Prefix sums of a sample vector for O(1) interval integrals.
class PrefixSums {
 public:
  PrefixSums() = default;
  explicit PrefixSums(std::span<const double> values);
  /// Sum of values[a..b) (cell indices).
  double sum(std::size_t a, std::size_t b) const { return prefix_[b] - prefix_[a]; }
  double mean(std::size_t a, std::size_t b) const {
    return sum(a, b) / static_cast<double>(b - a);
  }

 private:
  std::vector<double> prefix_;
};

/// Half-open range of finest cells [begin, end).
struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
  bool operator==(const Interval&) const = default;
};

/// Cube families over which maximal-type suprema are taken.
enum class CubeFamily {
  dyadic,         ///< dyadic subcubes of the root
  shifted,        ///< dyadic plus the one-third shifted dyadic grid, clipped to the root
  all_intervals,  ///< every grid-aligned interval inside the root (O(N^2) members)
};

CubeFamily parse_cube_family(const std::string& name);
std::string to_string(CubeFamily family);

/// Members of a family inside the cube q0 of a level-L grid; dyadic members
/// come first, level-major.
std::vector<Interval> family_intervals(const DyadicIndex& q0, int L, CubeFamily family);

/// Throws InvalidCube unless q is a cube of a grid of resolution L.
void require_cube(const DyadicIndex& q, int L);

/// Mean of f over the cube q (exact for piecewise-constant f).
double average(const GridFunction& f, const DyadicIndex& q);

/// Cells where |f| > threshold.
CellSet level_set(const GridFunction& f, double threshold);

/// All dyadic cubes with level 0..L, level-major then position order.
std::vector<DyadicIndex> enumerate_dyadic(const Cube& base, int L);

/// Dyadic subcubes of q down to the finest level L, level-major.
std::vector<DyadicIndex> enumerate_dyadic_within(const DyadicIndex& q, int L);

/// Mask of the cells of q.
CellSet cube_cells(const DyadicIndex& q, int L);

/// Samples of f restricted to the cells of q.
std::span<const double> cube_values(const GridFunction& f, const DyadicIndex& q);

/// CSV with header `cell_index,value`; row count must be a power of two.
void write_csv(std::ostream& os, const GridFunction& f);
GridFunction read_csv(std::istream& is, Cube base = {});

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double v);

}  // namespace czlab
