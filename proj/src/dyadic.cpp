#include "czlab/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "czlab/error.hpp"

namespace czlab {

namespace {

int log2_exact(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) return -1;
  int L = 0;
  while ((std::size_t{1} << L) < n) ++L;
  return L;
}

}  // namespace

Cube::Cube(double origin_, double side_) : origin(origin_), side(side_) {
  if (!(side_ > 0.0) || !std::isfinite(side_) || !std::isfinite(origin_))
    throw DomainError("cube side must be positive and finite");
}

bool DyadicIndex::valid() const {
  return level >= 0 && level < 62 && position >= 0 && position < (std::int64_t{1} << level);
}

DyadicIndex DyadicIndex::parent() const {
  if (level == 0) throw InvalidCube("root cube has no dyadic parent");
  return {level - 1, position / 2};
}

double DyadicIndex::relative_measure() const { return std::ldexp(1.0, -level); }

bool DyadicIndex::contains(const DyadicIndex& other) const {
  if (other.level < level) return false;
  return (other.position >> (other.level - level)) == position;
}

std::size_t DyadicIndex::first_cell(int L) const {
  return static_cast<std::size_t>(position) << (L - level);
}

std::size_t DyadicIndex::cell_count(int L) const { return std::size_t{1} << (L - level); }

std::ostream& operator<<(std::ostream& os, const DyadicIndex& q) {
  return os << '(' << q.level << ',' << q.position << ')';
}

void require_cube(const DyadicIndex& q, int L) {
  if (!q.valid() || q.level > L) {
    std::ostringstream msg;
    msg << "dyadic index " << q << " is not a cube of a level-" << L << " grid";
    throw InvalidCube(msg.str());
  }
}

// ---------------------------------------------------------------- GridFunction

GridFunction::GridFunction(Cube base, int resolution) : base_(base), resolution_(resolution) {
  if (resolution < 1 || resolution > 30) throw DomainError("resolution must lie in [1, 30]");
  samples_.assign(std::size_t{1} << resolution, 0.0);
}

GridFunction::GridFunction(Cube base, std::vector<double> samples)
    : base_(base), samples_(std::move(samples)) {
  resolution_ = log2_exact(samples_.size());
  if (resolution_ < 1) throw ShapeError("sample count must be a power of two >= 2");
  for (double v : samples_)
    if (!std::isfinite(v)) throw DomainError("grid function samples must be finite");
}

GridFunction::GridFunction(std::vector<double> samples) : GridFunction(Cube{}, std::move(samples)) {}

double GridFunction::midpoint(std::size_t i) const {
  return base_.origin + (static_cast<double>(i) + 0.5) * cell_width();
}

std::size_t GridFunction::cell_of(double x) const {
  const double u = (x - base_.origin) / cell_width();
  if (u < 0.0) return 0;
  return std::min(size() - 1, static_cast<std::size_t>(u));
}

bool GridFunction::same_grid(const GridFunction& other) const {
  return resolution_ == other.resolution_ && base_ == other.base_;
}

GridFunction GridFunction::abs() const {
  return map([](double v) { return std::fabs(v); });
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::fabs(v));
  return m;
}

double GridFunction::integral() const {
  double s = 0.0;
  for (double v : samples_) s += v;
  return s * cell_measure();
}

// ---------------------------------------------------------------- CellSet

CellSet::CellSet(int resolution) : CellSet(Cube{}, resolution) {}

CellSet::CellSet(Cube base, int resolution) : base_(base), resolution_(resolution) {
  mask_.assign(std::size_t{1} << resolution, 0);
}

void CellSet::insert_cube(const DyadicIndex& q) {
  require_cube(q, resolution_);
  const std::size_t a = q.first_cell(resolution_);
  std::fill_n(mask_.begin() + static_cast<std::ptrdiff_t>(a), q.cell_count(resolution_), 1);
}

std::size_t CellSet::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

std::size_t CellSet::count_in(const DyadicIndex& q) const {
  const std::size_t a = q.first_cell(resolution_);
  const std::size_t n = q.cell_count(resolution_);
  return static_cast<std::size_t>(std::count(mask_.begin() + static_cast<std::ptrdiff_t>(a),
                                             mask_.begin() + static_cast<std::ptrdiff_t>(a + n), 1));
}

double CellSet::measure() const {
  return static_cast<double>(count()) * base_.side / static_cast<double>(mask_.size());
}

CellSet CellSet::intersect(const CellSet& other) const {
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] & other.mask_[i];
  return out;
}

CellSet CellSet::unite(const CellSet& other) const {
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] | other.mask_[i];
  return out;
}

CellSet CellSet::minus(const CellSet& other) const {
  CellSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] & !other.mask_[i];
  return out;
}

bool CellSet::subset_of(const CellSet& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

bool CellSet::disjoint(const CellSet& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && other.mask_[i]) return false;
  return true;
}

// ---------------------------------------------------------------- helpers

PrefixSums::PrefixSums(std::span<const double> values) : prefix_(values.size() + 1, 0.0) {
  for (std::size_t i = 0; i < values.size(); ++i) prefix_[i + 1] = prefix_[i] + values[i];
}

double average(const GridFunction& f, const DyadicIndex& q) {
  require_cube(q, f.resolution());
  const auto vals = cube_values(f, q);
  double s = 0.0;
  for (double v : vals) s += v;
  return s / static_cast<double>(vals.size());
}

CellSet level_set(const GridFunction& f, double threshold) {
  CellSet out(f.base(), f.resolution());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::fabs(f[i]) > threshold) out.insert(i);
  return out;
}

std::vector<DyadicIndex> enumerate_dyadic(const Cube& /*base*/, int L) {
  if (L < 1) throw DomainError("enumerate_dyadic requires L >= 1");
  return enumerate_dyadic_within(DyadicIndex::root(), L);
}

std::vector<DyadicIndex> enumerate_dyadic_within(const DyadicIndex& q, int L) {
  require_cube(q, L);
  std::vector<DyadicIndex> out;
  out.reserve((std::size_t{2} << (L - q.level)) - 1);
  for (int k = q.level; k <= L; ++k) {
    const int d = k - q.level;
    const std::int64_t first = q.position << d;
    const std::int64_t count = std::int64_t{1} << d;
    for (std::int64_t j = 0; j < count; ++j) out.push_back({k, first + j});
  }
  return out;
}

CubeFamily parse_cube_family(const std::string& name) {
  if (name == "dyadic") return CubeFamily::dyadic;
  if (name == "shifted") return CubeFamily::shifted;
  if (name == "all" || name == "all-intervals" || name == "all_intervals") return CubeFamily::all_intervals;
  throw DomainError("unknown cube family: " + name);
}

std::string to_string(CubeFamily family) {
  switch (family) {
    case CubeFamily::dyadic: return "dyadic";
    case CubeFamily::shifted: return "shifted";
    case CubeFamily::all_intervals: return "all-intervals";
  }
  return "?";
}

std::vector<Interval> family_intervals(const DyadicIndex& q0, int L, CubeFamily family) {
  require_cube(q0, L);
  const std::size_t a0 = q0.first_cell(L);
  const std::size_t n = q0.cell_count(L);
  std::vector<Interval> out;
  if (family == CubeFamily::all_intervals) {
    out.reserve(n * (n + 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b) out.push_back({a0 + a, a0 + b});
    return out;
  }
  for (const auto& q : enumerate_dyadic_within(q0, L))
    out.push_back({q.first_cell(L), q.first_cell(L) + q.cell_count(L)});
  if (family == CubeFamily::shifted) {
    for (std::size_t w = n; w >= 3; w /= 2) {
      const std::size_t s = w / 3;
      if (w < n) out.push_back({a0, a0 + s});
      for (std::size_t start = s; start < n; start += w)
        out.push_back({a0 + start, a0 + std::min(n, start + w)});
    }
  }
  return out;
}

CellSet cube_cells(const DyadicIndex& q, int L) {
  CellSet s(L);
  s.insert_cube(q);
  return s;
}

std::span<const double> cube_values(const GridFunction& f, const DyadicIndex& q) {
  require_cube(q, f.resolution());
  return f.values().subspan(q.first_cell(f.resolution()), q.cell_count(f.resolution()));
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const GridFunction& f) {
  os << "cell_index,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) os << i << ',' << format_double(f[i]) << '\n';
}

GridFunction read_csv(std::istream& is, Cube base) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty grid function CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "cell_index,value") throw FormatError("expected header `cell_index,value`");
  std::vector<double> values;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("row " + std::to_string(row) + ": missing comma");
    std::size_t idx = 0;
    double v = 0.0;
    try {
      idx = std::stoul(line.substr(0, comma));
      v = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw FormatError("row " + std::to_string(row) + ": unparsable");
    }
    if (idx != row) throw FormatError("row " + std::to_string(row) + ": cell_index out of order");
    values.push_back(v);
    ++row;
  }
  if (log2_exact(values.size()) < 1) throw FormatError("row count must be a power of two >= 2");
  return GridFunction(base, std::move(values));
}

}  // namespace czlab
