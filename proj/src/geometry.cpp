#include "stardis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "stardis/errors.hpp"

namespace stardis {

namespace {

void require_unit_coords(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::domain_error(std::string(what) + " coordinates must lie in [0,1]");
    }
  }
}

}  // namespace

AnchoredBox::AnchoredBox(std::vector<double> corner) : corner_(std::move(corner)) {
  if (corner_.empty()) throw std::domain_error("anchored box needs at least one axis");
  require_unit_coords(corner_, "anchored box");
}

double AnchoredBox::volume() const noexcept {
  double v = 1.0;
  for (double c : corner_) v *= c;
  return v;
}

GridPartition::GridPartition(std::uint32_t dimension, std::uint32_t cells_per_axis)
    : dimension_(dimension), cells_per_axis_(cells_per_axis) {
  if (dimension == 0) throw std::domain_error("grid dimension must be positive");
  if (cells_per_axis == 0) throw std::domain_error("grid needs at least one cell per axis");
  cell_count_ = 1;
  for (std::uint32_t j = 0; j < dimension; ++j) {
    if (cell_count_ > std::numeric_limits<std::uint64_t>::max() / cells_per_axis) {
      throw std::domain_error("grid cell count overflows 64 bits");
    }
    cell_count_ *= cells_per_axis;
  }
}

std::uint64_t GridPartition::cell_index(std::span<const double> point) const {
  if (point.size() != dimension_) throw std::domain_error("point dimension mismatch");
  require_unit_coords(point, "point");
  std::uint64_t id = 0;
  for (std::uint32_t j = 0; j < dimension_; ++j) {
    auto digit = static_cast<std::uint32_t>(point[j] * cells_per_axis_);
    if (digit >= cells_per_axis_) digit = cells_per_axis_ - 1;
    id = id * cells_per_axis_ + digit;
  }
  return id;
}

void GridPartition::cell_digits(std::uint64_t cell, std::span<std::uint32_t> digits) const {
  if (cell >= cell_count_) throw std::domain_error("cell id out of range");
  if (digits.size() != dimension_) throw std::domain_error("digit span dimension mismatch");
  for (std::uint32_t j = dimension_; j-- > 0;) {
    digits[j] = static_cast<std::uint32_t>(cell % cells_per_axis_);
    cell /= cells_per_axis_;
  }
}

void GridPartition::cell_bounds(std::uint64_t cell, std::span<double> lower,
                                std::span<double> upper) const {
  if (lower.size() != dimension_ || upper.size() != dimension_) {
    throw std::domain_error("bound span dimension mismatch");
  }
  std::vector<std::uint32_t> digits(dimension_);
  cell_digits(cell, digits);
  for (std::uint32_t j = 0; j < dimension_; ++j) {
    lower[j] = axis_lower(digits[j]);
    upper[j] = axis_upper(digits[j]);
  }
}

double cell_box_intersection_volume(const GridPartition& grid, std::uint64_t cell,
                                    const AnchoredBox& box) {
  if (box.dimension() != grid.dimension()) throw std::domain_error("box dimension mismatch");
  std::vector<std::uint32_t> digits(grid.dimension());
  grid.cell_digits(cell, digits);
  double volume = 1.0;
  for (std::uint32_t j = 0; j < grid.dimension(); ++j) {
    const double lo = grid.axis_lower(digits[j]);
    const double hi = std::min(grid.axis_upper(digits[j]), box.corner(j));
    if (hi <= lo) return 0.0;
    volume *= hi - lo;
  }
  return volume;
}

BoxDecomposition decompose_box(const GridPartition& grid, const AnchoredBox& box) {
  if (box.dimension() != grid.dimension()) throw std::domain_error("box dimension mismatch");
  const std::uint32_t d = grid.dimension();
  BoxDecomposition out;
  std::vector<std::uint32_t> digits(d, 0);
  for (std::uint64_t id = 0;; ++id) {
    bool touched = true;
    bool contained = true;
    for (std::uint32_t j = 0; j < d; ++j) {
      const double x = box.corner(j);
      if (x <= grid.axis_lower(digits[j])) {
        touched = false;
        break;
      }
      if (x < grid.axis_upper(digits[j])) contained = false;
    }
    if (touched) (contained ? out.contained : out.partial).push_back(id);

    std::uint32_t j = d;
    while (j-- > 0) {
      if (++digits[j] < grid.cells_per_axis()) break;
      digits[j] = 0;
    }
    if (j == std::numeric_limits<std::uint32_t>::max()) break;
  }
  return out;
}

std::uint64_t boundary_cell_count(const GridPartition& grid, const AnchoredBox& box,
                                  BoundaryKind kind) {
  if (box.dimension() != grid.dimension()) throw std::domain_error("box dimension mismatch");
  const std::uint32_t m = grid.cells_per_axis();
  // Per axis: overlapping counts cells whose closure meets [0, x_j],
  // below counts cells strictly below x_j, inner additionally excludes
  // the cell touching 0. Boundary cells are overlapping products minus
  // the product of cells clear of the relevant faces.
  std::uint64_t prod_overlap = 1;
  std::uint64_t prod_clear = 1;
  for (std::uint32_t j = 0; j < grid.dimension(); ++j) {
    const double x = box.corner(j);
    std::uint64_t overlapping = 0;
    std::uint64_t below = 0;
    std::uint64_t inner = 0;
    for (std::uint32_t k = 0; k < m; ++k) {
      if (grid.axis_lower(k) <= x) ++overlapping;
      if (grid.axis_upper(k) < x) {
        ++below;
        if (k >= 1) ++inner;
      }
    }
    prod_overlap *= overlapping;
    prod_clear *= kind == BoundaryKind::full ? inner : below;
  }
  return prod_overlap - prod_clear;
}

}  // namespace stardis
