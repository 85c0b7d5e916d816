#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stardis {

// Axis-aligned box [0, corner] anchored at the origin, corner in [0,1]^d.
class AnchoredBox {
 public:
  explicit AnchoredBox(std::vector<double> corner);

  std::uint32_t dimension() const noexcept { return static_cast<std::uint32_t>(corner_.size()); }
  const std::vector<double>& corner() const noexcept { return corner_; }
  double corner(std::uint32_t axis) const { return corner_.at(axis); }
  double volume() const noexcept;

 private:
  std::vector<double> corner_;
};

// Isotropic grid partition of [0,1]^d into m^d congruent cells. Cells are
// indexed row-major with axis 0 slowest; cell k on an axis spans
// [k/m, (k+1)/m), except the last cell which is closed at 1.
class GridPartition {
 public:
  GridPartition(std::uint32_t dimension, std::uint32_t cells_per_axis);

  std::uint32_t dimension() const noexcept { return dimension_; }
  std::uint32_t cells_per_axis() const noexcept { return cells_per_axis_; }
  std::uint64_t cell_count() const noexcept { return cell_count_; }

  std::uint64_t cell_index(std::span<const double> point) const;

  // Row-major decode of a cell id into per-axis digits (axis 0 slowest).
  void cell_digits(std::uint64_t cell, std::span<std::uint32_t> digits) const;
  void cell_bounds(std::uint64_t cell, std::span<double> lower, std::span<double> upper) const;

  double axis_lower(std::uint32_t digit) const noexcept {
    return static_cast<double>(digit) / cells_per_axis_;
  }
  double axis_upper(std::uint32_t digit) const noexcept {
    return static_cast<double>(digit + 1) / cells_per_axis_;
  }

 private:
  std::uint32_t dimension_;
  std::uint32_t cells_per_axis_;
  std::uint64_t cell_count_;
};

// Cells of a partition crossed by an anchored box, split into those fully
// inside the box and those it only partially covers.
struct BoxDecomposition {
  std::vector<std::uint64_t> contained;
  std::vector<std::uint64_t> partial;
};

enum class BoundaryKind { full, upper };

double cell_box_intersection_volume(const GridPartition& grid, std::uint64_t cell,
                                    const AnchoredBox& box);

BoxDecomposition decompose_box(const GridPartition& grid, const AnchoredBox& box);

// Number of cells whose closure meets the boundary of [0, corner].
// BoundaryKind::full counts cells meeting any part of the boundary,
// BoundaryKind::upper only those meeting the d upper faces. Runs in
// O(d * m) without enumerating cells.
std::uint64_t boundary_cell_count(const GridPartition& grid, const AnchoredBox& box,
                                  BoundaryKind kind = BoundaryKind::full);

}  // namespace stardis
