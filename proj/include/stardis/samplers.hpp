#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stardis/geometry.hpp"
#include "stardis/rng.hpp"

namespace stardis {

enum class SamplerKind { simple, jittered };

const char* sampler_kind_name(SamplerKind kind) noexcept;
std::optional<SamplerKind> parse_sampler_kind(std::string_view name) noexcept;

struct Provenance {
  SamplerKind kind = SamplerKind::simple;
  std::uint64_t seed = 0;
  std::uint32_t cells_per_axis = 0;  // jittered only
};

// Point set in [0,1]^d stored axis-major: coordinates of one axis are
// contiguous across points, the layout the counting kernels consume.
class PointSet {
 public:
  PointSet(std::uint32_t dimension, std::uint64_t count);

  std::uint32_t dimension() const noexcept { return dimension_; }
  std::uint64_t size() const noexcept { return count_; }

  double coord(std::uint64_t point, std::uint32_t axis) const {
    return storage_[static_cast<std::uint64_t>(axis) * count_ + point];
  }
  double& coord(std::uint64_t point, std::uint32_t axis) {
    return storage_[static_cast<std::uint64_t>(axis) * count_ + point];
  }

  std::span<const double> axis_coords(std::uint32_t axis) const {
    return {storage_.data() + static_cast<std::uint64_t>(axis) * count_, count_};
  }
  const double* data() const noexcept { return storage_.data(); }

  std::vector<double> point(std::uint64_t i) const;

  std::optional<Provenance> provenance;

 private:
  std::uint32_t dimension_;
  std::uint64_t count_;
  std::vector<double> storage_;
};

// count i.i.d. uniform points; deviates are drawn point-major
// (point 0 axis 0, point 0 axis 1, ...).
PointSet simple_random(std::uint64_t count, std::uint32_t dimension, RandomStream& stream);

// One uniform point per grid cell, cells visited in row-major id order,
// axes in order within a cell. Every point is guaranteed to index back
// to its own cell.
PointSet jittered(const GridPartition& grid, RandomStream& stream);

}  // namespace stardis
