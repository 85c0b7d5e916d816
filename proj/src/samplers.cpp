#include "stardis/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace stardis {

const char* sampler_kind_name(SamplerKind kind) noexcept {
  return kind == SamplerKind::jittered ? "jittered" : "simple";
}

std::optional<SamplerKind> parse_sampler_kind(std::string_view name) noexcept {
  if (name == "simple") return SamplerKind::simple;
  if (name == "jittered") return SamplerKind::jittered;
  return std::nullopt;
}

PointSet::PointSet(std::uint32_t dimension, std::uint64_t count)
    : dimension_(dimension), count_(count) {
  if (dimension == 0) throw std::domain_error("point set dimension must be positive");
  if (count == 0) throw std::domain_error("point set must hold at least one point");
  storage_.assign(static_cast<std::uint64_t>(dimension) * count, 0.0);
}

std::vector<double> PointSet::point(std::uint64_t i) const {
  std::vector<double> p(dimension_);
  for (std::uint32_t j = 0; j < dimension_; ++j) p[j] = coord(i, j);
  return p;
}

PointSet simple_random(std::uint64_t count, std::uint32_t dimension, RandomStream& stream) {
  PointSet points(dimension, count);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint32_t j = 0; j < dimension; ++j) points.coord(i, j) = stream.next_double();
  }
  points.provenance = Provenance{SamplerKind::simple, stream.seed(), 0};
  return points;
}

PointSet jittered(const GridPartition& grid, RandomStream& stream) {
  const std::uint32_t d = grid.dimension();
  const std::uint32_t m = grid.cells_per_axis();
  const auto axis_digit = [m](double v) {
    const auto g = static_cast<std::uint32_t>(v * m);
    return g >= m ? m - 1 : g;
  };
  PointSet points(d, grid.cell_count());
  std::vector<std::uint32_t> digits(d, 0);
  for (std::uint64_t id = 0; id < grid.cell_count(); ++id) {
    grid.cell_digits(id, digits);
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t k = digits[j];
      double p = (k + stream.next_double()) / m;
      // (k + u)/m can round onto a neighbouring cell when m is not a
      // power of two; nudge until the coordinate indexes back to cell k.
      while (axis_digit(p) > k) p = std::nextafter(p, 0.0);
      while (axis_digit(p) < k) p = std::nextafter(p, 1.0);
      points.coord(id, j) = p;
    }
  }
  points.provenance = Provenance{SamplerKind::jittered, stream.seed(), m};
  return points;
}

}  // namespace stardis
