#include "stardis/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "stardis/errors.hpp"
#include "stardis/kernels/box_count.hpp"

namespace stardis {

namespace {

double box_volume(std::span<const double> corner) {
  double v = 1.0;
  for (double c : corner) v *= c;
  return v;
}

// Lexicographic odometer over per-axis index ranges, last axis fastest.
// Returns false once every combination has been visited.
bool advance_odometer(std::span<std::size_t> idx, std::span<const std::size_t> radix) {
  std::size_t j = idx.size();
  while (j-- > 0) {
    if (++idx[j] < radix[j]) return true;
    idx[j] = 0;
  }
  return false;
}

}  // namespace

double local_discrepancy(const PointSet& points, const AnchoredBox& box,
                         BoxConvention convention) {
  if (box.dimension() != points.dimension()) throw std::domain_error("box dimension mismatch");
  const auto counts = kernels::box_count(points.data(), points.size(), points.dimension(),
                                         box.corner().data());
  const auto inside = convention == BoxConvention::closed ? counts.closed : counts.open;
  return static_cast<double>(inside) / static_cast<double>(points.size()) - box.volume();
}

DiscrepancyResult exact_star_discrepancy(const PointSet& points, double work_guard) {
  const std::uint32_t d = points.dimension();
  const std::uint64_t n = points.size();
  if (std::pow(static_cast<double>(n), static_cast<double>(d)) > work_guard) {
    throw resource_error("exact star discrepancy needs N^d within the work guard; "
                         "use a delta cover for sets this large");
  }

  std::vector<std::vector<double>> grid(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    const auto axis = points.axis_coords(j);
    auto& g = grid[j];
    g.assign(axis.begin(), axis.end());
    for (double c : g) {
      if (!(c >= 0.0 && c <= 1.0)) throw std::domain_error("points must lie in [0,1]^d");
    }
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }

  std::vector<std::size_t> radix(d);
  for (std::uint32_t j = 0; j < d; ++j) radix[j] = grid[j].size();
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> corner(d);

  DiscrepancyResult best;
  best.value = -1.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  do {
    for (std::uint32_t j = 0; j < d; ++j) corner[j] = grid[j][idx[j]];
    const auto counts = kernels::box_count(points.data(), n, d, corner.data());
    const double volume = box_volume(corner);
    const double over = static_cast<double>(counts.closed) * inv_n - volume;
    const double under = volume - static_cast<double>(counts.open) * inv_n;
    if (over > best.value) {
      best.value = over;
      best.witness = corner;
      best.side = DiscrepancySide::over;
    }
    if (under > best.value) {
      best.value = under;
      best.witness = corner;
      best.side = DiscrepancySide::under;
    }
  } while (advance_odometer(idx, radix));
  return best;
}

std::uint64_t DeltaCover::corner_count() const {
  if (resolution == 0) throw std::domain_error("cover has no corners");
  std::uint64_t count = 1;
  for (std::uint32_t j = 0; j < dimension; ++j) {
    if (count > std::numeric_limits<std::uint64_t>::max() / resolution) {
      throw std::domain_error("cover corner count overflows 64 bits");
    }
    count *= resolution;
  }
  return count;
}

DeltaCover build_delta_cover(std::uint32_t dimension, double delta) {
  if (dimension == 0) throw std::domain_error("cover dimension must be positive");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must lie in (0,1]");
  const long double ratio = static_cast<long double>(dimension) / static_cast<long double>(delta);
  auto resolution = static_cast<std::uint64_t>(std::ceil(ratio));
  if (static_cast<long double>(resolution) < ratio) ++resolution;
  return DeltaCover{dimension, delta, resolution};
}

double cover_cardinality_bound(std::uint32_t dimension, double delta) {
  if (dimension == 0) throw std::domain_error("cover dimension must be positive");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must lie in (0,1]");
  const double d = dimension;
  return std::pow(2.0 * std::numbers::e, d) / std::sqrt(2.0 * std::numbers::pi * d) *
         std::pow(1.0 / delta + 1.0, d);
}

DiscrepancyResult cover_discrepancy_result(const PointSet& points, const DeltaCover& cover,
                                           double work_guard) {
  if (cover.dimension != points.dimension()) throw std::domain_error("cover dimension mismatch");
  if (cover.resolution == 0) throw std::domain_error("cover has no corners");
  if (std::pow(static_cast<double>(cover.resolution), static_cast<double>(cover.dimension)) >
      work_guard) {
    throw resource_error("delta cover corner count exceeds the work guard; "
                         "use a coarser delta");
  }

  const std::uint32_t d = cover.dimension;
  const std::uint64_t n = points.size();
  const std::uint64_t m = cover.resolution;
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<std::size_t> radix(d, m);
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> corner(d);

  DiscrepancyResult best;
  best.value = -1.0;
  do {
    for (std::uint32_t j = 0; j < d; ++j) {
      corner[j] = static_cast<double>(idx[j] + 1) / static_cast<double>(m);
    }
    const auto counts = kernels::box_count(points.data(), n, d, corner.data());
    const double deviation = static_cast<double>(counts.closed) * inv_n - box_volume(corner);
    if (std::abs(deviation) > best.value) {
      best.value = std::abs(deviation);
      best.witness = corner;
      best.side = deviation >= 0.0 ? DiscrepancySide::over : DiscrepancySide::under;
    }
  } while (advance_odometer(idx, radix));
  return best;
}

double cover_discrepancy(const PointSet& points, const DeltaCover& cover, double work_guard) {
  return cover_discrepancy_result(points, cover, work_guard).value;
}

}  // namespace stardis
