#include "stardis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace stardis {

namespace {

double union_log_prefactor(std::uint32_t dimension, std::uint64_t point_count) {
  const double d = dimension;
  return d * std::log(2.0 * std::numbers::e) +
         d * std::log(static_cast<double>(point_count) + 1.0) -
         0.5 * std::log(2.0 * std::numbers::pi * d);
}

double bernstein_exponent(double variance_sum, double magnitude_bound, double lambda) {
  if (lambda == 0.0) return 0.0;
  return -lambda * lambda / (2.0 * variance_sum + (2.0 / 3.0) * magnitude_bound * lambda);
}

void check_tail_args(double variance_sum, double lambda) {
  if (variance_sum < 0.0) throw std::domain_error("variance sum must be nonnegative");
  if (lambda < 0.0) throw std::domain_error("lambda must be nonnegative");
}

}  // namespace

double stratified_count_variance(const GridPartition& grid, const AnchoredBox& box) {
  if (box.dimension() != grid.dimension()) throw std::domain_error("box dimension mismatch");
  const std::uint32_t d = grid.dimension();
  const std::uint32_t m = grid.cells_per_axis();
  const auto n = static_cast<double>(grid.cell_count());
  long double sum = 0.0L;
  std::vector<std::uint32_t> digits(d, 0);
  for (std::uint64_t id = 0;; ++id) {
    double volume = 1.0;
    for (std::uint32_t j = 0; j < d; ++j) {
      const double lo = grid.axis_lower(digits[j]);
      const double hi = std::min(grid.axis_upper(digits[j]), box.corner(j));
      if (hi <= lo) {
        volume = 0.0;
        break;
      }
      volume *= hi - lo;
    }
    const double p = n * volume;
    sum += static_cast<long double>(p) * (1.0L - static_cast<long double>(p));

    std::uint32_t j = d;
    while (j-- > 0) {
      if (++digits[j] < m) break;
      digits[j] = 0;
    }
    if (j == std::numeric_limits<std::uint32_t>::max()) break;
  }
  return static_cast<double>(sum);
}

double stratified_count_variance_product_form(const GridPartition& grid, const AnchoredBox& box) {
  if (box.dimension() != grid.dimension()) throw std::domain_error("box dimension mismatch");
  const auto n = static_cast<double>(grid.cell_count());
  long double sum_sq = 1.0L;
  for (std::uint32_t j = 0; j < grid.dimension(); ++j) {
    long double axis = 0.0L;
    for (std::uint32_t k = 0; k < grid.cells_per_axis(); ++k) {
      const double lo = grid.axis_lower(k);
      const double hi = std::min(grid.axis_upper(k), box.corner(j));
      if (hi > lo) {
        const long double o = hi - lo;
        axis += o * o;
      }
    }
    sum_sq *= axis;
  }
  return static_cast<double>(n * box.volume() - n * n * sum_sq);
}

double simple_count_variance(std::uint64_t point_count, const AnchoredBox& box) {
  if (point_count == 0) throw std::domain_error("point count must be positive");
  const double v = box.volume();
  return static_cast<double>(point_count) * v * (1.0 - v);
}

VarianceComparison variance_comparison(const GridPartition& grid, const AnchoredBox& box) {
  VarianceComparison out;
  out.stratified = stratified_count_variance(grid, box);
  out.simple = simple_count_variance(grid.cell_count(), box);
  out.gap = out.simple - out.stratified;
  return out;
}

double bernstein_tail_bound(double variance_sum, double magnitude_bound, double lambda) {
  check_tail_args(variance_sum, lambda);
  if (!(magnitude_bound > 0.0)) throw std::domain_error("magnitude bound must be positive");
  return 2.0 * std::exp(bernstein_exponent(variance_sum, magnitude_bound, lambda));
}

double union_tail_bound_log(std::uint32_t dimension, std::uint64_t point_count,
                            double variance_sum, double lambda) {
  if (dimension == 0) throw std::domain_error("dimension must be positive");
  if (point_count == 0) throw std::domain_error("point count must be positive");
  check_tail_args(variance_sum, lambda);
  return union_log_prefactor(dimension, point_count) +
         bernstein_exponent(variance_sum, 1.0, lambda);
}

double union_tail_bound(std::uint32_t dimension, std::uint64_t point_count, double variance_sum,
                        double lambda) {
  return std::exp(union_tail_bound_log(dimension, point_count, variance_sum, lambda));
}

double bound_exponent_a(std::uint32_t dimension, double failure_mass, std::uint64_t point_count) {
  if (dimension == 0) throw std::domain_error("dimension must be positive");
  if (point_count == 0) throw std::domain_error("point count must be positive");
  if (!(failure_mass >= 0.0 && failure_mass < 1.0)) {
    throw std::domain_error("failure mass must lie in [0,1)");
  }
  return union_log_prefactor(dimension, point_count) - std::log1p(-failure_mass);
}

double high_prob_discrepancy_bound(std::uint32_t dimension, double failure_mass,
                                   std::uint64_t point_count, double sigma0) {
  if (sigma0 < 0.0) throw std::domain_error("sigma0 must be nonnegative");
  if (!(failure_mass > 0.0 && failure_mass < 1.0)) {
    throw std::domain_error("failure mass must lie in (0,1)");
  }
  const double a = bound_exponent_a(dimension, failure_mass, point_count);
  return (std::numbers::sqrt2 * sigma0 + 1.0) * a / static_cast<double>(point_count);
}

double high_prob_discrepancy_bound_sharp(std::uint32_t dimension, double failure_mass,
                                         std::uint64_t point_count, double sigma0) {
  if (sigma0 < 0.0) throw std::domain_error("sigma0 must be nonnegative");
  if (!(failure_mass > 0.0 && failure_mass < 1.0)) {
    throw std::domain_error("failure mass must lie in (0,1)");
  }
  const double a = bound_exponent_a(dimension, failure_mass, point_count);
  const auto n = static_cast<double>(point_count);
  return std::sqrt(2.0 * sigma0 * sigma0 * a + a * a / 9.0) / n + (a + 3.0) / (3.0 * n);
}

BoundConstants bound_constants(std::uint32_t dimension, std::uint64_t point_count, double sigma0) {
  if (dimension == 0) throw std::domain_error("dimension must be positive");
  if (point_count == 0) throw std::domain_error("point count must be positive");
  if (sigma0 < 0.0) throw std::domain_error("sigma0 must be nonnegative");
  BoundConstants out;
  out.c0 = (std::numbers::sqrt2 * sigma0 + 1.0) / static_cast<double>(point_count);
  out.c1 = out.c0 * union_log_prefactor(dimension, point_count);
  return out;
}

}  // namespace stardis
