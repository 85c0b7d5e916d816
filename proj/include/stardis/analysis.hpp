#pragma once

#include <cstdint>

#include "stardis/geometry.hpp"

namespace stardis {

// Variance of the number of stratified points (one uniform point per
// grid cell) falling in the box: sum over cells of p_i (1 - p_i) with
// p_i = N * vol(cell_i intersect box).
double stratified_count_variance(const GridPartition& grid, const AnchoredBox& box);

// Same quantity in the factorized closed form
// N * vol(box) - N^2 * prod_j sum_k overlap_jk^2.
double stratified_count_variance_product_form(const GridPartition& grid, const AnchoredBox& box);

// Variance of the count under N i.i.d. uniform points: N v (1 - v).
double simple_count_variance(std::uint64_t point_count, const AnchoredBox& box);

struct VarianceComparison {
  double stratified = 0.0;
  double simple = 0.0;
  double gap = 0.0;  // simple - stratified, nonnegative
};

VarianceComparison variance_comparison(const GridPartition& grid, const AnchoredBox& box);

// Bernstein tail for a sum of independent centered terms bounded by
// magnitude_bound, with variance_sum the sum of term variances:
// 2 exp(-lambda^2 / (2 variance_sum + (2/3) magnitude_bound lambda)).
// lambda = 0 returns the trivial bound 2.
double bernstein_tail_bound(double variance_sum, double magnitude_bound, double lambda);

// Bernstein tail multiplied by the (N+1)^d-corner union factor
// (2e)^d / sqrt(2 pi d) * (N+1)^d, with the magnitude bound fixed at 1.
double union_tail_bound(std::uint32_t dimension, std::uint64_t point_count, double variance_sum,
                        double lambda);
double union_tail_bound_log(std::uint32_t dimension, std::uint64_t point_count,
                            double variance_sum, double lambda);

// A(d, q, N) = d ln(2e) + d ln(N+1) - ln(2 pi d)/2 - ln(1 - q).
double bound_exponent_a(std::uint32_t dimension, double failure_mass, std::uint64_t point_count);

// Discrepancy levels exceeded with probability at most q:
// (sqrt(2) sigma0 + 1) A / N, and the sharper
// sqrt(2 sigma0^2 A + A^2 / 9) / N + (A + 3) / (3 N).
double high_prob_discrepancy_bound(std::uint32_t dimension, double failure_mass,
                                   std::uint64_t point_count, double sigma0);
double high_prob_discrepancy_bound_sharp(std::uint32_t dimension, double failure_mass,
                                         std::uint64_t point_count, double sigma0);

// Constants of the affine form t(q) = c1 - c0 ln(1 - q) of the first
// high-probability bound: c0 = (sqrt(2) sigma0 + 1) / N and c1 = c0 times
// the q-independent part of A.
struct BoundConstants {
  double c0 = 0.0;
  double c1 = 0.0;
};

BoundConstants bound_constants(std::uint32_t dimension, std::uint64_t point_count, double sigma0);

}  // namespace stardis
