#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stardis/geometry.hpp"
#include "stardis/samplers.hpp"

namespace stardis {

enum class BoxConvention { closed, open };

// Signed local discrepancy empirical_fraction - volume of the box, with
// membership counted per the convention.
double local_discrepancy(const PointSet& points, const AnchoredBox& box, BoxConvention convention);

enum class DiscrepancySide { over, under };

struct DiscrepancyResult {
  double value = 0.0;
  std::vector<double> witness;
  DiscrepancySide side = DiscrepancySide::over;
};

inline constexpr double kDefaultWorkGuard = 1e8;

// Exact star discrepancy via the per-axis candidate grids (the distinct
// point coordinates plus 1). Throws resource_error when N^d exceeds the
// guard; use a delta cover instead at that scale. The witness is the
// lexicographically smallest maximizing corner; side records whether the
// box over-covers (closed count too high) or under-covers (open count
// too low) at the witness.
DiscrepancyResult exact_star_discrepancy(const PointSet& points,
                                         double work_guard = kDefaultWorkGuard);

// Corner lattice {(i_1/M, ..., i_d/M) : 1 <= i_j <= M} with M >= d/delta.
// Evaluating the closed-count discrepancy over the lattice is within
// delta of the exact star discrepancy.
struct DeltaCover {
  std::uint32_t dimension = 0;
  double delta = 0.0;
  std::uint64_t resolution = 0;  // M

  std::uint64_t corner_count() const;  // M^d
};

DeltaCover build_delta_cover(std::uint32_t dimension, double delta);

// Closed-form cardinality bound 2^d e^d / sqrt(2 pi d) * (1/delta + 1)^d.
double cover_cardinality_bound(std::uint32_t dimension, double delta);

double cover_discrepancy(const PointSet& points, const DeltaCover& cover,
                         double work_guard = kDefaultWorkGuard);

// Same scan, also reporting the maximizing corner. side is the sign of
// the closed-count deviation there; value always equals the absolute
// local discrepancy at the witness under the closed convention.
DiscrepancyResult cover_discrepancy_result(const PointSet& points, const DeltaCover& cover,
                                           double work_guard = kDefaultWorkGuard);

}  // namespace stardis
