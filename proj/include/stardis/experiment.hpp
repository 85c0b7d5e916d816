#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stardis/samplers.hpp"

namespace stardis {

enum class DiscrepancyMethod { automatic, exact, cover };

const char* discrepancy_method_name(DiscrepancyMethod method) noexcept;

struct RunConfig {
  std::uint32_t dimension = 2;
  std::uint32_t cells_per_axis = 2;
  std::vector<SamplerKind> samplers{SamplerKind::simple, SamplerKind::jittered};
  std::uint64_t replications = 2;
  std::uint64_t master_seed = 0;
  DiscrepancyMethod method = DiscrepancyMethod::automatic;
  double delta = 0.0;  // cover resolution; 0 means 1/N
  double confidence = 0.99;

  std::uint64_t point_count() const;  // m^d, shared by both samplers
  void validate() const;
  DiscrepancyMethod resolved_method() const;
  double resolved_delta() const;
};

// Sample moments of one sampler's replicated discrepancies.
struct DiscrepancySummary {
  SamplerKind kind = SamplerKind::simple;
  std::vector<double> samples;
  double mean = 0.0;
  double stddev = 0.0;        // n-1 denominator
  double standard_error = 0.0;
};

// Replication k of the sampler at position p in config.samplers uses the
// stream derived from index 2 * k + p, so every (replication, sampler)
// pair gets an independent stream and the assignment is invariant to
// threading and to running the samplers separately.
DiscrepancySummary estimate_expected_discrepancy(const RunConfig& config, SamplerKind kind,
                                                 unsigned threads = 1);

struct ExperimentResult {
  RunConfig config;
  std::vector<DiscrepancySummary> summaries;  // config.samplers order
  double difference = 0.0;                    // simple mean - jittered mean
  double ci_low = 0.0;
  double ci_high = 0.0;
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 0.0;  // two-sided Welch test of equal means
  std::string verdict;   // confirmed / contradicted / inconclusive
  double runtime_seconds = 0.0;
};

// Runs both configured samplers and compares their mean discrepancies
// with a Welch interval at config.confidence. verdict is confirmed when
// the whole interval is above zero, contradicted when below.
ExperimentResult compare_samplers(const RunConfig& config, unsigned threads = 1);

// E[X] = integral over t of P(X >= t), evaluated exactly for the
// empirical distribution of samples in [0,1]. Agrees with the arithmetic
// mean up to rounding; used as an independent route to the estimate.
double tail_integral_expectation(std::span<const double> samples);

struct WelchComparison {
  double difference = 0.0;
  double standard_error = 0.0;
  double degrees_of_freedom = 0.0;
  double t_statistic = 0.0;
  double p_value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

WelchComparison welch_compare(std::span<const double> first, std::span<const double> second,
                              double confidence);

}  // namespace stardis
